"""Exception types shared across the package."""


class NotHermitianError(ValueError):
    """Matrix is not square or not Hermitian within tolerance."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class NotAStateError(ValueError):
    """Matrix has an eigenvalue too negative to be a density matrix."""


class NormalizationError(NotAStateError):
    """Matrix trace is too far from one to be a density matrix."""


class IdenticalStatesError(ValueError):
    """The two states coincide within tolerance, so the sign decomposition is undefined."""


class FeasibilityError(ValueError):
    """Input violates a positivity or feasibility precondition."""


class NumericalFaultError(ArithmeticError):
    """A quantity that must be finite under the stated hypotheses came out non-finite."""
