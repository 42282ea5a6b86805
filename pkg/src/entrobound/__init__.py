"""Continuity bounds for quantum entropies via the sign decomposition of a
difference of states, with Monte-Carlo verification experiments."""

from .bounds import (
    BoundEvaluation,
    af_bound,
    bluhm_bound_both,
    bluhm_bound_fixed,
    conditional_entropy_bound,
    entropy_difference_bound,
    entropy_difference_residual_bound,
    equal_marginal_part_bound,
    gour_bound,
    orthogonal_divergence_gap,
    relent_bound_both,
    relent_bound_fixed_second,
    relent_self_bound,
)
from .decomposition import JordanHahn, delta_spectrum_split, jordan_hahn
from .entropies import (
    binary_entropy,
    conditional_entropy,
    dmax,
    eta,
    relative_entropy,
    shannon,
    von_neumann,
)
from .errors import (
    DimensionMismatchError,
    FeasibilityError,
    IdenticalStatesError,
    NormalizationError,
    NotAStateError,
    NotHermitianError,
    NumericalFaultError,
)
from .linalg import (
    EigenSystem,
    Spectrum,
    hermitian_eigensystem,
    partial_trace,
    pinch,
    schatten_norm,
    spectral_function,
    tensor,
    trace_distance,
)
from .majorization import (
    MajorizationReport,
    entropy_shift_bound,
    lidskii_check,
    majorizes,
    min_eigenvalue_shift_bound,
    random_feasible_omega,
    simplex_optimum_gap,
    variational_gap,
)
from .states import (
    BipartitePair,
    DensityMatrix,
    maximally_mixed,
    random_equal_marginal_pair,
    random_mixed,
    random_pure,
    tightness_pair,
    trial_rng,
    validate_state,
)

__version__ = "0.1.0"

__all__ = [
    "BipartitePair",
    "BoundEvaluation",
    "DensityMatrix",
    "DimensionMismatchError",
    "EigenSystem",
    "FeasibilityError",
    "IdenticalStatesError",
    "JordanHahn",
    "MajorizationReport",
    "NormalizationError",
    "NotAStateError",
    "NotHermitianError",
    "NumericalFaultError",
    "Spectrum",
    "af_bound",
    "binary_entropy",
    "bluhm_bound_both",
    "bluhm_bound_fixed",
    "conditional_entropy",
    "conditional_entropy_bound",
    "delta_spectrum_split",
    "dmax",
    "entropy_difference_bound",
    "entropy_difference_residual_bound",
    "entropy_shift_bound",
    "equal_marginal_part_bound",
    "eta",
    "gour_bound",
    "hermitian_eigensystem",
    "jordan_hahn",
    "lidskii_check",
    "majorizes",
    "maximally_mixed",
    "min_eigenvalue_shift_bound",
    "orthogonal_divergence_gap",
    "partial_trace",
    "pinch",
    "random_equal_marginal_pair",
    "random_feasible_omega",
    "random_mixed",
    "random_pure",
    "relative_entropy",
    "relent_bound_both",
    "relent_bound_fixed_second",
    "relent_self_bound",
    "schatten_norm",
    "shannon",
    "simplex_optimum_gap",
    "spectral_function",
    "tensor",
    "tightness_pair",
    "trace_distance",
    "trial_rng",
    "validate_state",
    "variational_gap",
    "von_neumann",
]
