"""Dense Hermitian linear algebra helpers used throughout the package.

All matrices are small (dimension <= a few dozen), dense and complex; everything
funnels through ``numpy.linalg.eigh``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionMismatchError, NotHermitianError

# Hermiticity check, relative to the largest entry.
HERM_TOL = 1e-12
# An eigenvalue counts as zero iff it is below RANK_TOL * max(1, largest |eigenvalue|).
RANK_TOL = 1e-10
# Projector validation (idempotence, mutual orthogonality, sum below identity).
PROJECTOR_TOL = 1e-10


def as_matrix(operand) -> np.ndarray:
    """Coerce an array-like or a density-matrix wrapper to a complex ndarray."""
    return np.asarray(getattr(operand, "matrix", operand), dtype=complex)


def hermitian_part(a: np.ndarray) -> np.ndarray:
    return (a + a.conj().T) / 2.0


def require_hermitian(operand, tol: float = HERM_TOL) -> np.ndarray:
    """Return the input as a complex ndarray, raising if it is not Hermitian.

    The tolerance is relative to max(1, largest absolute entry).
    """
    a = as_matrix(operand)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise NotHermitianError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.abs(a).max()))
    if float(np.abs(a - a.conj().T).max()) > tol * scale:
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    return a


def rank_tolerance(values: np.ndarray) -> float:
    """Threshold below which an eigenvalue of this spectrum counts as zero."""
    return RANK_TOL * max(1.0, float(np.abs(values).max()))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalue vector carrying an explicit sort-order tag."""

    values: np.ndarray
    order: str = "unsorted"

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if self.order not in ("unsorted", "ascending", "descending"):
            raise ValueError(f"unknown order tag {self.order!r}")
        if self.order == "ascending" and np.any(np.diff(values) < 0):
            raise ValueError("values are not ascending")
        if self.order == "descending" and np.any(np.diff(values) > 0):
            raise ValueError("values are not descending")

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Ascending eigenvalues plus the matching orthonormal eigenvector columns."""

    spectrum: Spectrum
    vectors: np.ndarray


def hermitian_eigensystem(operand) -> EigenSystem:
    """Full eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    a = require_hermitian(operand)
    values, vectors = np.linalg.eigh(a)
    return EigenSystem(Spectrum(values, "ascending"), vectors)


def recompose(values: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """Assemble sum_i values[i] |v_i><v_i| from eigenvector columns."""
    return hermitian_part((vectors * values) @ vectors.conj().T)


def schatten_norm(operand, p) -> float:
    """Schatten p-norm of a Hermitian matrix; p >= 1 or inf."""
    if not p >= 1:
        raise ValueError(f"Schatten order must be >= 1, got {p!r}")
    values = np.abs(np.linalg.eigvalsh(require_hermitian(operand)))
    if math.isinf(p):
        return float(values.max())
    if p == 1:
        return float(values.sum())
    return float((values**p).sum() ** (1.0 / p))


def trace_distance(rho1, rho2) -> float:
    """Half the trace norm of the difference of two states (or Hermitian matrices)."""
    a = as_matrix(rho1)
    b = as_matrix(rho2)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch {a.shape} vs {b.shape}")
    return 0.5 * schatten_norm(a - b, 1)


def min_eigenvalue(operand) -> float:
    return float(np.linalg.eigvalsh(require_hermitian(operand))[0])


def max_eigenvalue(operand) -> float:
    return float(np.linalg.eigvalsh(require_hermitian(operand))[-1])


def spectral_function(operand, f: Callable[[float], float], on_support_only: bool = False) -> np.ndarray:
    """Apply a scalar function to the spectrum, f(H) = sum f(lambda_i) |v_i><v_i|.

    With ``on_support_only`` eigenvalues within rank tolerance of zero are skipped
    and contribute nothing. A function value that is undefined, non-finite or
    complex at a retained eigenvalue raises ValueError.
    """
    system = hermitian_eigensystem(operand)
    values = system.spectrum.values
    tol = rank_tolerance(values)
    out = np.zeros_like(values)
    for i, v in enumerate(values):
        if on_support_only and abs(v) <= tol:
            continue
        try:
            y = float(f(v))
        except (ValueError, ZeroDivisionError, OverflowError, TypeError) as exc:
            raise ValueError(f"scalar function undefined at eigenvalue {v!r}") from exc
        if not math.isfinite(y):
            raise ValueError(f"scalar function non-finite at eigenvalue {v!r}")
        out[i] = y
    return recompose(out, system.vectors)


def tensor(a, b) -> np.ndarray:
    """Kronecker product; composite index runs A-major, i = i_A * d_B + i_B."""
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace(operand, dims: tuple[int, int], keep: str) -> np.ndarray:
    """Trace out one tensor factor of a bipartite matrix.

    :param dims: (d_A, d_B) local dimensions, A-major composite index.
    :param keep: "A" keeps the first factor, "B" the second.
    """
    a = as_matrix(operand)
    d_a, d_b = dims
    if d_a < 1 or d_b < 1:
        raise DimensionMismatchError(f"local dimensions must be positive, got {dims}")
    if a.ndim != 2 or a.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatchError(f"matrix shape {a.shape} does not match dims {dims}")
    r4 = a.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return np.ascontiguousarray(np.einsum("ibjb->ij", r4))
    if keep == "B":
        return np.ascontiguousarray(np.einsum("aiaj->ij", r4))
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def pinch(operand, projectors) -> np.ndarray:
    """sum_i P_i tau P_i for mutually orthogonal projectors with sum <= identity."""
    tau = require_hermitian(operand)
    ps = [require_hermitian(p) for p in projectors]
    if not ps:
        raise ValueError("at least one projector is required")
    for p in ps:
        if p.shape != tau.shape:
            raise DimensionMismatchError(f"projector shape {p.shape} does not match {tau.shape}")
        if float(np.abs(p @ p - p).max()) > PROJECTOR_TOL:
            raise ValueError("input is not a projector within tolerance")
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if float(np.abs(ps[i] @ ps[j]).max()) > PROJECTOR_TOL:
                raise ValueError("projector ranges are not mutually orthogonal")
    total = np.sum(ps, axis=0)
    if float(np.linalg.eigvalsh(total)[-1]) > 1.0 + PROJECTOR_TOL:
        raise ValueError("projectors sum above the identity")
    out = np.zeros_like(tau)
    for p in ps:
        out += p @ tau @ p
    return hermitian_part(out)
