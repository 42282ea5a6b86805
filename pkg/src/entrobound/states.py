"""Density matrices, validation, and random-state generators.

Generators take an explicit ``numpy.random.Generator`` so that every trial of an
experiment can own an independent counter-based stream (see :func:`trial_rng`).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, NormalizationError, NotAStateError
from .linalg import (
    Spectrum,
    as_matrix,
    hermitian_part,
    partial_trace,
    require_hermitian,
    schatten_norm,
    tensor,
)

# Eigenvalues may undershoot zero by at most this much before validation fails.
PSD_TOL = 1e-10
# Allowed deviation of the trace from one.
TRACE_TOL = 1e-10
# One-norm threshold under which two reduced states count as equal marginals.
MARGINAL_TOL = 1e-9

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated state: Hermitian PSD matrix of unit trace with a cached spectrum."""

    matrix: np.ndarray
    spectrum: Spectrum

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _assemble_state(values: np.ndarray, vectors: np.ndarray) -> DensityMatrix:
    # values must be ascending; tiny negatives are clamped and the rest rescaled.
    clamped = np.clip(values, 0.0, None)
    clamped /= clamped.sum()
    matrix = hermitian_part((vectors * clamped) @ vectors.conj().T)
    return DensityMatrix(matrix, Spectrum(clamped, "ascending"))


def validate_state(operand) -> DensityMatrix:
    """Check Hermiticity, positivity and normalization; return the wrapped state.

    Eigenvalues in [-PSD_TOL, 0) are clamped to zero and the spectrum renormalized.
    """
    a = require_hermitian(operand)
    values, vectors = np.linalg.eigh(a)
    if values[0] < -PSD_TOL:
        raise NotAStateError(f"eigenvalue {values[0]:.3e} is below -{PSD_TOL:.0e}")
    trace = float(values.sum())
    if abs(trace - 1.0) > TRACE_TOL:
        raise NormalizationError(f"trace {trace!r} is not 1 within {TRACE_TOL:.0e}")
    return _assemble_state(values, vectors)


def maximally_mixed(dim: int) -> DensityMatrix:
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    return DensityMatrix(np.eye(dim, dtype=complex) / dim, Spectrum(np.full(dim, 1.0 / dim), "ascending"))


def _complex_gaussian(shape, rng: np.random.Generator) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / _SQRT2


def random_mixed(dim: int, rank: int | None = None, *, rng: np.random.Generator) -> DensityMatrix:
    """Draw from the rank-constrained Hilbert-Schmidt (Ginibre) ensemble.

    rho = G G* / tr(G G*) with G a dim x rank standard complex Gaussian matrix;
    rank defaults to dim (the unconstrained Hilbert-Schmidt measure).
    """
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    if rank is None:
        rank = dim
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must lie in [1, {dim}], got {rank}")
    g = _complex_gaussian((dim, rank), rng)
    w = g @ g.conj().T
    return validate_state(w / np.trace(w).real)


def random_pure(dim: int, *, rng: np.random.Generator) -> DensityMatrix:
    """Haar-random pure state |psi><psi| (Gaussian vector, normalized)."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    v = _complex_gaussian(dim, rng)
    norm = np.linalg.norm(v)
    while norm < 1e-12:  # probability zero, but never divide by ~0
        v = _complex_gaussian(dim, rng)
        norm = np.linalg.norm(v)
    v /= norm
    values = np.zeros(dim)
    values[-1] = 1.0
    return DensityMatrix(np.outer(v, v.conj()), Spectrum(values, "ascending"))


def tightness_pair(dim: int, epsilon: float, psi: np.ndarray | None = None) -> tuple[DensityMatrix, DensityMatrix]:
    """Saturating pair: rho2 = |psi><psi|, rho1 = (1-eps)|psi><psi| + eps/(d-1) (1-|psi><psi|).

    Trace distance between the two is exactly eps; both entropy-difference bounds
    below are tight on this family.
    """
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    if psi is None:
        v = np.zeros(dim, dtype=complex)
        v[0] = 1.0
    else:
        v = np.asarray(psi, dtype=complex)
        if v.shape != (dim,):
            raise DimensionMismatchError(f"psi must have shape ({dim},), got {v.shape}")
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise ValueError("psi must be a nonzero vector")
        v = v / norm
    p = np.outer(v, v.conj())
    rest = (np.eye(dim, dtype=complex) - p) * (epsilon / (dim - 1))
    matrix1 = (1.0 - epsilon) * p + rest
    values1 = np.sort(np.concatenate(([1.0 - epsilon], np.full(dim - 1, epsilon / (dim - 1)))))
    rho1 = DensityMatrix(hermitian_part(matrix1), Spectrum(values1, "ascending"))
    values2 = np.zeros(dim)
    values2[-1] = 1.0
    rho2 = DensityMatrix(p, Spectrum(values2, "ascending"))
    return rho1, rho2


@dataclass(frozen=True, eq=False)
class BipartitePair:
    """Two states on the same A x B product space, A-major composite index."""

    rho1: DensityMatrix
    rho2: DensityMatrix
    dims: tuple[int, int]
    equal_marginals: bool = field(default=False)

    def __post_init__(self):
        d_a, d_b = self.dims
        if d_a * d_b != self.rho1.dim or self.rho1.dim != self.rho2.dim:
            raise DimensionMismatchError(
                f"dims {self.dims} do not match state dimensions {self.rho1.dim}, {self.rho2.dim}"
            )
        if self.equal_marginals:
            gap = marginal_gap(self)
            if gap > MARGINAL_TOL:
                raise ValueError(f"B marginals differ by {gap:.3e} in trace norm")


def marginal_gap(pair: BipartitePair) -> float:
    """One-norm distance between the two B marginals."""
    m1 = partial_trace(pair.rho1.matrix, pair.dims, "B")
    m2 = partial_trace(pair.rho2.matrix, pair.dims, "B")
    return schatten_norm(m1 - m2, 1)


def _random_traceless_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    h = hermitian_part(_complex_gaussian((dim, dim), rng))
    return h - (np.trace(h).real / dim) * np.eye(dim)


def random_equal_marginal_pair(
    d_a: int, d_b: int, strength: float = 1.0, *, rng: np.random.Generator
) -> BipartitePair:
    """Random pair of bipartite states with identical B marginals.

    rho2 = rho1 + t K where K is a random traceless Hermitian direction with
    tr_A K = 0 exactly, and t = strength * lambda_min(rho1) / ||K||_inf, so rho2
    stays PSD for strength <= 1.
    """
    if d_a < 2 or d_b < 2:
        raise ValueError(f"local dimensions must be >= 2, got ({d_a}, {d_b})")
    if not 0.0 < strength <= 1.0:
        raise ValueError(f"strength must lie in (0, 1], got {strength}")
    dim = d_a * d_b
    rho1 = random_mixed(dim, rng=rng)
    tau_a = np.eye(d_a, dtype=complex) / d_a
    for _ in range(8):
        k0 = _random_traceless_hermitian(dim, rng)
        k = k0 - tensor(tau_a, partial_trace(k0, (d_a, d_b), "B"))
        k_norm = float(np.abs(np.linalg.eigvalsh(k)).max())
        if k_norm > 1e-12:
            break
    else:
        raise RuntimeError("could not draw a nonzero marginal-preserving direction")
    t = strength * rho1.spectrum.values[0] / k_norm
    rho2 = validate_state(rho1.matrix + t * k)
    return BipartitePair(rho1, rho2, (d_a, d_b), equal_marginals=True)


def trial_rng(seed: int, index: int = 0) -> np.random.Generator:
    """Counter-based per-trial stream: Philox keyed by (seed, trial index).

    Streams for distinct indices are independent regardless of evaluation order,
    which keeps experiment output invariant under any parallel schedule.
    """
    if seed < 0 or index < 0:
        raise ValueError("seed and index must be nonnegative")
    key = np.array([seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
