"""Entropic quantities in nats: Shannon, von Neumann, conditional, relative, D_max."""
from __future__ import annotations

import math

import numpy as np

from .errors import DimensionMismatchError
from .linalg import as_matrix, partial_trace, rank_tolerance, require_hermitian
from .states import PSD_TOL, DensityMatrix


def eta(u: float) -> float:
    """-u ln u, continuously extended by eta(0) = 0; defined for u >= 0."""
    if u < 0:
        raise ValueError(f"eta is undefined for negative input {u!r}")
    if u == 0.0:
        return 0.0
    return -u * math.log(u)


def shannon(p) -> float:
    """Shannon entropy sum_i eta(p_i) of a nonnegative vector, in nats.

    The vector need not be normalized; entries within PSD_TOL below zero are
    treated as zero, anything more negative raises.
    """
    arr = np.asarray(p, dtype=float)
    if arr.size and float(arr.min()) < -PSD_TOL:
        raise ValueError(f"entry {float(arr.min()):.3e} is negative beyond tolerance")
    positive = arr[arr > 0.0]
    return float(-(positive * np.log(positive)).sum())


def binary_entropy(epsilon: float) -> float:
    """h(eps) = eta(eps) + eta(1 - eps) on [0, 1]."""
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"binary entropy argument must lie in [0, 1], got {epsilon!r}")
    return eta(epsilon) + eta(1.0 - epsilon)


def von_neumann(rho: DensityMatrix) -> float:
    """S(rho) = -tr(rho ln rho), evaluated on the cached spectrum."""
    return shannon(rho.spectrum.values)


def conditional_entropy(rho_ab: DensityMatrix, dims: tuple[int, int]) -> float:
    """S(A|B) = S(rho_AB) - S(rho_B)."""
    marginal = partial_trace(rho_ab.matrix, dims, "B")
    values = np.clip(np.linalg.eigvalsh(marginal), 0.0, None)
    return von_neumann(rho_ab) - shannon(values)


def _support_split(sigma) -> tuple[np.ndarray, np.ndarray, int]:
    """Eigendecompose PSD sigma, returning support eigenvalues, vectors and dim."""
    a = require_hermitian(sigma)
    values, vectors = np.linalg.eigh(a)
    if values[0] < -PSD_TOL * max(1.0, abs(float(values[-1]))):
        raise ValueError("second argument must be positive semi-definite")
    tol = rank_tolerance(values)
    support = values > tol
    return values[support], vectors[:, support], a.shape[0]


def relative_entropy(rho: DensityMatrix, sigma) -> float:
    """D(rho || sigma) = tr(rho ln rho) - tr(rho ln sigma), in nats.

    sigma may be any PSD matrix (normalization is not required); if the support
    of rho leaks outside the support of sigma the divergence is +inf.
    """
    w, v, dim = _support_split(sigma)
    if v.shape[0] != rho.dim:
        raise DimensionMismatchError(f"dimension mismatch {rho.dim} vs {v.shape[0]}")
    t = rho.matrix @ v
    diag = np.einsum("ij,ij->j", v.conj(), t).real
    if w.size < dim:
        kernel_mass = 1.0 - float(diag.sum())
        if kernel_mass > rank_tolerance(rho.spectrum.values):
            return math.inf
    cross = float((diag * np.log(w)).sum())
    return -shannon(rho.spectrum.values) - cross


def dmax(rho: DensityMatrix, sigma) -> float:
    """Max-divergence ln lambda_max(sigma^{-1/2} rho sigma^{-1/2}) on the support.

    +inf when rho has weight outside the support of sigma.
    """
    w, v, dim = _support_split(sigma)
    if v.shape[0] != rho.dim:
        raise DimensionMismatchError(f"dimension mismatch {rho.dim} vs {v.shape[0]}")
    block = v.conj().T @ rho.matrix @ v
    if w.size < dim:
        kernel_mass = 1.0 - float(np.trace(block).real)
        if kernel_mass > rank_tolerance(rho.spectrum.values):
            return math.inf
    inv_sqrt = 1.0 / np.sqrt(w)
    m = block * inv_sqrt[:, None] * inv_sqrt[None, :]
    return float(math.log(np.linalg.eigvalsh(m)[-1]))
