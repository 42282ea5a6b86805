"""Jordan-Hahn sign decomposition of a difference of density matrices.

rho1 - rho2 = eps * (rho_plus - rho_minus) with rho_plus, rho_minus states of
mutually orthogonal support and eps half the trace norm of the difference.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, IdenticalStatesError
from .linalg import Spectrum, hermitian_part, rank_tolerance
from .states import DensityMatrix

# Below this trace distance the pair counts as identical and the split is undefined.
IDENTICAL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class JordanHahn:
    """Sign decomposition of delta = rho1 - rho2.

    epsilon: half trace norm of delta (= trace of the positive part).
    rho_plus / rho_minus: normalized positive / negative parts.
    rank_plus: rank of the positive part; at most dim - 1.
    """

    epsilon: float
    rho_plus: DensityMatrix
    rho_minus: DensityMatrix
    delta: np.ndarray
    rank_plus: int


def _signed_part(values: np.ndarray, vectors: np.ndarray, dim: int) -> DensityMatrix:
    # values: strictly positive retained eigenvalues, arbitrary order.
    weight = values.sum()
    normalized = values / weight
    matrix = hermitian_part((vectors * normalized) @ vectors.conj().T)
    padded = np.sort(np.concatenate((np.zeros(dim - values.size), normalized)))
    return DensityMatrix(matrix, Spectrum(padded, "ascending"))


def jordan_hahn(rho1: DensityMatrix, rho2: DensityMatrix) -> JordanHahn:
    """Split rho1 - rho2 into its positive and negative parts.

    Eigenvalues within rank tolerance of zero belong to neither part. Raises
    IdenticalStatesError when the states agree within IDENTICAL_TOL.
    """
    if rho1.dim != rho2.dim:
        raise DimensionMismatchError(f"dimension mismatch {rho1.dim} vs {rho2.dim}")
    delta = rho1.matrix - rho2.matrix
    values, vectors = np.linalg.eigh(delta)
    if 0.5 * float(np.abs(values).sum()) < IDENTICAL_TOL:
        raise IdenticalStatesError("states coincide within tolerance")
    tol = rank_tolerance(values)
    positive = values > tol
    negative = values < -tol
    if not positive.any() or not negative.any():
        raise IdenticalStatesError("difference sits entirely below rank tolerance")
    epsilon = float(values[positive].sum())
    rho_plus = _signed_part(values[positive], vectors[:, positive], rho1.dim)
    rho_minus = _signed_part(-values[negative], vectors[:, negative], rho1.dim)
    return JordanHahn(epsilon, rho_plus, rho_minus, delta, int(positive.sum()))


def delta_spectrum_split(decomposition: JordanHahn) -> tuple[np.ndarray, np.ndarray]:
    """Descending spectra (a, b) of the two parts, trimmed to complementary lengths.

    a holds the k = rank_plus leading eigenvalues of rho_plus, b holds the first
    d - k entries of the descending spectrum of rho_minus (zero-padded when the
    difference has a kernel), so that the descending spectrum of delta equals
    (eps * a, -eps * reversed(b)).
    """
    dim = decomposition.rho_plus.dim
    k = decomposition.rank_plus
    plus_desc = decomposition.rho_plus.spectrum.values[::-1]
    minus_desc = decomposition.rho_minus.spectrum.values[::-1]
    return plus_desc[:k].copy(), minus_desc[: dim - k].copy()
