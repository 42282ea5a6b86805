"""Majorization checks and the spectral inequalities behind the entropy bounds."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decomposition import JordanHahn
from .entropies import eta, shannon
from .errors import DimensionMismatchError, FeasibilityError
from .linalg import require_hermitian
from .states import PSD_TOL, DensityMatrix, random_mixed, validate_state

# Partial sums may undershoot by this much before majorization is declared broken.
PARTIAL_SUM_TOL = 1e-10
# The full sums must agree this tightly for majorization to make sense.
TOTAL_SUM_TOL = 1e-9


@dataclass(frozen=True)
class MajorizationReport:
    holds: bool
    worst_partial_sum_gap: float
    failing_k: int | None = None


def majorizes(y, x) -> MajorizationReport:
    """Does y majorize x? Partial descending sums of y dominate those of x.

    worst_partial_sum_gap is the most negative dominance margin over all prefixes;
    failing_k is the first prefix length that breaks (the full length when only
    the total sums disagree).
    """
    ya = np.sort(np.asarray(y, dtype=float))[::-1]
    xa = np.sort(np.asarray(x, dtype=float))[::-1]
    if ya.shape != xa.shape:
        raise DimensionMismatchError(f"length mismatch {ya.size} vs {xa.size}")
    if ya.size == 0:
        raise ValueError("vectors must be nonempty")
    gaps = np.cumsum(ya) - np.cumsum(xa)
    worst = float(gaps.min())
    totals_agree = abs(float(gaps[-1])) <= TOTAL_SUM_TOL
    holds = worst >= -PARTIAL_SUM_TOL and totals_agree
    failing_k = None
    if worst < -PARTIAL_SUM_TOL:
        failing_k = int(np.argmax(gaps < -PARTIAL_SUM_TOL)) + 1
    elif not totals_agree:
        failing_k = int(ya.size)
    return MajorizationReport(holds, worst, failing_k)


def lidskii_check(a, b) -> MajorizationReport:
    """lambda_desc(A) + lambda_asc(B) is majorized by lambda(A + B)."""
    ha = require_hermitian(a)
    hb = require_hermitian(b)
    if ha.shape != hb.shape:
        raise DimensionMismatchError(f"shape mismatch {ha.shape} vs {hb.shape}")
    asc_b = np.linalg.eigvalsh(hb)
    desc_a = np.linalg.eigvalsh(ha)[::-1]
    y = np.linalg.eigvalsh(ha + hb)
    return majorizes(y, desc_a + asc_b)


def min_eigenvalue_shift_bound(omega, delta) -> tuple[float, float]:
    """lambda_min(omega + delta) <= min_j (lambda_desc_j(delta) + lambda_asc_j(omega)).

    Returns (lhs, rhs); the inequality holds for all Hermitian inputs.
    """
    ho = require_hermitian(omega)
    hd = require_hermitian(delta)
    if ho.shape != hd.shape:
        raise DimensionMismatchError(f"shape mismatch {ho.shape} vs {hd.shape}")
    asc_omega = np.linalg.eigvalsh(ho)
    desc_delta = np.linalg.eigvalsh(hd)[::-1]
    lhs = float(np.linalg.eigvalsh(ho + hd)[0])
    rhs = float((desc_delta + asc_omega).min())
    return lhs, rhs


def entropy_shift_bound(omega, delta) -> tuple[float, float]:
    """S(omega + delta) <= H(lambda_desc(delta) + lambda_asc(omega)) for omega + delta PSD.

    omega itself need not be positive. Returns (lhs, rhs).
    """
    ho = require_hermitian(omega)
    hd = require_hermitian(delta)
    if ho.shape != hd.shape:
        raise DimensionMismatchError(f"shape mismatch {ho.shape} vs {hd.shape}")
    total = np.linalg.eigvalsh(ho + hd)
    if float(total[0]) < -PSD_TOL:
        raise FeasibilityError(f"omega + delta has eigenvalue {float(total[0]):.3e}")
    mixed = np.linalg.eigvalsh(hd)[::-1] + np.linalg.eigvalsh(ho)
    lhs = shannon(np.clip(total, 0.0, None))
    rhs = shannon(np.clip(mixed, 0.0, None))
    return lhs, rhs


def _entropy_of_sum(state: DensityMatrix, delta: np.ndarray) -> float:
    values = np.linalg.eigvalsh(state.matrix + delta)
    if float(values[0]) < -PSD_TOL:
        raise FeasibilityError(f"omega + delta has eigenvalue {float(values[0]):.3e}")
    return shannon(np.clip(values, 0.0, None))


def variational_gap(omega: DensityMatrix, decomposition: JordanHahn) -> float:
    """Margin by which omega = rho_minus maximizes S(omega + delta) - S(omega).

    Nonnegative for every feasible omega (omega + delta PSD); zero at rho_minus.
    """
    if omega.dim != decomposition.rho_minus.dim:
        raise DimensionMismatchError(
            f"dimension mismatch {omega.dim} vs {decomposition.rho_minus.dim}"
        )
    delta = decomposition.delta
    best = _entropy_of_sum(decomposition.rho_minus, delta) - shannon(
        decomposition.rho_minus.spectrum.values
    )
    candidate = _entropy_of_sum(omega, delta) - shannon(omega.spectrum.values)
    return best - candidate


def random_feasible_omega(decomposition: JordanHahn, *, rng: np.random.Generator) -> DensityMatrix:
    """Draw a state omega with omega + delta PSD.

    Walks from rho_minus (always feasible) toward a Hilbert-Schmidt draw, with the
    step length bisected against the minimum eigenvalue; lambda_min is concave
    along the segment, so everything below the boundary stays feasible.
    """
    delta = decomposition.delta
    rho_minus = decomposition.rho_minus
    nu = random_mixed(rho_minus.dim, rng=rng)

    def feasible(s: float) -> bool:
        mix = (1.0 - s) * rho_minus.matrix + s * nu.matrix
        return float(np.linalg.eigvalsh(mix + delta)[0]) >= -1e-12

    if feasible(1.0):
        s_max = 1.0
    else:
        lo, hi = 0.0, 1.0
        for _ in range(40):
            mid = 0.5 * (lo + hi)
            if feasible(mid):
                lo = mid
            else:
                hi = mid
        s_max = lo
    s = float(rng.uniform(0.0, s_max))
    return validate_state((1.0 - s) * rho_minus.matrix + s * nu.matrix)


def simplex_optimum_gap(z, b, epsilon: float) -> float:
    """Margin of the simplex Lagrange optimum: the shifted-entropy objective
    sum_j [eta(z_j - eps b_j) - eta(z_j)] is maximized over feasible z at z = b.

    z and b are probability vectors with z_j >= eps * b_j; returns the objective
    at b minus the objective at z, which is nonnegative.
    """
    za = np.asarray(z, dtype=float)
    ba = np.asarray(b, dtype=float)
    if za.shape != ba.shape:
        raise DimensionMismatchError(f"length mismatch {za.size} vs {ba.size}")
    if not 0.0 <= epsilon < 1.0:
        raise ValueError(f"epsilon must lie in [0, 1), got {epsilon}")
    for name, vec in (("z", za), ("b", ba)):
        if vec.size and float(vec.min()) < -1e-12:
            raise ValueError(f"{name} has a negative entry")
        if abs(float(vec.sum()) - 1.0) > 1e-9:
            raise ValueError(f"{name} does not sum to 1")
    slack = za - epsilon * ba
    if float(slack.min()) < -1e-12:
        raise FeasibilityError("z_j >= eps * b_j violated")
    slack = np.clip(slack, 0.0, None)
    at_b = sum(eta((1.0 - epsilon) * bj) - eta(bj) for bj in ba)
    at_z = sum(eta(sj) - eta(zj) for sj, zj in zip(slack, za))
    return float(at_b - at_z)
