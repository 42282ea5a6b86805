"""Continuity bounds for entropies built on the sign decomposition.

Every calculator returns a BoundEvaluation with the left- and right-hand side in
nats. ``applicable`` is False when a hypothesis of the statement fails for the
given inputs, in which case rhs is NaN and the slack is meaningless.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decomposition import JordanHahn, jordan_hahn
from .entropies import binary_entropy, conditional_entropy, dmax, relative_entropy, von_neumann
from .errors import NumericalFaultError
from .linalg import partial_trace, rank_tolerance, schatten_norm, tensor, trace_distance
from .states import MARGINAL_TOL, BipartitePair, DensityMatrix, marginal_gap

# Below this trace distance a pair counts as degenerate (lhs = rhs = 0 convention).
DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class BoundEvaluation:
    name: str
    lhs: float
    rhs: float
    applicable: bool = True

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


def _degenerate(name: str) -> BoundEvaluation:
    return BoundEvaluation(name, 0.0, 0.0, True)


def _not_applicable(name: str, lhs: float = math.nan) -> BoundEvaluation:
    return BoundEvaluation(name, lhs, math.nan, False)


def _clip_unit(epsilon: float) -> float:
    # trace distances can overshoot [0, 1] by rounding only
    return min(max(epsilon, 0.0), 1.0)


def _require_finite(name: str, **values: float) -> None:
    for label, value in values.items():
        if not math.isfinite(value):
            raise NumericalFaultError(f"{name}: {label} is not finite ({value!r})")


def af_bound(rho1: DensityMatrix, rho2: DensityMatrix) -> BoundEvaluation:
    """Dimension-based entropy continuity bound (Audenaert-Fannes):
    |S(rho1) - S(rho2)| <= eps ln(d - 1) + h(eps)."""
    name = "af"
    epsilon = trace_distance(rho1, rho2)
    if epsilon < DEGENERATE_TOL or rho1.dim < 2:
        return _degenerate(name)
    lhs = abs(von_neumann(rho1) - von_neumann(rho2))
    rhs = epsilon * math.log(rho1.dim - 1) + binary_entropy(_clip_unit(epsilon))
    return BoundEvaluation(name, lhs, rhs)


def entropy_difference_bound(
    rho1: DensityMatrix, rho2: DensityMatrix, *, decomposition: JordanHahn | None = None
) -> BoundEvaluation:
    """S(rho1) - S(rho2) <= eps (S(rho_plus) - S(rho_minus)) + h(eps).

    The lhs is signed; swapping the arguments flips the roles of the two parts.
    Raises IdenticalStatesError for coinciding inputs.
    """
    jh = decomposition if decomposition is not None else jordan_hahn(rho1, rho2)
    lhs = von_neumann(rho1) - von_neumann(rho2)
    rhs = jh.epsilon * (von_neumann(jh.rho_plus) - von_neumann(jh.rho_minus)) + binary_entropy(
        _clip_unit(jh.epsilon)
    )
    return BoundEvaluation("entropy-difference", lhs, rhs)


def entropy_difference_residual_bound(
    rho1: DensityMatrix, rho2: DensityMatrix, *, decomposition: JordanHahn | None = None
) -> BoundEvaluation:
    """Two-sided form: |S(rho1) - S(rho2) - eps (S(rho_plus) - S(rho_minus))| <= h(eps)."""
    jh = decomposition if decomposition is not None else jordan_hahn(rho1, rho2)
    difference = von_neumann(rho1) - von_neumann(rho2)
    centered = difference - jh.epsilon * (von_neumann(jh.rho_plus) - von_neumann(jh.rho_minus))
    return BoundEvaluation(
        "entropy-difference-residual", abs(centered), binary_entropy(_clip_unit(jh.epsilon))
    )


def orthogonal_divergence_gap(
    rho: DensityMatrix, sigma: DensityMatrix, omega, t: float
) -> BoundEvaluation:
    """D(rho || omega) - D(sigma || omega) <= ln(1/t - 1) for orthogonal rho, sigma
    and any omega >= t * rho containing both supports."""
    name = "orthogonal-divergence-gap"
    if not 0.0 < t < 1.0:
        raise ValueError(f"t must lie in (0, 1), got {t}")
    overlap = float(np.trace(rho.matrix @ sigma.matrix).real)
    if overlap > 1e-12:
        return _not_applicable(name)
    omega_m = np.asarray(getattr(omega, "matrix", omega), dtype=complex)
    floor = float(np.linalg.eigvalsh(omega_m - t * rho.matrix)[0])
    if floor < -1e-10:
        return _not_applicable(name)
    d_rho = relative_entropy(rho, omega_m)
    d_sigma = relative_entropy(sigma, omega_m)
    if math.isinf(d_rho) or math.isinf(d_sigma):
        return _not_applicable(name)
    return BoundEvaluation(name, d_rho - d_sigma, math.log(1.0 / t - 1.0))


def conditional_entropy_bound(pair: BipartitePair) -> BoundEvaluation:
    """|S(A|B)_rho1 - S(A|B)_rho2| <= eps ln(d_A^2 - 1) + h(eps) for equal B marginals."""
    name = "conditional"
    if marginal_gap(pair) > MARGINAL_TOL:
        return _not_applicable(name)
    epsilon = trace_distance(pair.rho1, pair.rho2)
    if epsilon < DEGENERATE_TOL:
        return _degenerate(name)
    jh = jordan_hahn(pair.rho1, pair.rho2)
    part_gap = schatten_norm(
        partial_trace(jh.rho_plus.matrix, pair.dims, "B")
        - partial_trace(jh.rho_minus.matrix, pair.dims, "B"),
        1,
    )
    # compare at the scale of the raw difference: the normalized parts carry
    # eigensolver noise amplified by 1/eps, which is spurious for tiny eps
    if jh.epsilon * part_gap > MARGINAL_TOL:
        return _not_applicable(name)
    d_a = pair.dims[0]
    lhs = abs(conditional_entropy(pair.rho1, pair.dims) - conditional_entropy(pair.rho2, pair.dims))
    rhs = epsilon * math.log(d_a * d_a - 1) + binary_entropy(_clip_unit(epsilon))
    return BoundEvaluation(name, lhs, rhs)


def _log_expm1(x: float) -> float:
    # ln(e^x - 1), accurate near zero
    return math.log(math.expm1(x))


def _is_full_rank(sigma: DensityMatrix) -> bool:
    values = sigma.spectrum.values
    return float(values[0]) > rank_tolerance(values)


def relent_bound_fixed_second(
    rho1: DensityMatrix, rho2: DensityMatrix, sigma: DensityMatrix
) -> BoundEvaluation:
    """|D(rho1||sigma) - D(rho2||sigma)| <= eps ln(e^M - 1) + h(eps) with
    M = max(dmax(rho_plus||sigma), dmax(rho_minus||sigma)); sigma must be full rank."""
    name = "relent-fixed-second"
    if not _is_full_rank(sigma):
        return _not_applicable(name)
    jh = jordan_hahn(rho1, rho2)
    d1 = relative_entropy(rho1, sigma)
    d2 = relative_entropy(rho2, sigma)
    _require_finite(name, d1=d1, d2=d2)
    m = max(dmax(jh.rho_plus, sigma), dmax(jh.rho_minus, sigma))
    _require_finite(name, dmax=m)
    rhs = jh.epsilon * _log_expm1(m) + binary_entropy(_clip_unit(jh.epsilon))
    return BoundEvaluation(name, abs(d1 - d2), rhs)


def relent_self_bound(rho: DensityMatrix, sigma: DensityMatrix) -> BoundEvaluation:
    """D(rho||sigma) <= eps ln(e^M - 1) + h(eps) with M = dmax(rho_plus||sigma),
    where rho_plus comes from the decomposition of rho - sigma."""
    name = "relent-self"
    epsilon = trace_distance(rho, sigma)
    if epsilon < DEGENERATE_TOL:
        return _degenerate(name)
    jh = jordan_hahn(rho, sigma)
    lhs = relative_entropy(rho, sigma)
    if math.isinf(lhs):
        return _not_applicable(name, lhs=math.inf)
    m = dmax(jh.rho_plus, sigma)
    if math.isinf(m):
        return _not_applicable(name, lhs=lhs)
    rhs = jh.epsilon * _log_expm1(m) + binary_entropy(_clip_unit(jh.epsilon))
    return BoundEvaluation(name, lhs, rhs)


def relent_bound_both(
    rho1: DensityMatrix, rho2: DensityMatrix, sigma1: DensityMatrix, sigma2: DensityMatrix
) -> BoundEvaluation:
    """Both inputs move: |D(rho1||sigma1) - D(rho2||sigma2)| <=
    eps ln(e^M - 1) + h(eps) + ln(1 + delta / lambda_min), with
    M = max(dmax(rho_plus||sigma1), dmax(rho_minus||sigma2)),
    delta the trace distance of the references and lambda_min their smallest eigenvalue."""
    name = "relent-both"
    if not (_is_full_rank(sigma1) and _is_full_rank(sigma2)):
        return _not_applicable(name)
    d1 = relative_entropy(rho1, sigma1)
    d2 = relative_entropy(rho2, sigma2)
    _require_finite(name, d1=d1, d2=d2)
    delta = trace_distance(sigma1, sigma2)
    lam = min(float(sigma1.spectrum.values[0]), float(sigma2.spectrum.values[0]))
    epsilon = trace_distance(rho1, rho2)
    if epsilon < DEGENERATE_TOL:
        first = 0.0
        h_term = 0.0
    else:
        jh = jordan_hahn(rho1, rho2)
        m = max(dmax(jh.rho_plus, sigma1), dmax(jh.rho_minus, sigma2))
        _require_finite(name, dmax=m)
        first = jh.epsilon * _log_expm1(m)
        h_term = binary_entropy(_clip_unit(jh.epsilon))
    rhs = first + h_term + math.log1p(delta / lam)
    return BoundEvaluation(name, abs(d1 - d2), rhs)


def gour_bound(rho1: DensityMatrix, rho2: DensityMatrix, sigma: DensityMatrix) -> BoundEvaluation:
    """Competitor bound requiring both states to dominate the difference:
    |D(rho1||sigma) - D(rho2||sigma)| <= max_i ln(1 + ||rho1 - rho2||_inf /
    (lambda_min(rho_i) lambda_min(sigma))), valid when min_i lambda_min(rho_i)
    exceeds ||rho1 - rho2||_inf."""
    name = "gour"
    if not _is_full_rank(sigma):
        return _not_applicable(name)
    lhs = abs(relative_entropy(rho1, sigma) - relative_entropy(rho2, sigma))
    inf_norm = schatten_norm(rho1.matrix - rho2.matrix, math.inf)
    lam1 = float(rho1.spectrum.values[0])
    lam2 = float(rho2.spectrum.values[0])
    if min(lam1, lam2) <= inf_norm or min(lam1, lam2) <= 0.0:
        return _not_applicable(name, lhs=lhs)
    lam_sigma = float(sigma.spectrum.values[0])
    rhs = max(
        math.log1p(inf_norm / (lam1 * lam_sigma)),
        math.log1p(inf_norm / (lam2 * lam_sigma)),
    )
    return BoundEvaluation(name, lhs, rhs)


def bluhm_bound_fixed(epsilon: float, lambda_min_sigma: float) -> float:
    """Competitor bound for a fixed full-rank reference:
    eps ln(1/lambda_min) + (1 + eps) h(eps / (1 + eps))."""
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")
    if not 0.0 < lambda_min_sigma <= 1.0:
        raise ValueError(f"lambda_min must lie in (0, 1], got {lambda_min_sigma}")
    return epsilon * math.log(1.0 / lambda_min_sigma) + (1.0 + epsilon) * binary_entropy(
        epsilon / (1.0 + epsilon)
    )


def bluhm_bound_both(epsilon: float, delta: float, lambda_min: float) -> float:
    """Competitor bound when both inputs move; collapses to a fixed-reference form
    with lambda/2 in place of lambda when delta = 0."""
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"delta must lie in [0, 1], got {delta}")
    if not 0.0 < lambda_min <= 1.0:
        raise ValueError(f"lambda_min must lie in (0, 1], got {lambda_min}")
    denom = 1.0 - lambda_min / 2.0
    first = (epsilon + 3.0 * delta / denom) * math.log(2.0 / lambda_min)
    second = (1.0 + epsilon) * binary_entropy(epsilon / (1.0 + epsilon))
    third = 2.0 * math.log1p((2.0 * delta / lambda_min) / (denom + delta))
    return first + second + third


def equal_marginal_part_bound(pair: BipartitePair) -> BoundEvaluation:
    """dmax(rho_minus || tau_A x (tr_A rho_minus)) <= ln(d_A^2) for equal-marginal pairs.

    This is the structural fact that feeds the conditional-entropy bound."""
    name = "equal-marginal-part"
    if marginal_gap(pair) > MARGINAL_TOL:
        return _not_applicable(name)
    epsilon = trace_distance(pair.rho1, pair.rho2)
    if epsilon < DEGENERATE_TOL:
        return _degenerate(name)
    jh = jordan_hahn(pair.rho1, pair.rho2)
    d_a = pair.dims[0]
    tau_a = np.eye(d_a, dtype=complex) / d_a
    reference = tensor(tau_a, partial_trace(jh.rho_minus.matrix, pair.dims, "B"))
    value = dmax(jh.rho_minus, reference)
    if math.isinf(value):
        return _not_applicable(name, lhs=math.inf)
    return BoundEvaluation(name, value, math.log(d_a * d_a))
