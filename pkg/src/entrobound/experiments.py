"""Monte-Carlo experiment drivers: the bound-comparison figure run and the
randomized verification suites behind the ``verify`` subcommand.

Each trial draws from its own counter-based stream (Philox keyed by master seed
and trial index), so results are reproducible and independent of scheduling.
"""
from __future__ import annotations

import csv
import math
import os
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .bounds import (
    af_bound,
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
from .decomposition import delta_spectrum_split, jordan_hahn
from .entropies import binary_entropy, conditional_entropy, dmax, relative_entropy, shannon, von_neumann
from .errors import IdenticalStatesError, NumericalFaultError
from .linalg import partial_trace, pinch, schatten_norm, tensor, trace_distance
from .majorization import (
    entropy_shift_bound,
    lidskii_check,
    min_eigenvalue_shift_bound,
    random_feasible_omega,
    simplex_optimum_gap,
    variational_gap,
)
from .states import (
    DensityMatrix,
    random_equal_marginal_pair,
    random_mixed,
    random_pure,
    tightness_pair,
    trial_rng,
    validate_state,
)

CSV_HEADER = (
    "trial_index,dim,epsilon,delta,lhs_actual,bound_new,bound_gour,"
    "gour_applicable,bound_bluhm,slack_new,lambda_min_sigma"
)

ENSEMBLES = ("hilbert-schmidt", "pure")
SUITES = ("lidskii", "theorem1", "conditional", "relent", "dmax", "proof-lemmas", "all")

STANDARD_DIMS = (2, 3, 5, 8, 15)
BIPARTITE_DIMS = ((2, 2), (2, 3), (3, 3))
VARIATIONAL_DIMS = (2, 3, 4)

TIGHTNESS_EPSILONS = (0.1, 0.25, 0.5, 0.9)
TIGHTNESS_DIMS = (2, 3, 8)


@dataclass(frozen=True)
class ExperimentConfig:
    dim: int = 15
    trials: int = 1000
    seed: int = 42
    tolerance: float = 1e-9
    ensemble: str = "hilbert-schmidt"
    output_path: str | None = None

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dim must be >= 2, got {self.dim}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.seed < 0:
            raise ValueError(f"seed must be nonnegative, got {self.seed}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.ensemble not in ENSEMBLES:
            raise ValueError(f"ensemble must be one of {ENSEMBLES}, got {self.ensemble!r}")


@dataclass(frozen=True)
class TrialRecord:
    trial_index: int
    dim: int
    epsilon: float
    delta: float | None
    lhs_actual: float
    bound_new: float
    bound_gour: float | None
    gour_applicable: bool
    bound_bluhm: float
    slack_new: float
    lambda_min_sigma: float


@dataclass(frozen=True)
class Figure1Summary:
    trials: int
    completed: int
    faults: int
    min_slack: float
    fraction_new_le_bluhm: float
    gour_applicable: int
    fraction_new_le_gour: float


def _figure1_trial(index: int, cfg: ExperimentConfig, rng: np.random.Generator) -> TrialRecord:
    dim = cfg.dim
    if cfg.ensemble == "pure":
        rho1 = random_pure(dim, rng=rng)
        rho2 = random_pure(dim, rng=rng)
    else:
        rho1 = random_mixed(dim, rng=rng)
        rho2 = random_mixed(dim, rng=rng)
    sigma = random_mixed(dim, rng=rng)

    evaluation = relent_bound_fixed_second(rho1, rho2, sigma)
    if not evaluation.applicable:
        raise NumericalFaultError("reference state was not full rank")
    epsilon = trace_distance(rho1, rho2)
    lam = float(sigma.spectrum.values[0])
    gour = gour_bound(rho1, rho2, sigma)
    bluhm = bluhm_bound_fixed(min(epsilon, 1.0), lam)
    record = TrialRecord(
        trial_index=index,
        dim=dim,
        epsilon=epsilon,
        delta=None,
        lhs_actual=evaluation.lhs,
        bound_new=evaluation.rhs,
        bound_gour=gour.rhs if gour.applicable else None,
        gour_applicable=gour.applicable,
        bound_bluhm=bluhm,
        slack_new=evaluation.slack,
        lambda_min_sigma=lam,
    )
    for label, value in (
        ("epsilon", record.epsilon),
        ("lhs_actual", record.lhs_actual),
        ("bound_new", record.bound_new),
        ("bound_bluhm", record.bound_bluhm),
        ("lambda_min_sigma", record.lambda_min_sigma),
    ):
        if not math.isfinite(value):
            raise NumericalFaultError(f"{label} is not finite in trial {index}")
    return record


def summarize(records: Iterable[TrialRecord], trials: int | None = None, faults: int = 0) -> Figure1Summary:
    """Recompute the summary from records alone (so a CSV round-trip agrees)."""
    records = list(records)
    completed = len(records)
    trials = completed + faults if trials is None else trials
    min_slack = min((r.slack_new for r in records), default=math.inf)
    le_bluhm = sum(1 for r in records if r.bound_new <= r.bound_bluhm)
    applicable = [r for r in records if r.gour_applicable and r.bound_gour is not None]
    le_gour = sum(1 for r in applicable if r.bound_new <= r.bound_gour)
    return Figure1Summary(
        trials=trials,
        completed=completed,
        faults=faults,
        min_slack=min_slack,
        fraction_new_le_bluhm=(le_bluhm / completed) if completed else 1.0,
        gour_applicable=len(applicable),
        fraction_new_le_gour=(le_gour / len(applicable)) if applicable else 1.0,
    )


def run_figure1(cfg: ExperimentConfig) -> tuple[list[TrialRecord], Figure1Summary]:
    """Compare the fixed-reference bounds on random state triples.

    Trials hitting a numerical fault (or a degenerate pair) are dropped and
    counted, never resampled, so trial indices stay aligned with their streams.
    """
    records: list[TrialRecord] = []
    faults = 0
    for index in range(cfg.trials):
        rng = trial_rng(cfg.seed, index)
        try:
            records.append(_figure1_trial(index, cfg, rng))
        except (NumericalFaultError, IdenticalStatesError):
            faults += 1
    return records, summarize(records, trials=cfg.trials, faults=faults)


def _format_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return format(value, ".12g")


def emit_csv(records: Iterable[TrialRecord], path: str) -> None:
    """Write records in the fixed comparison schema, 12 significant digits."""
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                _format_field(v)
                for v in (
                    r.trial_index,
                    r.dim,
                    r.epsilon,
                    r.delta,
                    r.lhs_actual,
                    r.bound_new,
                    r.bound_gour,
                    r.gour_applicable,
                    r.bound_bluhm,
                    r.slack_new,
                    r.lambda_min_sigma,
                )
            )
        )
    with open(path, "w", newline="") as handle:
        handle.write("\n".join(lines) + "\n")


def parse_csv(path: str) -> list[TrialRecord]:
    """Read back an emitted comparison CSV, enforcing the exact header."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError("empty CSV: missing header") from None
        if header != CSV_HEADER.split(","):
            raise ValueError(f"unexpected CSV header: {','.join(header)!r}")
        records = []
        for row_number, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 11:
                raise ValueError(f"row {row_number}: expected 11 fields, got {len(row)}")
            try:
                records.append(
                    TrialRecord(
                        trial_index=int(row[0]),
                        dim=int(row[1]),
                        epsilon=float(row[2]),
                        delta=float(row[3]) if row[3] else None,
                        lhs_actual=float(row[4]),
                        bound_new=float(row[5]),
                        bound_gour=float(row[6]) if row[6] else None,
                        gour_applicable={"true": True, "false": False}[row[7]],
                        bound_bluhm=float(row[8]),
                        slack_new=float(row[9]),
                        lambda_min_sigma=float(row[10]),
                    )
                )
            except (ValueError, KeyError) as exc:
                raise ValueError(f"row {row_number}: {exc}") from None
    return records


# ---------------------------------------------------------------------------
# verification suites


@dataclass(frozen=True)
class CheckOutcome:
    family: str
    check: str
    label: str
    trials: int
    failures: int
    worst_margin: float
    tolerance: float
    dump_path: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    outcomes: list[CheckOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)


def _dump_counterexample(directory: str, family: str, check: str, label: str, index: int, payload: dict) -> str:
    os.makedirs(directory, exist_ok=True)
    slug = re.sub(r"[^A-Za-z0-9]+", "", f"{label}")
    path = os.path.join(directory, f"counterexample_{family}_{check}_{slug}_trial{index}.npz")
    np.savez(path, **payload)
    return path


TrialFn = Callable[[int, np.random.Generator], tuple[dict, dict]]


def _run_family(
    family: str,
    label: str,
    cfg: ExperimentConfig,
    trial_fn: TrialFn,
    tolerances: dict[str, float] | None = None,
) -> list[CheckOutcome]:
    """Run trial_fn cfg.trials times; each call returns {check: margin} plus a
    payload of matrices for counterexample dumps. A margin below -tolerance is a
    failure (checks may carry their own tolerance via ``tolerances``)."""
    stats: dict[str, list] = {}
    dumps: dict[str, str] = {}
    counted: dict[str, int] = {}
    for index in range(cfg.trials):
        rng = trial_rng(cfg.seed, index)
        margins, payload = trial_fn(index, rng)
        for check, margin in margins.items():
            tolerance = (tolerances or {}).get(check, cfg.tolerance)
            entry = stats.setdefault(check, [0, math.inf, tolerance])
            counted[check] = counted.get(check, 0) + 1
            entry[1] = min(entry[1], margin)
            if margin < -tolerance:
                entry[0] += 1
                if check not in dumps and cfg.output_path is not None:
                    dumps[check] = _dump_counterexample(
                        cfg.output_path, family, check, label, index, payload
                    )
    return [
        CheckOutcome(family, check, label, counted[check], failures, worst, tolerance, dumps.get(check))
        for check, (failures, worst, tolerance) in stats.items()
    ]


def _random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (g + g.conj().T) / 2.0


def _random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    return np.linalg.eigh(_random_hermitian(dim, rng))[1]


def _mixed_rank_state(dim: int, rng: np.random.Generator) -> DensityMatrix:
    return random_mixed(dim, rank=int(rng.integers(1, dim + 1)), rng=rng)


def lidskii_outcomes(cfg: ExperimentConfig) -> list[CheckOutcome]:
    outcomes = []
    for dim in STANDARD_DIMS:

        def trial(index, rng, dim=dim):
            a = _random_hermitian(dim, rng)
            b = _random_hermitian(dim, rng)
            report = lidskii_check(a, b)
            margins = {
                "partial-sums": report.worst_partial_sum_gap,
                "holds": 0.0 if report.holds else -math.inf,
            }
            return margins, {"a": a, "b": b}

        outcomes += _run_family("lidskii", f"d={dim}", cfg, trial)
    return outcomes


def bound_outcomes(cfg: ExperimentConfig) -> list[CheckOutcome]:
    """Entropy-difference bound, its two-sided form, and the dominance chain
    down to the dimension-based bound, on mixed-rank random pairs."""
    outcomes = []
    for dim in STANDARD_DIMS:

        def trial(index, rng, dim=dim):
            rho1 = _mixed_rank_state(dim, rng)
            rho2 = _mixed_rank_state(dim, rng)
            try:
                jh = jordan_hahn(rho1, rho2)
            except IdenticalStatesError:
                return {}, {}
            payload = {"rho1": rho1.matrix, "rho2": rho2.matrix}
            main = entropy_difference_bound(rho1, rho2, decomposition=jh)
            residual = entropy_difference_residual_bound(rho1, rho2, decomposition=jh)
            af = af_bound(rho1, rho2)
            h_eps = binary_entropy(min(jh.epsilon, 1.0))
            middle = jh.epsilon * von_neumann(jh.rho_plus) + h_eps
            margins = {
                "bound-slack": main.slack,
                "residual-slack": residual.slack,
                "af-slack": af.slack,
                "rank-drop": float(dim - 1 - jh.rank_plus),
                "chain-vs-middle": middle - main.rhs,
                "chain-vs-af": af.rhs - middle,
            }
            return margins, payload

        outcomes += _run_family(
            "theorem1",
            f"d={dim}",
            cfg,
            trial,
            tolerances={"chain-vs-middle": 1e-10, "chain-vs-af": 1e-10, "rank-drop": 0.0},
        )
    return outcomes


def conditional_outcomes(cfg: ExperimentConfig) -> list[CheckOutcome]:
    outcomes = []
    for d_a, d_b in BIPARTITE_DIMS:

        def trial(index, rng, d_a=d_a, d_b=d_b):
            strength = float(rng.uniform(0.2, 1.0))
            pair = random_equal_marginal_pair(d_a, d_b, strength, rng=rng)
            payload = {"rho1": pair.rho1.matrix, "rho2": pair.rho2.matrix}
            evaluation = conditional_entropy_bound(pair)
            part = equal_marginal_part_bound(pair)
            margins = {
                "conditional-slack": evaluation.slack if evaluation.applicable else -math.inf,
                "part-dmax": part.slack if part.applicable else -math.inf,
            }
            try:
                jh = jordan_hahn(pair.rho1, pair.rho2)
            except IdenticalStatesError:
                return margins, payload
            tau_a = np.eye(d_a, dtype=complex) / d_a
            reference = tensor(tau_a, partial_trace(jh.rho_minus.matrix, pair.dims, "B"))
            gap = orthogonal_divergence_gap(jh.rho_minus, jh.rho_plus, reference, 1.0 / d_a**2)
            if gap.applicable:
                margins["orthogonal-gap"] = gap.slack
            return margins, payload

        outcomes += _run_family("conditional", f"dA={d_a},dB={d_b}", cfg, trial)
    return outcomes


def relent_outcomes(cfg: ExperimentConfig) -> list[CheckOutcome]:
    outcomes = []
    for dim in (5, 15):

        def trial(index, rng, dim=dim):
            rho1 = random_mixed(dim, rng=rng)
            rho2 = random_mixed(dim, rng=rng)
            sigma1 = random_mixed(dim, rng=rng)
            sigma2 = random_mixed(dim, rng=rng)
            payload = {
                "rho1": rho1.matrix,
                "rho2": rho2.matrix,
                "sigma1": sigma1.matrix,
                "sigma2": sigma2.matrix,
            }
            jh = jordan_hahn(rho1, rho2)
            fixed = relent_bound_fixed_second(rho1, rho2, sigma1)
            self_ev = relent_self_bound(rho1, sigma1)
            both = relent_bound_both(rho1, rho2, sigma1, sigma2)
            d1 = relative_entropy(rho1, sigma1)
            d2 = relative_entropy(rho2, sigma1)
            d_plus = relative_entropy(jh.rho_plus, sigma1)
            d_minus = relative_entropy(jh.rho_minus, sigma1)
            h_eps = binary_entropy(min(jh.epsilon, 1.0))
            dm_plus = dmax(jh.rho_plus, sigma1)
            dm_minus = dmax(jh.rho_minus, sigma1)
            lam = float(sigma1.spectrum.values[0])
            margins = {
                "fixed-slack": fixed.slack,
                "self-slack": self_ev.slack if self_ev.applicable else -math.inf,
                "both-slack": both.slack if both.applicable else -math.inf,
                "difference-vs-parts": jh.epsilon * (d_plus - d_minus) + h_eps - (d1 - d2),
                "parts-vs-dmax": min(
                    math.log(math.expm1(dm_plus)) - (d_plus - d_minus),
                    math.log(math.expm1(dm_minus)) - (d_minus - d_plus),
                ),
                "dominance-bluhm": bluhm_bound_fixed(min(jh.epsilon, 1.0), lam) - fixed.rhs,
                "norm-halving": 0.5 * schatten_norm(sigma2.matrix - sigma1.matrix, 1)
                - schatten_norm(sigma2.matrix - sigma1.matrix, math.inf),
            }
            return margins, payload

        outcomes += _run_family("relent", f"d={dim}", cfg, trial)
    return outcomes


def dmax_outcomes(cfg: ExperimentConfig) -> list[CheckOutcome]:
    outcomes = []
    for dim in STANDARD_DIMS:

        def trial(index, rng, dim=dim):
            rho = _mixed_rank_state(dim, rng)
            sigma = random_mixed(dim, rng=rng)
            payload = {"rho": rho.matrix, "sigma": sigma.matrix}
            value = dmax(rho, sigma)
            feasible = float(
                np.linalg.eigvalsh(math.exp(value) * sigma.matrix - rho.matrix)[0]
            )
            undershoot = float(
                np.linalg.eigvalsh(math.exp(value - 1e-6) * sigma.matrix - rho.matrix)[0]
            )
            base = relative_entropy(rho, sigma)
            scale_error = max(
                abs(relative_entropy(rho, c * sigma.matrix) - (base - math.log(c)))
                for c in (0.5, 2.0, float(dim))
            )
            dmax_scale_error = max(
                abs(dmax(rho, c * sigma.matrix) - (value - math.log(c))) for c in (0.5, 2.0)
            )
            margins = {
                "feasibility": feasible,
                "minimality": -undershoot,
                "relent-scaling": -scale_error,
                "dmax-scaling": -dmax_scale_error,
                "relent-nonneg": base,
                "self-zero": -abs(dmax(rho, rho)),
            }
            return margins, payload

        outcomes += _run_family(
            "dmax",
            f"d={dim}",
            cfg,
            trial,
            tolerances={"minimality": 0.0, "relent-nonneg": 1e-10},
        )
    return outcomes


def proof_lemma_outcomes(cfg: ExperimentConfig) -> list[CheckOutcome]:
    """Spectral inequalities and identities used to prove the entropy-difference
    bound, plus the variational and simplex optimality margins."""
    outcomes = []
    for dim in STANDARD_DIMS:

        def trial(index, rng, dim=dim):
            omega_h = _random_hermitian(dim, rng)
            delta_h = _random_hermitian(dim, rng)
            lhs1, rhs1 = min_eigenvalue_shift_bound(omega_h, delta_h)

            rho_a = _mixed_rank_state(dim, rng)
            rho_b = _mixed_rank_state(dim, rng)
            payload = {"omega": omega_h, "delta": delta_h, "rho_a": rho_a.matrix, "rho_b": rho_b.matrix}
            shift = rho_a.matrix - rho_b.matrix
            lhs2, rhs2 = entropy_shift_bound(rho_b.matrix, shift)
            margins = {
                "min-eig-shift": rhs1 - lhs1,
                "entropy-shift": rhs2 - lhs2,
            }
            try:
                jh = jordan_hahn(rho_a, rho_b)
            except IdenticalStatesError:
                jh = None
            if jh is not None:
                a_part, b_part = delta_spectrum_split(jh)
                rebuilt = np.concatenate((jh.epsilon * a_part, -jh.epsilon * b_part[::-1]))
                direct = np.linalg.eigvalsh(jh.delta)[::-1]
                margins["split-identity"] = -float(np.abs(np.sort(rebuilt) - np.sort(direct)).max())
                mixed = (
                    np.linalg.eigvalsh(jh.delta)[::-1]
                    + jh.rho_minus.spectrum.values
                )
                total = np.linalg.eigvalsh(jh.rho_minus.matrix + jh.delta)
                margins["minus-shift-identity"] = -float(
                    np.abs(np.sort(mixed) - np.sort(total)).max()
                )

            # commuting pair: the positive part can be subtracted from rho1 whole
            basis = _random_unitary(dim, rng)
            p = rng.dirichlet(np.ones(dim))
            q = rng.dirichlet(np.ones(dim))
            rho_c1 = validate_state((basis * p) @ basis.conj().T)
            rho_c2 = validate_state((basis * q) @ basis.conj().T)
            try:
                jh_c = jordan_hahn(rho_c1, rho_c2)
            except IdenticalStatesError:
                jh_c = None
            if jh_c is not None and jh_c.epsilon < 1.0 - 1e-12:
                residual = rho_c1.matrix - jh_c.epsilon * jh_c.rho_plus.matrix
                margins["commuting-positive"] = float(np.linalg.eigvalsh(residual)[0])
                omega_c = residual / (1.0 - jh_c.epsilon)
                rebuilt2 = (
                    jh_c.epsilon * jh_c.rho_minus.matrix + (1.0 - jh_c.epsilon) * omega_c
                )
                margins["commuting-reconstruction"] = -float(
                    np.abs(rebuilt2 - rho_c2.matrix).max()
                )

            m = int(rng.integers(2, 8))
            b_vec = rng.dirichlet(np.ones(m))
            q_vec = rng.dirichlet(np.ones(m))
            eps = float(rng.uniform(0.05, 0.95))
            z_vec = eps * b_vec + (1.0 - eps) * q_vec
            margins["simplex-optimum"] = simplex_optimum_gap(z_vec, b_vec, eps)
            return margins, payload

        outcomes += _run_family("proof-lemmas", f"d={dim}", cfg, trial)

    for dim in VARIATIONAL_DIMS:
        for instance in range(2):
            seed_rng = trial_rng(cfg.seed, 10_000 + 10 * dim + instance)
            rho1 = _mixed_rank_state(dim, seed_rng)
            rho2 = _mixed_rank_state(dim, seed_rng)
            try:
                jh = jordan_hahn(rho1, rho2)
            except IdenticalStatesError:
                continue

            def trial(index, rng, jh=jh):
                omega = random_feasible_omega(jh, rng=rng)
                margins = {"variational-gap": variational_gap(omega, jh)}
                return margins, {"omega": omega.matrix, "delta": jh.delta}

            outcomes += _run_family(
                "proof-lemmas", f"d={dim},instance={instance}", cfg, trial
            )
    return outcomes


def identity_outcomes(cfg: ExperimentConfig) -> list[CheckOutcome]:
    """Entropy identities the proofs lean on, checked on random instances."""
    outcomes = []

    def bipartite_trial(index, rng):
        d_a, d_b = BIPARTITE_DIMS[index % len(BIPARTITE_DIMS)]
        rho = random_mixed(d_a * d_b, rng=rng)
        payload = {"rho": rho.matrix}
        marginal = partial_trace(rho.matrix, (d_a, d_b), "B")
        reference = tensor(np.eye(d_a, dtype=complex), marginal)
        value = conditional_entropy(rho, (d_a, d_b))
        margins = {
            "conditional-vs-relative": -abs(value + relative_entropy(rho, reference)),
        }
        return margins, payload

    outcomes += _run_family("identities", "bipartite", cfg, bipartite_trial)

    def mixture_trial(index, rng):
        dim = STANDARD_DIMS[index % len(STANDARD_DIMS)]
        eps = float(rng.uniform(0.02, 0.98))
        rho = _mixed_rank_state(dim, rng)
        omega = _mixed_rank_state(dim, rng)
        payload = {"rho": rho.matrix, "omega": omega.matrix}
        mix = validate_state(eps * rho.matrix + (1.0 - eps) * omega.matrix)
        s_mix = von_neumann(mix)
        s_avg = eps * von_neumann(rho) + (1.0 - eps) * von_neumann(omega)
        margins = {
            "almost-convexity": s_avg + binary_entropy(eps) - s_mix,
            "concavity": s_mix - s_avg,
        }

        # orthogonal mixture: equality with the binary term
        split = int(rng.integers(1, dim))
        basis = _random_unitary(dim, rng)
        left = basis[:, :split]
        right = basis[:, split:]
        rho_l = random_mixed(split, rng=rng)
        rho_r = random_mixed(dim - split, rng=rng)
        m1 = left @ rho_l.matrix @ left.conj().T
        m2 = right @ rho_r.matrix @ right.conj().T
        ortho_mix = validate_state(eps * m1 + (1.0 - eps) * m2)
        expected = (
            eps * shannon(rho_l.spectrum.values)
            + (1.0 - eps) * shannon(rho_r.spectrum.values)
            + binary_entropy(eps)
        )
        margins["orthogonal-mixture"] = -abs(von_neumann(ortho_mix) - expected)

        # scaling identity needs a full-rank reference, drawn separately so the
        # check runs on every trial
        reference = random_mixed(dim, rng=rng)
        base = relative_entropy(rho, reference)
        scale_error = max(
            abs(relative_entropy(rho, c * reference.matrix) - (base - math.log(c)))
            for c in (0.5, 2.0)
        )
        margins["reference-scaling"] = -scale_error
        margins["relent-nonneg"] = base
        return margins, payload

    outcomes += _run_family(
        "identities", "mixtures", cfg, mixture_trial, tolerances={"relent-nonneg": 1e-10}
    )

    def pinching_trial(index, rng):
        dim = STANDARD_DIMS[index % len(STANDARD_DIMS)]
        sigma = random_mixed(dim, rng=rng)
        omega = random_mixed(dim, rng=rng)
        payload = {"sigma": sigma.matrix, "omega": omega.matrix}
        basis = _random_unitary(dim, rng)
        groups = 2 if dim < 4 else int(rng.integers(2, 4))
        cuts = sorted(rng.choice(np.arange(1, dim), size=groups - 1, replace=False).tolist())
        edges = [0] + cuts + [dim]
        projectors = []
        for lo, hi in zip(edges, edges[1:]):
            block = basis[:, lo:hi]
            projectors.append(block @ block.conj().T)
        sigma_p = validate_state(pinch(sigma.matrix, projectors))
        omega_p = validate_state(pinch(omega.matrix, projectors))
        margins = {
            "pinching-dpi": relative_entropy(sigma, omega)
            - relative_entropy(sigma_p, omega_p.matrix)
        }
        return margins, payload

    outcomes += _run_family("identities", "pinching", cfg, pinching_trial)
    return outcomes


SUITE_BUILDERS: dict[str, tuple] = {
    "lidskii": (lidskii_outcomes,),
    "theorem1": (bound_outcomes,),
    "conditional": (conditional_outcomes,),
    "relent": (relent_outcomes,),
    "dmax": (dmax_outcomes,),
    "proof-lemmas": (proof_lemma_outcomes, identity_outcomes),
}


def run_property_suite(cfg: ExperimentConfig, suite: str) -> SuiteReport:
    """Run one named invariant family (or all of them) and report margins."""
    if suite == "all":
        builders = tuple(fn for fns in SUITE_BUILDERS.values() for fn in fns)
    elif suite in SUITE_BUILDERS:
        builders = SUITE_BUILDERS[suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    outcomes: list[CheckOutcome] = []
    for builder in builders:
        outcomes += builder(cfg)
    return SuiteReport(suite, outcomes)


# ---------------------------------------------------------------------------
# tightness table


@dataclass(frozen=True)
class TightnessRow:
    dim: int
    epsilon: float
    entropy_gap: float
    bound_slack: float
    af_slack: float


def tightness_table(
    dims: tuple[int, ...] = TIGHTNESS_DIMS, epsilons: tuple[float, ...] = TIGHTNESS_EPSILONS
) -> list[TightnessRow]:
    """Saturating-family slacks; both bounds are tight, so slacks sit at zero."""
    rows = []
    for dim in dims:
        for epsilon in epsilons:
            rho1, rho2 = tightness_pair(dim, epsilon)
            main = entropy_difference_bound(rho1, rho2)
            af = af_bound(rho1, rho2)
            rows.append(
                TightnessRow(
                    dim=dim,
                    epsilon=epsilon,
                    entropy_gap=von_neumann(rho1) - von_neumann(rho2),
                    bound_slack=main.slack,
                    af_slack=af.slack,
                )
            )
    return rows
