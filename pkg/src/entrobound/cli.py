"""Command line interface: figure1, verify, and tightness subcommands.

Exit codes: 0 when every checked invariant holds, 1 on any invariant failure,
2 on usage errors (argparse's own convention).
"""
from __future__ import annotations

import argparse
import sys

from .experiments import (
    ENSEMBLES,
    ExperimentConfig,
    SUITES,
    emit_csv,
    run_figure1,
    run_property_suite,
    tightness_table,
)


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dim", type=int, default=15, help="Hilbert space dimension (default 15)")
    parser.add_argument("--trials", type=int, default=1000, help="number of trials (default 1000)")
    parser.add_argument("--seed", type=int, default=42, help="master seed (default 42)")
    parser.add_argument(
        "--tolerance", type=float, default=1e-9, help="slack tolerance for pass/fail (default 1e-9)"
    )
    parser.add_argument("--out", type=str, default=None, help="output path (CSV or dump directory)")
    parser.add_argument(
        "--ensemble",
        type=str,
        default="hilbert-schmidt",
        choices=ENSEMBLES,
        help="sampling ensemble for random states (default hilbert-schmidt)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entrobound",
        description="Monte-Carlo verification of entropy continuity bounds.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    figure1 = subparsers.add_parser(
        "figure1", help="compare the fixed-reference relative-entropy bounds on random triples"
    )
    _add_common_options(figure1)

    verify = subparsers.add_parser("verify", help="run a randomized invariant suite")
    _add_common_options(verify)
    verify.add_argument(
        "--suite",
        type=str,
        default="all",
        choices=SUITES,
        help="which invariant family to run (default all)",
    )

    tightness = subparsers.add_parser(
        "tightness", help="print slacks on the saturating family (they sit at zero)"
    )
    _add_common_options(tightness)
    return parser


def _config_from(args: argparse.Namespace) -> ExperimentConfig:
    return ExperimentConfig(
        dim=args.dim,
        trials=args.trials,
        seed=args.seed,
        tolerance=args.tolerance,
        ensemble=args.ensemble,
        output_path=args.out,
    )


def _cmd_figure1(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    records, summary = run_figure1(cfg)
    out_path = args.out or "figure1.csv"
    emit_csv(records, out_path)
    print(
        f"figure1: dim={cfg.dim} trials={cfg.trials} seed={cfg.seed} ensemble={cfg.ensemble}"
    )
    print(f"completed {summary.completed}/{summary.trials} trials ({summary.faults} faults)")
    print(f"fraction(new <= bluhm) = {summary.fraction_new_le_bluhm:.3f}")
    print(
        f"fraction(new <= gour | applicable) = {summary.fraction_new_le_gour:.3f}"
        f" (applicable trials: {summary.gour_applicable})"
    )
    print(f"min slack = {summary.min_slack:.6e}")
    print(f"wrote {out_path}")
    ok = summary.faults == 0 and summary.min_slack >= -cfg.tolerance
    return 0 if ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    report = run_property_suite(cfg, args.suite)
    width = max(len(f"{o.family}:{o.check}") for o in report.outcomes)
    for outcome in report.outcomes:
        status = "PASS" if outcome.passed else "FAIL"
        name = f"{outcome.family}:{outcome.check}"
        line = (
            f"[{status}] {name:<{width}} {outcome.label:<18} trials={outcome.trials:<6}"
            f" worst={outcome.worst_margin:+.3e}"
        )
        if outcome.dump_path:
            line += f" dump={outcome.dump_path}"
        print(line)
    failed = [o for o in report.outcomes if not o.passed]
    print(
        f"suite {report.suite}: {len(report.outcomes) - len(failed)}/{len(report.outcomes)} checks passed"
    )
    return 0 if report.passed else 1


def _cmd_tightness(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    rows = tightness_table()
    print(f"{'dim':>4} {'epsilon':>8} {'entropy gap':>14} {'bound slack':>14} {'af slack':>14}")
    worst = 0.0
    lines = ["dim,epsilon,entropy_gap,bound_slack,af_slack"]
    for row in rows:
        print(
            f"{row.dim:>4} {row.epsilon:>8.2f} {row.entropy_gap:>14.9f}"
            f" {row.bound_slack:>14.3e} {row.af_slack:>14.3e}"
        )
        lines.append(
            f"{row.dim},{row.epsilon:.12g},{row.entropy_gap:.12g},"
            f"{row.bound_slack:.12g},{row.af_slack:.12g}"
        )
        worst = max(worst, abs(row.bound_slack), abs(row.af_slack))
    if args.out:
        with open(args.out, "w", newline="") as handle:
            handle.write("\n".join(lines) + "\n")
        print(f"wrote {args.out}")
    print(f"largest |slack| = {worst:.3e}")
    return 0 if worst <= cfg.tolerance else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "figure1":
        return _cmd_figure1(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_tightness(args)


if __name__ == "__main__":
    sys.exit(main())
