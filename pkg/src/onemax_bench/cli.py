"""Command-line front end: run experiments and emit plot-ready CSV.

Subcommands:
  run    per-run and aggregate runtime tables for one configuration
  curve  mean best-so-far fitness per generation (fixed-budget view),
         one or more configurations
  sweep  (c1, c2) grid for the three-rate variant, one row per pair

All outputs are deterministic functions of the flags: reruns and different
--threads values produce byte-identical files.  Exit codes: 0 success,
2 invalid flags, 3 run failure (or unfinished runs under --require-finished).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from .algorithms import AlgorithmConfig, PMinRule, Variant
from .mutation import OperatorKind
from .records import RunRecord
from .runner import ExperimentError, ExperimentSpec, run_experiment
from .stats import Metric, aggregate
from .stats import fixed_budget_curve as build_curve

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RUN_FAILURE = 3

#: Default cap on total fitness evaluations, converted to a generation
#: budget per configuration; guards against misconfigured endless runs.
DEFAULT_BUDGET_EVALUATIONS = 10**9

RUNS_COLUMNS = [
    "algo", "n", "lambda", "p_min", "mutation",
    "run_index", "seed", "generations", "evaluations", "finished",
]
AGGREGATE_COLUMNS = [
    "algo", "n", "lambda", "p_min", "mutation", "runs",
    "mean_generations", "sd_generations", "rdev_generations",
    "mean_evaluations", "sd_evaluations", "rdev_evaluations",
]
CURVE_COLUMNS = ["algo", "n", "lambda", "p_min", "generation", "mean_best_fitness"]
SWEEP_COLUMNS = ["c1", "c2", "n", "lambda", "runs", "mean_evaluations", "rdev_evaluations"]

DEFAULT_C1_GRID = [round(0.1 + i * (0.95 - 0.1) / 9, 10) for i in range(10)]
DEFAULT_C2_GRID = [round(1.05 + i * (3.0 - 1.05) / 9, 10) for i in range(10)]


class CliError(Exception):
    """Flag validation failure; maps to exit code 2."""


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def _write_csv(path: Path, columns: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _add_algorithm_flags(p: argparse.ArgumentParser, *, multi_algo: bool) -> None:
    if multi_algo:
        p.add_argument(
            "--algo", action="append", required=True, metavar="ALGO[:P_MIN]",
            help="algorithm (static|two-rate|ea-ab|three-rate); may be repeated, "
                 "optionally suffixed with :over-n or :over-n2 to override --p-min "
                 "for that configuration",
        )
    else:
        p.add_argument(
            "--algo", required=True,
            choices=[v.value for v in Variant],
            help="algorithm variant",
        )
    p.add_argument("--n", type=int, required=True, help="problem dimension")
    p.add_argument("--lambda", dest="lam", type=int, required=True,
                   help="offspring population size")
    p.add_argument("--runs", type=int, default=100, help="independent runs per config")
    p.add_argument("--seed", type=int, default=0, help="base seed (64-bit)")
    p.add_argument("--p-min", choices=[r.value for r in PMinRule],
                   default=PMinRule.OVER_N.value,
                   help="lower-bound rule for the mutation rate")
    p.add_argument("--mutation", choices=[k.value for k in OperatorKind], default=None,
                   help="mutation operator (default: shift, except three-rate: standard)")
    p.add_argument("--p", type=float, default=None,
                   help="static mutation rate (static only; default 1/n)")
    p.add_argument("--A", type=float, default=2.0, help="rate increase factor (ea-ab)")
    p.add_argument("--b", type=float, default=0.5, help="rate decrease factor (ea-ab)")
    p.add_argument("--success-ratio", type=float, default=0.05,
                   help="offspring fraction counting as success (ea-ab)")
    p.add_argument("--c1", type=float, default=None,
                   help="low rate multiplier (three-rate default 0.7; also accepted "
                        "for two-rate to override its 0.5)")
    p.add_argument("--c2", type=float, default=None,
                   help="high rate multiplier (three-rate default 1.4; also accepted "
                        "for two-rate to override its 2.0)")
    p.add_argument("--budget-gens", type=int, default=None,
                   help=f"generation cap (default: {DEFAULT_BUDGET_EVALUATIONS} "
                        "evaluations / lambda)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker processes (default: logical cores)")
    p.add_argument("--out", type=Path, default=Path("."), help="output directory")
    p.add_argument("--emit-runs", action="store_true",
                   help="also write runs.csv for curve/sweep (run always writes it)")
    p.add_argument("--require-finished", action="store_true",
                   help="fail (exit 3) if any run exhausts its budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onemax-bench",
        description="Benchmark (1+lambda) EA variants with self-adjusting "
                    "mutation rates on OneMax.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="write runs.csv and aggregate.csv")
    _add_algorithm_flags(p_run, multi_algo=False)

    p_curve = sub.add_parser("curve", help="write curve.csv (mean fitness per generation)")
    _add_algorithm_flags(p_curve, multi_algo=True)
    p_curve.add_argument("--horizon", type=int, required=True,
                         help="largest generation to include")
    p_curve.add_argument("--stride", type=int, default=1,
                         help="record every k-th generation")

    p_sweep = sub.add_parser("sweep", help="write sweep.csv over a (c1, c2) grid")
    _add_algorithm_flags(p_sweep, multi_algo=False)
    p_sweep.add_argument("--c1-grid", type=str, default=None,
                         help="comma-separated c1 values (default 10 in [0.1, 0.95])")
    p_sweep.add_argument("--c2-grid", type=str, default=None,
                         help="comma-separated c2 values (default 10 in [1.05, 3.0])")

    return parser


def _default_budget(lam: int) -> int:
    return max(1, -(-DEFAULT_BUDGET_EVALUATIONS // lam))


def _make_config(args: argparse.Namespace, variant: Variant, p_min: PMinRule) -> AlgorithmConfig:
    if args.p is not None and variant != Variant.STATIC:
        raise CliError("--p applies to the static algorithm only")
    kwargs = {}
    if variant == Variant.TWO_RATE and (args.c1 is not None or args.c2 is not None):
        if args.c1 is None or args.c2 is None:
            raise CliError("two-rate multipliers need both --c1 and --c2")
        kwargs["two_rate_multipliers"] = (args.c1, args.c2)
    else:
        if args.c1 is not None:
            kwargs["c1"] = args.c1
        if args.c2 is not None:
            kwargs["c2"] = args.c2
    budget = args.budget_gens if args.budget_gens is not None else _default_budget(args.lam)
    try:
        return AlgorithmConfig(
            variant=variant,
            n=args.n,
            lam=args.lam,
            operator=OperatorKind(args.mutation) if args.mutation else None,
            p_min_rule=p_min,
            p_static=args.p,
            A=args.A,
            b=args.b,
            success_ratio=args.success_ratio,
            budget_generations=budget,
            **kwargs,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _parse_algo_token(token: str, default_p_min: PMinRule) -> tuple[Variant, PMinRule]:
    name, sep, bound = token.partition(":")
    try:
        variant = Variant(name)
    except ValueError:
        raise CliError(f"unknown algorithm {name!r}") from None
    if not sep:
        return variant, default_p_min
    try:
        return variant, PMinRule(bound)
    except ValueError:
        raise CliError(f"unknown p-min rule {bound!r} in {token!r}") from None


def _validate_common(args: argparse.Namespace) -> None:
    if args.n < 1:
        raise CliError(f"--n must be >= 1, got {args.n}")
    if args.lam < 1:
        raise CliError(f"--lambda must be >= 1, got {args.lam}")
    if args.runs < 1:
        raise CliError(f"--runs must be >= 1, got {args.runs}")
    if args.threads < 1:
        raise CliError(f"--threads must be >= 1, got {args.threads}")
    if args.seed < 0:
        raise CliError(f"--seed must be non-negative, got {args.seed}")
    if args.budget_gens is not None and args.budget_gens < 1:
        raise CliError(f"--budget-gens must be >= 1, got {args.budget_gens}")


def _config_label(config: AlgorithmConfig) -> tuple:
    return (
        config.variant.value,
        config.n,
        config.lam,
        config.p_min_rule.value,
        config.effective_operator.value,
    )


def _runs_rows(records: list[RunRecord]) -> list[list]:
    rows = []
    for rec in records:
        algo, n, lam, p_min, mutation = _config_label(rec.config)
        rows.append([
            algo, n, lam, p_min, mutation,
            rec.run_index, rec.seed, rec.generations, rec.evaluations, rec.finished,
        ])
    return rows


def _aggregate_row(config: AlgorithmConfig, records: list[RunRecord]) -> list:
    gen_stats = aggregate(records, Metric.GENERATIONS)
    eval_stats = aggregate(records, Metric.EVALUATIONS)
    return [
        *_config_label(config), gen_stats.count,
        gen_stats.mean, gen_stats.sd, gen_stats.rdev,
        eval_stats.mean, eval_stats.sd, eval_stats.rdev,
    ]


def _report_unfinished(records: list[RunRecord], require_finished: bool) -> bool:
    """Warn about (or, in strict mode, reject) budget-exhausted runs."""
    bad = [rec for rec in records if not rec.finished]
    if not bad:
        return False
    coords = ", ".join(
        f"(config={rec.config_index}, run={rec.run_index}, seed={rec.seed})"
        for rec in bad[:5]
    )
    kind = "error" if require_finished else "warning"
    print(
        f"{kind}: {len(bad)} run(s) exhausted their generation budget: {coords}"
        + (" ..." if len(bad) > 5 else ""),
        file=sys.stderr,
    )
    return True


def _cmd_run(args: argparse.Namespace) -> int:
    _validate_common(args)
    config = _make_config(args, Variant(args.algo), PMinRule(args.p_min))
    spec = ExperimentSpec(configs=(config,), runs_per_config=args.runs, base_seed=args.seed)
    records = run_experiment(spec, parallelism=args.threads)
    args.out.mkdir(parents=True, exist_ok=True)
    _write_csv(args.out / "runs.csv", RUNS_COLUMNS, _runs_rows(records))
    if _report_unfinished(records, args.require_finished):
        if args.require_finished:
            return EXIT_RUN_FAILURE
        print("warning: aggregate.csv not written (censored runtimes)", file=sys.stderr)
        return EXIT_OK
    _write_csv(args.out / "aggregate.csv", AGGREGATE_COLUMNS, [_aggregate_row(config, records)])
    return EXIT_OK


def _cmd_curve(args: argparse.Namespace) -> int:
    _validate_common(args)
    if args.horizon < 0:
        raise CliError(f"--horizon must be >= 0, got {args.horizon}")
    if args.stride < 1:
        raise CliError(f"--stride must be >= 1, got {args.stride}")
    default_p_min = PMinRule(args.p_min)
    configs = [
        _make_config(args, *_parse_algo_token(token, default_p_min))
        for token in args.algo
    ]
    spec = ExperimentSpec(
        configs=tuple(configs),
        runs_per_config=args.runs,
        base_seed=args.seed,
        record_trajectory=True,
        trajectory_stride=args.stride,
    )
    records = run_experiment(spec, parallelism=args.threads)
    if _report_unfinished(records, args.require_finished) and args.require_finished:
        return EXIT_RUN_FAILURE
    rows: list[list] = []
    for ci, config in enumerate(configs):
        group = [rec for rec in records if rec.config_index == ci]
        curve = build_curve(group, args.horizon)
        algo, n, lam, p_min, _ = _config_label(config)
        for g, value in zip(curve.generations, curve.mean_best_fitness):
            rows.append([algo, n, lam, p_min, int(g), float(value)])
    args.out.mkdir(parents=True, exist_ok=True)
    _write_csv(args.out / "curve.csv", CURVE_COLUMNS, rows)
    if args.emit_runs:
        _write_csv(args.out / "runs.csv", RUNS_COLUMNS, _runs_rows(records))
    return EXIT_OK


def _parse_grid(text: str | None, default: list[float], name: str) -> list[float]:
    if text is None:
        return list(default)
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise CliError(f"invalid {name}: {exc}") from exc
    if not values:
        raise CliError(f"{name} must contain at least one value")
    return values


def _cmd_sweep(args: argparse.Namespace) -> int:
    _validate_common(args)
    variant = Variant(args.algo)
    if variant != Variant.THREE_RATE:
        raise CliError("sweep supports --algo three-rate only")
    c1_grid = _parse_grid(args.c1_grid, DEFAULT_C1_GRID, "--c1-grid")
    c2_grid = _parse_grid(args.c2_grid, DEFAULT_C2_GRID, "--c2-grid")
    pairs = [(c1, c2) for c1 in c1_grid for c2 in c2_grid]
    base = argparse.Namespace(**vars(args))
    configs = []
    for c1, c2 in pairs:
        base.c1, base.c2 = c1, c2
        configs.append(_make_config(base, variant, PMinRule(args.p_min)))
    spec = ExperimentSpec(configs=tuple(configs), runs_per_config=args.runs, base_seed=args.seed)
    records = run_experiment(spec, parallelism=args.threads)
    if _report_unfinished(records, args.require_finished):
        if args.require_finished:
            return EXIT_RUN_FAILURE
        print("warning: sweep.csv not written (censored runtimes)", file=sys.stderr)
        return EXIT_OK
    rows = []
    for ci, ((c1, c2), config) in enumerate(zip(pairs, configs)):
        group = [rec for rec in records if rec.config_index == ci]
        stats = aggregate(group, Metric.EVALUATIONS)
        rows.append([c1, c2, config.n, config.lam, stats.count, stats.mean, stats.rdev])
    args.out.mkdir(parents=True, exist_ok=True)
    _write_csv(args.out / "sweep.csv", SWEEP_COLUMNS, rows)
    if args.emit_runs:
        _write_csv(args.out / "runs.csv", RUNS_COLUMNS, _runs_rows(records))
    return EXIT_OK


_COMMANDS = {"run": _cmd_run, "curve": _cmd_curve, "sweep": _cmd_sweep}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExperimentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUN_FAILURE


if __name__ == "__main__":
    sys.exit(main())
