"""Benchmarking library for (1+lambda) EAs with self-adjusting mutation rates
on the OneMax problem: deterministic runs, parallel experiment orchestration,
runtime statistics, fixed-budget curves and hyper-parameter sweeps."""

from .algorithms import (
    DEFAULT_TWO_RATE_MULTIPLIERS,
    AlgorithmConfig,
    AlgorithmRun,
    GenerationOutcome,
    PMinRule,
    Variant,
    ab_update,
    run_algorithm,
    run_ea_ab,
    run_static_ea,
    run_three_rate,
    run_two_rate,
    select_best,
    three_rate_update,
    two_rate_update,
)
from .bitstring import BitString, hamming_distance, onemax_eval, random_bitstring
from .mutation import (
    OperatorKind,
    apply_operator,
    binomial_flip_count,
    binomial_pmf,
    mutate_k_bits,
    sample_distinct_positions,
    shift_flip_count,
    shift_pmf,
)
from .records import RunRecord
from .runner import (
    SEED_FOR_RUN_GOLDEN,
    ExperimentError,
    ExperimentSpec,
    run_experiment,
    seed_for_run,
)
from .stats import AggregateStats, FixedBudgetCurve, Metric, aggregate, fixed_budget_curve

__version__ = "0.1.0"

__all__ = [
    "AggregateStats",
    "AlgorithmConfig",
    "AlgorithmRun",
    "BitString",
    "DEFAULT_TWO_RATE_MULTIPLIERS",
    "ExperimentError",
    "ExperimentSpec",
    "FixedBudgetCurve",
    "GenerationOutcome",
    "Metric",
    "OperatorKind",
    "PMinRule",
    "RunRecord",
    "SEED_FOR_RUN_GOLDEN",
    "Variant",
    "ab_update",
    "aggregate",
    "apply_operator",
    "binomial_flip_count",
    "binomial_pmf",
    "fixed_budget_curve",
    "hamming_distance",
    "mutate_k_bits",
    "onemax_eval",
    "random_bitstring",
    "run_algorithm",
    "run_ea_ab",
    "run_experiment",
    "run_static_ea",
    "run_three_rate",
    "run_two_rate",
    "sample_distinct_positions",
    "seed_for_run",
    "select_best",
    "shift_flip_count",
    "shift_pmf",
    "three_rate_update",
    "two_rate_update",
]
