"""Aggregation of run records: runtime statistics and fixed-budget curves."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .records import RunRecord


class Metric(str, Enum):
    GENERATIONS = "generations"
    EVALUATIONS = "evaluations"


@dataclass(frozen=True)
class AggregateStats:
    """Mean, sample standard deviation (divisor count-1) and relative
    deviation (sd/mean) of one runtime metric over a set of finished runs.

    With a single run the dispersion estimate is undefined and ``sd`` and
    ``rdev`` are NaN.
    """

    metric: Metric
    count: int
    mean: float
    sd: float
    rdev: float


def aggregate(records: list[RunRecord], metric: Metric) -> AggregateStats:
    """Aggregate one runtime metric over runs of a single configuration.

    Censored (unfinished) runs are rejected: a truncated runtime cannot
    enter a mean.  Mixed configurations are rejected as well.
    """
    metric = Metric(metric)
    if not records:
        raise ValueError("cannot aggregate an empty record list")
    config = records[0].config
    for rec in records:
        if rec.config != config:
            raise ValueError("cannot aggregate records from different configurations")
        if not rec.finished:
            raise ValueError(
                "cannot aggregate unfinished runs "
                f"(config_index={rec.config_index}, run_index={rec.run_index})"
            )
    values = np.array(
        [rec.generations if metric == Metric.GENERATIONS else rec.evaluations
         for rec in records],
        dtype=np.float64,
    )
    mean = float(values.mean())
    if len(values) < 2:
        sd = math.nan
    else:
        sd = float(values.std(ddof=1))
    rdev = sd / mean if mean > 0 else math.nan
    return AggregateStats(metric=metric, count=len(values), mean=mean, sd=sd, rdev=rdev)


@dataclass(frozen=True)
class FixedBudgetCurve:
    """Mean best-so-far fitness as a function of the generation budget."""

    generations: np.ndarray
    mean_best_fitness: np.ndarray


def fixed_budget_curve(records: list[RunRecord], horizon: int) -> FixedBudgetCurve:
    """Average the recorded trajectories over generations 0..horizon.

    Each trajectory is read as a step function (best-so-far fitness is
    piecewise constant between recorded points).  Runs that terminated
    before ``horizon`` keep contributing their final value, i.e. ``n`` for
    finished runs.
    """
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    if not records:
        raise ValueError("cannot build a curve from an empty record list")
    grid = np.arange(horizon + 1, dtype=np.int64)
    total = np.zeros(horizon + 1, dtype=np.float64)
    for rec in records:
        traj = rec.trajectory
        if traj is None:
            raise ValueError(
                "record carries no trajectory "
                f"(config_index={rec.config_index}, run_index={rec.run_index})"
            )
        idx = np.searchsorted(traj[:, 0], grid, side="right") - 1
        np.clip(idx, 0, len(traj) - 1, out=idx)
        total += traj[idx, 1]
    return FixedBudgetCurve(generations=grid, mean_best_fitness=total / len(records))
