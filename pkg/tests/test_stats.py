import math

import numpy as np
import pytest

from onemax_bench import (
    AlgorithmConfig,
    Metric,
    RunRecord,
    Variant,
    aggregate,
    fixed_budget_curve,
)

CFG = AlgorithmConfig(Variant.STATIC, n=10, lam=2)
OTHER = AlgorithmConfig(Variant.STATIC, n=12, lam=2)


def _rec(generations, *, config=CFG, finished=True, trajectory=None, idx=0):
    return RunRecord(
        config=config,
        config_index=0,
        run_index=idx,
        seed=idx,
        generations=generations,
        evaluations=config.lam * generations,
        finished=finished,
        trajectory=None if trajectory is None else np.asarray(trajectory, dtype=np.int64),
    )


# ------------------------------------------------------------------ aggregate


def test_aggregate_constant_sample():
    stats = aggregate([_rec(10, idx=i) for i in range(3)], Metric.GENERATIONS)
    assert (stats.count, stats.mean, stats.sd, stats.rdev) == (3, 10.0, 0.0, 0.0)


def test_aggregate_hand_computed_pair():
    stats = aggregate([_rec(8), _rec(12, idx=1)], Metric.GENERATIONS)
    assert stats.mean == 10.0
    assert stats.sd == pytest.approx(2.8284271247461903)
    assert stats.rdev == pytest.approx(0.28284271247461903)


def test_aggregate_evaluations_metric():
    stats = aggregate([_rec(8), _rec(12, idx=1)], Metric.EVALUATIONS)
    assert stats.mean == 20.0
    assert stats.rdev == pytest.approx(0.28284271247461903)


def test_aggregate_is_permutation_invariant():
    recs = [_rec(g, idx=i) for i, g in enumerate([5, 9, 14, 2, 7])]
    forward = aggregate(recs, Metric.GENERATIONS)
    backward = aggregate(list(reversed(recs)), Metric.GENERATIONS)
    assert forward == backward


def test_aggregate_rejects_censored_runs():
    with pytest.raises(ValueError):
        aggregate([_rec(8), _rec(12, idx=1, finished=False)], Metric.GENERATIONS)


def test_aggregate_rejects_empty_and_mixed():
    with pytest.raises(ValueError):
        aggregate([], Metric.GENERATIONS)
    with pytest.raises(ValueError):
        aggregate([_rec(8), _rec(9, config=OTHER, idx=1)], Metric.GENERATIONS)


def test_aggregate_single_run_has_undefined_sd():
    stats = aggregate([_rec(8)], Metric.GENERATIONS)
    assert stats.mean == 8.0
    assert math.isnan(stats.sd)
    assert math.isnan(stats.rdev)


# -------------------------------------------------------------------- curves


def test_curve_singleton_equals_trajectory():
    traj = [(0, 4), (1, 6), (2, 7), (3, 10)]
    rec = _rec(3, trajectory=traj)
    curve = fixed_budget_curve([rec], horizon=3)
    assert curve.generations.tolist() == [0, 1, 2, 3]
    assert curve.mean_best_fitness.tolist() == [4.0, 6.0, 7.0, 10.0]


def test_curve_pads_finished_runs_with_optimum():
    rec = _rec(5, trajectory=[(0, 3), (5, 10)])
    curve = fixed_budget_curve([rec], horizon=10)
    assert curve.mean_best_fitness[4] == 3.0  # step function before the jump
    assert all(curve.mean_best_fitness[g] == 10.0 for g in range(5, 11))


def test_curve_hand_mean_of_two_runs():
    a = _rec(1, trajectory=[(0, 1), (1, 3)])
    b = _rec(1, trajectory=[(0, 1), (1, 5)], idx=1)
    curve = fixed_budget_curve([a, b], horizon=1)
    assert curve.mean_best_fitness[1] == 4.0


def test_curve_is_monotone():
    rng = np.random.default_rng(0)
    recs = []
    for i in range(20):
        fits = np.minimum(10, np.sort(rng.integers(0, 11, size=6)))
        traj = [(g, int(f)) for g, f in enumerate(fits)]
        recs.append(_rec(5, trajectory=traj, finished=bool(fits[-1] == 10), idx=i))
    curve = fixed_budget_curve(recs, horizon=8)
    assert (np.diff(curve.mean_best_fitness) >= -1e-12).all()


def test_curve_requires_trajectories():
    with pytest.raises(ValueError):
        fixed_budget_curve([_rec(3)], horizon=2)


def test_curve_horizon_zero_is_initial_fitness():
    rec = _rec(4, trajectory=[(0, 6), (4, 10)])
    curve = fixed_budget_curve([rec], horizon=0)
    assert curve.generations.tolist() == [0]
    assert curve.mean_best_fitness.tolist() == [6.0]


def test_curve_rejects_negative_horizon_and_empty():
    with pytest.raises(ValueError):
        fixed_budget_curve([_rec(3, trajectory=[(0, 1)])], horizon=-1)
    with pytest.raises(ValueError):
        fixed_budget_curve([], horizon=3)
