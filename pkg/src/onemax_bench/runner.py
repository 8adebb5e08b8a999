"""Deterministic orchestration of independent runs, optionally in parallel.

Each run draws its own seed from a fixed 64-bit mixing of
``(base_seed, config_index, run_index)``, so results depend only on the
experiment description and never on scheduling or worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algorithms import AlgorithmConfig, run_algorithm
from .records import RunRecord

_MASK64 = (1 << 64) - 1

#: seed_for_run(0, 0, 0); frozen by a snapshot test.
SEED_FOR_RUN_GOLDEN = 0x238275BC38FCBE91


def _mix64(z: int) -> int:
    """SplitMix64 finalizer: a fixed bijective scramble of a 64-bit word."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def seed_for_run(base_seed: int, config_index: int, run_index: int) -> int:
    """64-bit per-run seed: chained SplitMix64 over the argument triple."""
    if config_index < 0 or run_index < 0:
        raise ValueError("config_index and run_index must be non-negative")
    z = _mix64(base_seed & _MASK64)
    z = _mix64(z ^ (config_index & _MASK64))
    z = _mix64(z ^ (run_index & _MASK64))
    return z


@dataclass(frozen=True)
class ExperimentSpec:
    """Cross-product of configurations x run count, seeded from ``base_seed``."""

    configs: tuple[AlgorithmConfig, ...]
    runs_per_config: int = 100
    base_seed: int = 0
    record_trajectory: bool = False
    trajectory_stride: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "configs", tuple(self.configs))
        if not self.configs:
            raise ValueError("an experiment needs at least one configuration")
        if self.runs_per_config < 1:
            raise ValueError(f"runs_per_config must be >= 1, got {self.runs_per_config}")
        if self.trajectory_stride < 1:
            raise ValueError(f"trajectory_stride must be >= 1, got {self.trajectory_stride}")


class ExperimentError(RuntimeError):
    """A run failed; carries the coordinates needed to replay it."""

    def __init__(self, message: str, config_index: int, run_index: int, seed: int):
        super().__init__(
            f"{message} (config_index={config_index}, run_index={run_index}, seed={seed})"
        )
        self.config_index = config_index
        self.run_index = run_index
        self.seed = seed


def _execute_run(spec: ExperimentSpec, config_index: int, run_index: int) -> RunRecord:
    seed = seed_for_run(spec.base_seed, config_index, run_index)
    try:
        return run_algorithm(
            spec.configs[config_index],
            seed,
            record_trajectory=spec.record_trajectory,
            trajectory_stride=spec.trajectory_stride,
            config_index=config_index,
            run_index=run_index,
        )
    except ExperimentError:
        raise
    except Exception as exc:
        raise ExperimentError(f"run failed: {exc!r}", config_index, run_index, seed) from exc


def _execute_task(args: tuple[ExperimentSpec, int, int]) -> RunRecord:
    return _execute_run(*args)


def _validate_record(record: RunRecord) -> None:
    lam = record.config.lam
    n = record.config.n
    if record.evaluations != lam * record.generations:
        raise ExperimentError(
            "record violates evaluations == lambda * generations",
            record.config_index, record.run_index, record.seed,
        )
    traj = record.trajectory
    if traj is not None and len(traj):
        gens, fits = traj[:, 0], traj[:, 1]
        ok = (
            bool((gens[1:] > gens[:-1]).all())
            and bool((fits[1:] >= fits[:-1]).all())
            and (fits[-1] == n) == record.finished
        )
        if not ok:
            raise ExperimentError(
                "record has an inconsistent trajectory",
                record.config_index, record.run_index, record.seed,
            )


def run_experiment(spec: ExperimentSpec, parallelism: int = 1) -> list[RunRecord]:
    """Execute every (config, run) pair of ``spec``.

    Output is ordered by (config_index, run_index) and is identical for
    every ``parallelism`` level; a failing run aborts the experiment with
    its replay coordinates.
    """
    if parallelism < 1:
        raise ValueError(f"parallelism must be >= 1, got {parallelism}")
    tasks = [
        (spec, ci, ri)
        for ci in range(len(spec.configs))
        for ri in range(spec.runs_per_config)
    ]
    if parallelism == 1 or len(tasks) == 1:
        records = [_execute_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            records = list(pool.map(_execute_task, tasks, chunksize=1))
    records.sort(key=lambda rec: (rec.config_index, rec.run_index))
    for record in records:
        _validate_record(record)
    return records
