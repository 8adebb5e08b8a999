"""Result record for a single independent run."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .algorithms import AlgorithmConfig


@dataclass(eq=False)
class RunRecord:
    """Outcome of one run of one (config, seed) pair.

    ``trajectory``, when recorded, is an ``(k, 2)`` int64 array of
    ``(generation, best_so_far_fitness)`` pairs with strictly increasing
    generations and non-decreasing fitness; the final entry always reflects
    the state at termination.
    """

    config: AlgorithmConfig
    config_index: int
    run_index: int
    seed: int
    generations: int
    evaluations: int
    finished: bool
    trajectory: np.ndarray | None = field(default=None, repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RunRecord):
            return NotImplemented
        if (self.config, self.config_index, self.run_index, self.seed,
                self.generations, self.evaluations, self.finished) != (
                other.config, other.config_index, other.run_index, other.seed,
                other.generations, other.evaluations, other.finished):
            return False
        if self.trajectory is None or other.trajectory is None:
            return self.trajectory is None and other.trajectory is None
        return np.array_equal(self.trajectory, other.trajectory)

    __hash__ = None  # type: ignore[assignment]
