"""The four (1+lambda) EA variants as deterministic functions of (config, seed).

Variants
--------
static      fixed mutation rate ``p`` for every offspring
two-rate    half the offspring at a lowered rate, half at a raised rate;
            the rate numerator ``r`` is pulled toward the winner's rate with
            effective probability 3/4 each generation
ea-ab       one shared rate ``p``, multiplied by ``A`` when at least
            ``ceil(success_ratio * lambda)`` offspring match the parent and
            by ``b`` otherwise, clamped to ``[p_min, 1/2]``
three-rate  thirds of the offspring at ``c1*r/n``, ``r/n`` and ``c2*r/n``
            with the analogous success-based update of ``r``

All variants are elitist: the best offspring replaces the parent iff it is
at least as fit.  ``evaluations == lambda * generations`` holds exactly.

Implementation note: offspring are never materialized as bit strings.  On
OneMax, flipping a uniform random l-subset of a parent with fitness f turns
k1 ~ Hypergeometric(f, n - f, l) ones into zeros, so the offspring fitness
is exactly f + l - 2*k1.  Every recorded observable (fitness trajectory,
generation count, rate values) depends on the parent only through f, so
simulating the (fitness, rate) chain directly has the same law as the
bit-level process while costing O(lambda) work per generation at any
problem size.  The chain is validated against brute-force enumeration over
actual bit subsets in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .mutation import OperatorKind
from .records import RunRecord


class Variant(str, Enum):
    STATIC = "static"
    TWO_RATE = "two-rate"
    EA_AB = "ea-ab"
    THREE_RATE = "three-rate"


class PMinRule(str, Enum):
    OVER_N = "over-n"
    OVER_N_SQUARED = "over-n2"


#: Subpopulation rate multipliers of the classic two-rate scheme:
#: rates r/(2n) and 2r/n.
DEFAULT_TWO_RATE_MULTIPLIERS = (0.5, 2.0)


def _ceil_exact(x: float) -> int:
    """Ceiling that forgives float artifacts (0.05 * 100 == 5.000000000000001)."""
    nearest = round(x)
    if abs(x - nearest) < 1e-9:
        return int(nearest)
    return math.ceil(x)


@dataclass(frozen=True)
class AlgorithmConfig:
    """Variant selector plus every hyper-parameter of the four algorithms.

    Defaults follow the standard choices: ``r_init=2``, ``A=2``, ``b=1/2``,
    ``success_ratio=0.05``, ``(c1, c2)=(0.7, 1.4)``, static rate ``1/n``.
    ``operator=None`` resolves to the shift operator except for the
    three-rate variant, which defaults to standard bit mutation.
    ``two_rate_multipliers=None`` resolves to ``(0.5, 2.0)``; other pairs
    ``(m_lo, m_hi)`` with ``0 < m_lo < 1 < m_hi`` generalize the two-rate
    scheme to offspring rates ``m_lo*r/n`` and ``m_hi*r/n``.
    """

    variant: Variant
    n: int
    lam: int
    operator: OperatorKind | None = None
    p_min_rule: PMinRule = PMinRule.OVER_N
    p_static: float | None = None
    r_init: float = 2.0
    A: float = 2.0
    b: float = 0.5
    success_ratio: float = 0.05
    c1: float = 0.7
    c2: float = 1.4
    two_rate_multipliers: tuple[float, float] | None = None
    budget_generations: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "p_min_rule", PMinRule(self.p_min_rule))
        if self.operator is not None:
            object.__setattr__(self, "operator", OperatorKind(self.operator))
        if self.two_rate_multipliers is not None:
            object.__setattr__(
                self, "two_rate_multipliers",
                (float(self.two_rate_multipliers[0]), float(self.two_rate_multipliers[1])),
            )
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.lam < 1:
            raise ValueError(f"lambda must be >= 1, got {self.lam}")
        if self.p_static is not None and not 0.0 < self.p_static <= 1.0:
            raise ValueError(f"static rate must be in (0, 1], got {self.p_static}")
        if self.r_init <= 0.0:
            raise ValueError(f"r_init must be positive, got {self.r_init}")
        if self.A <= 1.0:
            raise ValueError(f"A must be > 1, got {self.A}")
        if not 0.0 < self.b < 1.0:
            raise ValueError(f"b must be in (0, 1), got {self.b}")
        if not 0.0 < self.success_ratio < 1.0:
            raise ValueError(f"success_ratio must be in (0, 1), got {self.success_ratio}")
        if not 0.0 < self.c1 < 1.0:
            raise ValueError(f"c1 must be in (0, 1), got {self.c1}")
        if self.c2 <= 1.0:
            raise ValueError(f"c2 must be > 1, got {self.c2}")
        if self.two_rate_multipliers is not None:
            lo, hi = self.two_rate_multipliers
            if not 0.0 < lo < 1.0 < hi:
                raise ValueError(
                    f"two-rate multipliers must satisfy 0 < lo < 1 < hi, got ({lo}, {hi})"
                )
        if self.budget_generations is not None and self.budget_generations < 1:
            raise ValueError(
                f"budget_generations must be >= 1, got {self.budget_generations}"
            )

    @property
    def effective_operator(self) -> OperatorKind:
        if self.operator is not None:
            return self.operator
        if self.variant == Variant.THREE_RATE:
            return OperatorKind.STANDARD
        return OperatorKind.SHIFT

    @property
    def p_min(self) -> float:
        """Lower bound for the EA(A,b) mutation rate."""
        if self.p_min_rule == PMinRule.OVER_N:
            return 1.0 / self.n
        return 1.0 / self.n**2

    @property
    def r_min(self) -> float:
        """Lower clamp for the two-/three-rate numerator r.

        2 under the 1/n rule; 2/n under the 1/n^2 rule so that the smaller
        two-rate offspring rate r/(2n) bottoms out at exactly 1/n^2.
        """
        if self.p_min_rule == PMinRule.OVER_N:
            return 2.0
        return 2.0 / self.n

    @property
    def r_max(self) -> float:
        return self.n / 4.0

    @property
    def static_rate(self) -> float:
        return self.p_static if self.p_static is not None else 1.0 / self.n

    @property
    def success_threshold(self) -> int:
        """ceil(success_ratio * lambda), the EA(A,b) success cutoff."""
        return _ceil_exact(self.success_ratio * self.lam)

    @property
    def resolved_two_rate_multipliers(self) -> tuple[float, float]:
        if self.two_rate_multipliers is not None:
            return self.two_rate_multipliers
        return DEFAULT_TWO_RATE_MULTIPLIERS


@dataclass(frozen=True)
class GenerationOutcome:
    """What one generation produced: the selected offspring and its context."""

    best_index: int
    best_fitness: int
    accepted: bool
    rate_used_by_best: float


def select_best(fitnesses: Sequence[int] | np.ndarray, rng: np.random.Generator) -> int:
    """Index of a maximal entry, ties broken uniformly at random."""
    fit = np.asarray(fitnesses)
    if fit.size == 0:
        raise ValueError("cannot select from an empty fitness list")
    return _argmax_uniform(fit, rng)


def _argmax_uniform(fit: np.ndarray, rng: np.random.Generator) -> int:
    ties = np.flatnonzero(fit == fit.max())
    if ties.size == 1:
        return int(ties[0])
    return int(ties[rng.integers(ties.size)])


def _clamp_rate(r: float, config: AlgorithmConfig) -> float:
    return min(max(config.r_min, r), config.r_max)


def two_rate_update(
    r: float, winner_multiplier: float, rng: np.random.Generator, config: AlgorithmConfig
) -> float:
    """One two-rate numerator update.

    With probability 1/2 adopt the winner's rate (``winner_multiplier * r``),
    otherwise move to one of the two candidate rates equiprobably; the result
    is clamped to ``[r_min, n/4]``.  Conditioned on the winning half, the
    pre-clamp rate therefore moves in the winning direction with probability
    3/4.
    """
    m_lo, m_hi = config.resolved_two_rate_multipliers
    if rng.random() < 0.5:
        new = winner_multiplier * r
    else:
        new = (m_hi if rng.random() < 0.5 else m_lo) * r
    return _clamp_rate(new, config)


def three_rate_update(
    r: float, winner_multiplier: float, rng: np.random.Generator, config: AlgorithmConfig
) -> float:
    """Three-rate analogue: the random branch picks ``c1*r`` or ``c2*r``.

    ``winner_multiplier`` is ``c1``, ``1.0`` or ``c2`` depending on the
    subpopulation the selected offspring came from.
    """
    if rng.random() < 0.5:
        new = winner_multiplier * r
    else:
        new = (config.c2 if rng.random() < 0.5 else config.c1) * r
    return _clamp_rate(new, config)


def ab_update(p: float, n_good: int, config: AlgorithmConfig) -> float:
    """Multiplicative rate update: ``A*p`` on success, ``b*p`` otherwise.

    Success means at least ``ceil(success_ratio * lambda)`` offspring were at
    least as fit as the parent.  The result is clamped to ``[p_min, 1/2]``.
    """
    if n_good >= config.success_threshold:
        return min(0.5, config.A * p)
    return max(config.p_min, config.b * p)


class AlgorithmRun:
    """One run of one (config, seed) pair, steppable generation by generation.

    Exposes the live ``fitness``, ``generation`` counter and current rate
    state (``rate_numerator`` for two-/three-rate, ``rate`` for ea-ab,
    constant for static).  ``step()`` advances exactly one generation and
    reports the selected offspring.
    """

    def __init__(self, config: AlgorithmConfig, seed: int):
        self.config = config
        self.rng = np.random.Generator(np.random.PCG64(seed))
        self.n = config.n
        self.lam = config.lam
        self.generation = 0
        # uniform random initial parent: its fitness is Binomial(n, 1/2)
        self.fitness = int(self.rng.binomial(self.n, 0.5))
        self._shift = config.effective_operator == OperatorKind.SHIFT
        variant = config.variant
        if variant in (Variant.TWO_RATE, Variant.THREE_RATE):
            self.rate_numerator: float | None = config.r_init
        else:
            self.rate_numerator = None
        self.rate: float | None = 1.0 / self.n if variant == Variant.EA_AB else None
        lam = self.lam
        if variant == Variant.TWO_RATE:
            self._bounds = (lam // 2,)
            self._counts = (lam // 2, lam - lam // 2)
        elif variant == Variant.THREE_RATE:
            self._bounds = (lam // 3, (2 * lam) // 3)
            self._counts = (lam // 3, (2 * lam) // 3 - lam // 3, lam - (2 * lam) // 3)
        else:
            self._bounds = ()
            self._counts = (lam,)

    @property
    def is_optimal(self) -> bool:
        return self.fitness == self.n

    def subpopulation_rates(self) -> tuple[tuple[int, float], ...]:
        """Current (offspring count, mutation rate) per subpopulation.

        Rates are clamped to at most 1 at the point of use; this only
        triggers for degenerate configurations such as r_init > n/2.
        """
        cfg = self.config
        n = self.n
        variant = cfg.variant
        if variant == Variant.STATIC:
            rates = (cfg.static_rate,)
        elif variant == Variant.EA_AB:
            rates = (self.rate,)
        elif variant == Variant.TWO_RATE:
            m_lo, m_hi = cfg.resolved_two_rate_multipliers
            r = self.rate_numerator
            rates = (m_lo * r / n, m_hi * r / n)
        else:
            r = self.rate_numerator
            rates = (cfg.c1 * r / n, r / n, cfg.c2 * r / n)
        return tuple(
            (count, min(1.0, rate)) for count, rate in zip(self._counts, rates)
        )

    def _winner_multiplier(self, index: int) -> float:
        cfg = self.config
        if cfg.variant == Variant.TWO_RATE:
            m_lo, m_hi = cfg.resolved_two_rate_multipliers
            return m_lo if index < self._bounds[0] else m_hi
        if index < self._bounds[0]:
            return cfg.c1
        if index < self._bounds[1]:
            return 1.0
        return cfg.c2

    def step(self) -> GenerationOutcome:
        """Advance one generation: sample, select, accept, adapt the rate."""
        cfg = self.config
        rng = self.rng
        n = self.n
        parent = self.fitness
        plan = self.subpopulation_rates()

        parts = [rng.binomial(n, p, size=c) for c, p in plan if c > 0]
        ell = parts[0] if len(parts) == 1 else np.concatenate(parts)
        if self._shift:
            np.maximum(ell, 1, out=ell)
        k_ones = rng.hypergeometric(parent, n - parent, ell)
        fitnesses = parent + ell - 2 * k_ones

        if self.lam == 1:
            best_index = 0
            best = int(fitnesses[0])
        else:
            best = int(fitnesses.max())
            best_index = _argmax_uniform(fitnesses, rng)

        accepted = best >= parent
        if accepted:
            self.fitness = best

        variant = cfg.variant
        if variant == Variant.EA_AB:
            n_good = int((fitnesses >= parent).sum())
            self.rate = ab_update(self.rate, n_good, cfg)
            rate_used = plan[0][1]
        elif variant == Variant.TWO_RATE:
            mult = self._winner_multiplier(best_index)
            rate_used = min(1.0, mult * self.rate_numerator / n)
            self.rate_numerator = two_rate_update(self.rate_numerator, mult, rng, cfg)
        elif variant == Variant.THREE_RATE:
            mult = self._winner_multiplier(best_index)
            rate_used = min(1.0, mult * self.rate_numerator / n)
            self.rate_numerator = three_rate_update(self.rate_numerator, mult, rng, cfg)
        else:
            rate_used = plan[0][1]

        self.generation += 1
        return GenerationOutcome(best_index, best, accepted, rate_used)


def run_algorithm(
    config: AlgorithmConfig,
    seed: int,
    *,
    record_trajectory: bool = False,
    trajectory_stride: int = 1,
    config_index: int = 0,
    run_index: int = 0,
) -> RunRecord:
    """Run one (config, seed) pair until the optimum or the generation budget.

    Identical arguments always produce identical records.  The trajectory,
    when requested, stores the best-so-far fitness at generation 0, at every
    ``trajectory_stride``-th generation, and at termination.
    """
    if trajectory_stride < 1:
        raise ValueError(f"trajectory_stride must be >= 1, got {trajectory_stride}")
    sim = AlgorithmRun(config, seed)
    budget = config.budget_generations
    trajectory = [(0, sim.fitness)] if record_trajectory else None
    n = config.n
    while sim.fitness < n and (budget is None or sim.generation < budget):
        sim.step()
        if record_trajectory and sim.generation % trajectory_stride == 0:
            trajectory.append((sim.generation, sim.fitness))
    if record_trajectory and trajectory[-1][0] != sim.generation:
        trajectory.append((sim.generation, sim.fitness))
    return RunRecord(
        config=config,
        config_index=config_index,
        run_index=run_index,
        seed=seed,
        generations=sim.generation,
        evaluations=config.lam * sim.generation,
        finished=sim.fitness == n,
        trajectory=np.asarray(trajectory, dtype=np.int64) if record_trajectory else None,
    )


def _run_checked(config: AlgorithmConfig, variant: Variant, seed: int, **kwargs) -> RunRecord:
    if config.variant != variant:
        raise ValueError(f"expected a {variant.value} config, got {config.variant.value}")
    return run_algorithm(config, seed, **kwargs)


def run_static_ea(config: AlgorithmConfig, seed: int, **kwargs) -> RunRecord:
    """Static-rate (1+lambda) EA; the classic baseline."""
    return _run_checked(config, Variant.STATIC, seed, **kwargs)


def run_two_rate(config: AlgorithmConfig, seed: int, **kwargs) -> RunRecord:
    """Two-rate EA: halves at r/(2n) and 2r/n with success-based r control."""
    return _run_checked(config, Variant.TWO_RATE, seed, **kwargs)


def run_ea_ab(config: AlgorithmConfig, seed: int, **kwargs) -> RunRecord:
    """EA(A,b): multiplicative self-adjustment of a single mutation rate."""
    return _run_checked(config, Variant.EA_AB, seed, **kwargs)


def run_three_rate(config: AlgorithmConfig, seed: int, **kwargs) -> RunRecord:
    """Three-rate EA: thirds at c1*r/n, r/n, c2*r/n with r control."""
    return _run_checked(config, Variant.THREE_RATE, seed, **kwargs)
