"""Mutation-strength distributions and bit-flip operators.

Two operators are provided.  *Standard* bit mutation flips each bit
independently with probability ``p``, so the number of flipped bits follows
``Bin(n, p)`` and flipping nothing is possible.  The *shift* operator moves
the probability mass of zero flips onto exactly one flip: its flip count
follows the shifted distribution with pmf

    pmf(0) = 0
    pmf(1) = Bin(n, p)(0) + Bin(n, p)(1)
    pmf(k) = Bin(n, p)(k)          for 2 <= k <= n,

which guarantees every offspring differs from its parent.  Both operators
are realized by sampling the flip count first and then a uniform random
subset of positions of that size; this is distributionally identical to
per-bit coin flipping.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .bitstring import BitString


class OperatorKind(str, Enum):
    SHIFT = "shift"
    STANDARD = "standard"


def _check_probability(p: float, *, allow_zero: bool) -> float:
    p = float(p)
    lo_ok = p >= 0.0 if allow_zero else p > 0.0
    if not (lo_ok and p <= 1.0):
        bound = "[0, 1]" if allow_zero else "(0, 1]"
        raise ValueError(f"mutation rate must be in {bound}, got {p}")
    return p


def binomial_flip_count(n: int, p: float, rng: np.random.Generator) -> int:
    """Draw a flip count from ``Bin(n, p)``."""
    p = _check_probability(p, allow_zero=True)
    return int(rng.binomial(n, p))


def shift_flip_count(n: int, p: float, rng: np.random.Generator) -> int:
    """Draw a flip count from the shifted binomial (zero mapped to one)."""
    p = _check_probability(p, allow_zero=False)
    return max(1, int(rng.binomial(n, p)))


def binomial_pmf(n: int, p: float, k: int) -> float:
    """``Bin(n, p)`` pmf evaluated stably via log-factorials."""
    if not 0 <= k <= n:
        raise ValueError(f"k must be in [0, {n}], got {k}")
    if p == 0.0:
        return 1.0 if k == 0 else 0.0
    if p == 1.0:
        return 1.0 if k == n else 0.0
    log_pmf = (
        math.lgamma(n + 1)
        - math.lgamma(k + 1)
        - math.lgamma(n - k + 1)
        + k * math.log(p)
        + (n - k) * math.log1p(-p)
    )
    return math.exp(log_pmf)


def shift_pmf(n: int, p: float, k: int) -> float:
    """Exact pmf of the shifted binomial flip-count distribution."""
    p = _check_probability(p, allow_zero=False)
    if not 0 <= k <= n:
        raise ValueError(f"k must be in [0, {n}], got {k}")
    if k == 0:
        return 0.0
    if k == 1:
        return binomial_pmf(n, p, 0) + binomial_pmf(n, p, 1)
    return binomial_pmf(n, p, k)


def sample_distinct_positions(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform random ``count``-subset of ``{0, ..., n-1}``.

    Rejection sampling for small subsets, a partial shuffle otherwise;
    both yield the uniform subset distribution.
    """
    if not 0 <= count <= n:
        raise ValueError(f"count must be in [0, {n}], got {count}")
    if count == 0:
        return np.empty(0, dtype=np.int64)
    if count > n // 2:
        return rng.permutation(n)[:count].astype(np.int64)
    chosen: set[int] = set()
    while len(chosen) < count:
        chosen.add(int(rng.integers(n)))
    return np.fromiter(chosen, dtype=np.int64, count=count)


def mutate_k_bits(x: BitString, count: int, rng: np.random.Generator) -> BitString:
    """Flip ``count`` pairwise-distinct, uniformly chosen bits of ``x``."""
    positions = sample_distinct_positions(x.n, count, rng)
    mask = 0
    for pos in positions:
        mask |= 1 << int(pos)
    return BitString(x.n, x.value ^ mask)


def apply_operator(
    kind: OperatorKind, x: BitString, p: float, rng: np.random.Generator
) -> BitString:
    """Create one offspring of ``x`` under the given mutation operator."""
    if kind == OperatorKind.SHIFT:
        count = shift_flip_count(x.n, p, rng)
    elif kind == OperatorKind.STANDARD:
        p = _check_probability(p, allow_zero=False)
        count = binomial_flip_count(x.n, p, rng)
    else:
        raise ValueError(f"unknown operator kind: {kind!r}")
    return mutate_k_bits(x, count, rng)
