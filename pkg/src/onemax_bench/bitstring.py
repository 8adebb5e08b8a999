"""Fixed-length bit strings and the OneMax fitness function."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BitString:
    """Immutable binary string of exactly ``n`` bits.

    Bits are packed into a single arbitrary-precision integer; bit ``i`` of
    the string is bit ``i`` of ``value``.  Bits above position ``n - 1`` are
    required to be zero, so popcounts never need masking.
    """

    n: int
    value: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise ValueError("value has bits set beyond position n")

    @classmethod
    def zeros(cls, n: int) -> BitString:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitString:
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_bits(cls, bits) -> BitString:
        """Build from an iterable of 0/1 values; index 0 is bit position 0."""
        value = 0
        count = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {i} is {b!r}, expected 0 or 1")
            value |= int(b) << i
            count += 1
        return cls(count, value)

    @classmethod
    def from_string(cls, s: str) -> BitString:
        """Build from a text like ``"10110"``; leftmost character is bit 0."""
        return cls.from_bits(int(c) for c in s)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> BitString:
        return cls.from_bits(np.asarray(arr).astype(np.uint8).tolist())

    def to_array(self) -> np.ndarray:
        """Unpack to a ``uint8`` array of 0/1 values."""
        out = np.empty(self.n, dtype=np.uint8)
        v = self.value
        for i in range(self.n):
            out[i] = v & 1
            v >>= 1
        return out

    def bit(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"bit index {i} out of range for n={self.n}")
        return (self.value >> i) & 1

    def complement(self) -> BitString:
        return BitString(self.n, self.value ^ ((1 << self.n) - 1))

    def __xor__(self, other: BitString) -> BitString:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        return BitString(self.n, self.value ^ other.value)

    def __str__(self) -> str:
        return "".join(str((self.value >> i) & 1) for i in range(self.n))


def onemax_eval(x: BitString) -> int:
    """Number of one-bits in ``x`` (word-level popcount under the hood)."""
    return x.value.bit_count()


def random_bitstring(n: int, rng: np.random.Generator) -> BitString:
    """Sample an ``n``-bit string uniformly at random."""
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    raw = int.from_bytes(rng.bytes((n + 7) // 8), "little")
    return BitString(n, raw & ((1 << n) - 1))


def hamming_distance(x: BitString, y: BitString) -> int:
    """Count of positions where ``x`` and ``y`` differ."""
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} != {y.n}")
    return (x.value ^ y.value).bit_count()
