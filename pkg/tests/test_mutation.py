import math

import numpy as np
import pytest
from scipy import stats as sps

from onemax_bench import (
    BitString,
    OperatorKind,
    apply_operator,
    binomial_flip_count,
    binomial_pmf,
    hamming_distance,
    mutate_k_bits,
    random_bitstring,
    sample_distinct_positions,
    shift_flip_count,
    shift_pmf,
)
from _stat_utils import chi_square_passes


def _rng(seed=0):
    return np.random.Generator(np.random.PCG64(seed))


# ---------------------------------------------------------------- pmf oracle


def test_shift_pmf_zero_is_zero():
    for n, p in [(1, 0.5), (10, 0.1), (64, 0.9), (7, 1.0)]:
        assert shift_pmf(n, p, 0) == 0.0


def test_shift_pmf_hand_computed_n2():
    # Bin(2, 1/2): 1/4, 1/2, 1/4 -> shifted: 0, 3/4, 1/4
    assert shift_pmf(2, 0.5, 1) == pytest.approx(0.75, abs=1e-15)
    assert shift_pmf(2, 0.5, 2) == pytest.approx(0.25, abs=1e-15)


@pytest.mark.parametrize("n", [1, 2, 7, 64])
@pytest.mark.parametrize("p", [0.013, 0.3, 0.977, 1.0])
def test_shift_pmf_normalizes(n, p):
    total = sum(shift_pmf(n, p, k) for k in range(n + 1))
    assert abs(total - 1.0) < 1e-12


def test_pmfs_match_scipy():
    for n, p in [(10, 0.1), (20, 0.05), (20, 0.5), (64, 0.9)]:
        for k in range(n + 1):
            assert binomial_pmf(n, p, k) == pytest.approx(
                sps.binom.pmf(k, n, p), rel=1e-10, abs=1e-14
            )
            expect = sps.binom.pmf(k, n, p)
            if k == 0:
                expect = 0.0
            elif k == 1:
                expect = sps.binom.pmf(0, n, p) + sps.binom.pmf(1, n, p)
            assert shift_pmf(n, p, k) == pytest.approx(expect, rel=1e-10, abs=1e-14)


def test_pmf_rejects_bad_arguments():
    with pytest.raises(ValueError):
        shift_pmf(5, 0.5, 6)
    with pytest.raises(ValueError):
        shift_pmf(5, 0.0, 1)
    with pytest.raises(ValueError):
        binomial_pmf(5, 0.5, -1)


def test_one_flip_probability_lower_bound_when_np_small():
    # with np < 1 almost all mass sits on a single flip
    for n, p in [(100, 0.005), (1000, 0.0009), (50, 0.01)]:
        assert n * p < 1
        assert shift_pmf(n, p, 1) > 1 - (n * p) ** 2


# ------------------------------------------------------------ count sampling


def test_binomial_flip_count_degenerate_rates():
    rng = _rng(1)
    assert all(binomial_flip_count(30, 0.0, rng) == 0 for _ in range(50))
    assert all(binomial_flip_count(30, 1.0, rng) == 30 for _ in range(50))


def test_binomial_flip_count_mean():
    n, p, draws = 100, 0.03, 1_000_000
    rng = _rng(2)
    total = sum(binomial_flip_count(n, p, rng) for _ in range(draws))
    sigma = math.sqrt(n * p * (1 - p) / draws)
    assert abs(total / draws - n * p) < 4 * sigma


def test_shift_flip_count_never_zero_and_matches_pmf():
    n, p, draws = 10, 0.1, 200_000
    rng = _rng(3)
    counts = np.zeros(n + 1)
    for _ in range(draws):
        k = shift_flip_count(n, p, rng)
        assert 1 <= k <= n
        counts[k] += 1
    probs = np.array([shift_pmf(n, p, k) for k in range(n + 1)])
    ok, detail = chi_square_passes(counts, probs)
    assert ok, detail


def test_flip_count_rejects_bad_rates():
    rng = _rng(4)
    with pytest.raises(ValueError):
        binomial_flip_count(10, -0.1, rng)
    with pytest.raises(ValueError):
        binomial_flip_count(10, 1.1, rng)
    with pytest.raises(ValueError):
        shift_flip_count(10, 0.0, rng)


# ------------------------------------------------------------------ flipping


def test_mutate_k_bits_identity_and_complement():
    rng = _rng(5)
    x = random_bitstring(40, rng)
    assert mutate_k_bits(x, 0, rng) == x
    assert mutate_k_bits(x, 40, rng) == x.complement()


def test_mutate_k_bits_distance_and_immutability():
    rng = _rng(6)
    x = random_bitstring(120, rng)
    before = x.value
    for count in (1, 2, 17, 60, 119):
        y = mutate_k_bits(x, count, rng)
        assert hamming_distance(x, y) == count
        assert x.value == before


def test_mutate_k_bits_rejects_too_many():
    rng = _rng(7)
    with pytest.raises(ValueError):
        mutate_k_bits(BitString(5, 0), 6, rng)


def test_sample_distinct_positions_is_distinct_and_in_range():
    rng = _rng(8)
    for n, count in [(10, 3), (10, 10), (100, 51), (100, 99)]:
        pos = sample_distinct_positions(n, count, rng)
        assert len(set(pos.tolist())) == count
        assert pos.min() >= 0 and pos.max() < n


def test_flip_positions_uniform_inclusion():
    # each position of a uniform 3-subset of 10 appears with probability 0.3
    n, count, trials = 10, 3, 100_000
    rng = _rng(9)
    x = BitString.zeros(n)
    freq = np.zeros(n)
    for _ in range(trials):
        y = mutate_k_bits(x, count, rng)
        for i in range(n):
            freq[i] += y.bit(i)
    freq /= trials
    sigma = math.sqrt(0.3 * 0.7 / trials)
    assert np.all(np.abs(freq - count / n) < 4 * sigma)


# ------------------------------------------------------------ full operators


def test_shift_operator_always_moves():
    rng = _rng(10)
    x = random_bitstring(15, rng)
    for _ in range(5000):
        y = apply_operator(OperatorKind.SHIFT, x, 0.05, rng)
        assert hamming_distance(x, y) >= 1


def test_standard_operator_zero_flip_fraction():
    n, p, trials = 20, 0.05, 100_000
    rng = _rng(11)
    x = random_bitstring(n, rng)
    same = sum(apply_operator(OperatorKind.STANDARD, x, p, rng) == x for _ in range(trials))
    expect = (1 - p) ** n
    sigma = math.sqrt(expect * (1 - expect) / trials)
    assert abs(same / trials - expect) < 4 * sigma


def test_shift_operator_distance_distribution_matches_pmf():
    n, p, trials = 10, 0.1, 100_000
    rng = _rng(12)
    x = random_bitstring(n, rng)
    counts = np.zeros(n + 1)
    for _ in range(trials):
        counts[hamming_distance(x, apply_operator(OperatorKind.SHIFT, x, p, rng))] += 1
    probs = np.array([shift_pmf(n, p, k) for k in range(n + 1)])
    ok, detail = chi_square_passes(counts, probs)
    assert ok, detail


def test_apply_operator_rejects_bad_rate():
    rng = _rng(13)
    x = BitString.zeros(8)
    with pytest.raises(ValueError):
        apply_operator(OperatorKind.SHIFT, x, 0.0, rng)
    with pytest.raises(ValueError):
        apply_operator(OperatorKind.STANDARD, x, 1.5, rng)
