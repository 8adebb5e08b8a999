"""Shared statistics helpers for the test suite."""

from __future__ import annotations

import numpy as np
from scipy import stats as sps


def chi_square_gof(observed: np.ndarray, probs: np.ndarray, min_expected: float = 5.0):
    """Goodness-of-fit statistic with order-preserving pooling of small bins.

    Returns (statistic, degrees_of_freedom).  ``observed`` are counts per
    category, ``probs`` the model probabilities for the same categories
    (must sum to 1 over the full support).
    """
    observed = np.asarray(observed, dtype=float)
    expected = np.asarray(probs, dtype=float) * observed.sum()
    pooled_o: list[float] = []
    pooled_e: list[float] = []
    acc_o = acc_e = 0.0
    for o, e in zip(observed, expected):
        acc_o += o
        acc_e += e
        if acc_e >= min_expected:
            pooled_o.append(acc_o)
            pooled_e.append(acc_e)
            acc_o = acc_e = 0.0
    if acc_e > 0:
        if pooled_e:
            pooled_o[-1] += acc_o
            pooled_e[-1] += acc_e
        else:
            pooled_o.append(acc_o)
            pooled_e.append(acc_e)
    po = np.array(pooled_o)
    pe = np.array(pooled_e)
    stat = float(((po - pe) ** 2 / pe).sum())
    dof = max(1, len(pe) - 1)
    return stat, dof


def chi_square_passes(observed: np.ndarray, probs: np.ndarray, level: float = 0.999) -> tuple[bool, str]:
    """True if the sample is accepted at the given chi-square level."""
    stat, dof = chi_square_gof(observed, probs)
    critical = float(sps.chi2.ppf(level, dof))
    return stat < critical, f"chi2={stat:.2f} vs critical({level})={critical:.2f} @ dof={dof}"
