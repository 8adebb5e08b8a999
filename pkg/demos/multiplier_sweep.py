#!/usr/bin/env python3
"""Hyper-parameter landscape of the three-rate variant: a (c1, c2) grid.

Sweeps the rate multipliers of the three-rate EA over a small grid at a
desk-friendly size, prints the mean-evaluations matrix as a text heatmap
and highlights the best cell.  The same data, at any scale, comes out of
``onemax-bench sweep`` as sweep.csv ready for real heatmap plotting.

Run:  python3 demos/multiplier_sweep.py [--n 2000] [--lambda 200]
"""

import argparse

import numpy as np

from onemax_bench import (
    AlgorithmConfig,
    ExperimentSpec,
    Metric,
    Variant,
    aggregate,
    run_experiment,
)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=2000)
    parser.add_argument("--lambda", dest="lam", type=int, default=200)
    parser.add_argument("--runs", type=int, default=10)
    parser.add_argument("--threads", type=int, default=2)
    args = parser.parse_args()

    c1_grid = [0.3, 0.5, 0.7, 0.9]
    c2_grid = [1.2, 1.4, 2.0, 2.8]
    means = np.zeros((len(c1_grid), len(c2_grid)))
    for i, c1 in enumerate(c1_grid):
        for j, c2 in enumerate(c2_grid):
            config = AlgorithmConfig(Variant.THREE_RATE, args.n, args.lam, c1=c1, c2=c2)
            spec = ExperimentSpec(configs=(config,), runs_per_config=args.runs, base_seed=31)
            means[i, j] = aggregate(run_experiment(spec, args.threads), Metric.EVALUATIONS).mean

    best = means.min()
    corner = "c1 / c2"
    print(f"three-rate mean evaluations, n={args.n}, lambda={args.lam}, "
          f"{args.runs} runs per cell\n")
    print(f"{corner:>8s}" + "".join(f"{c2:>12.2f}" for c2 in c2_grid))
    for i, c1 in enumerate(c1_grid):
        print(f"{c1:8.2f}" + "".join(f"{means[i, j]:12.0f}" for j in range(len(c2_grid))))
    print("\npercent above the best cell:")
    print(f"{corner:>8s}" + "".join(f"{c2:>12.2f}" for c2 in c2_grid))
    for i, c1 in enumerate(c1_grid):
        cells = (
            "best" if means[i, j] == best else f"+{means[i, j] / best - 1:.1%}"
            for j in range(len(c2_grid))
        )
        print(f"{c1:8.2f}" + "".join(f"{c:>12s}" for c in cells))
    i_best, j_best = np.unravel_index(means.argmin(), means.shape)
    print(f"\nbest cell: c1={c1_grid[i_best]}, c2={c2_grid[j_best]} "
          f"at {best:.0f} evaluations; grid spread "
          f"{means.max() / best - 1:.1%} above best")


if __name__ == "__main__":
    main()
