#!/usr/bin/env python3
"""Watch the self-adjusting mutation rate react to the search phase.

Steps single runs of the two-rate and ea-ab variants generation by
generation and prints the live mutation rate next to the fitness: the rate
is pushed up while far from the optimum (large jumps pay off) and decays
toward the lower bound as the run converges.

Run:  python3 demos/rate_adaptation_trace.py [--n 5000] [--lambda 50]
"""

import argparse

from onemax_bench import AlgorithmConfig, AlgorithmRun, PMinRule, Variant


def trace(config: AlgorithmConfig, seed: int) -> None:
    sim = AlgorithmRun(config, seed)
    print(f"\n{config.variant.value} (p_min rule {config.p_min_rule.value}), "
          f"n={config.n}, lambda={config.lam}")
    print(f"{'generation':>10s} {'fitness':>9s} {'per-bit rate':>13s}")

    def emit():
        if config.variant == Variant.EA_AB:
            rate = sim.rate
        else:
            rate = sim.rate_numerator / config.n
        print(f"{sim.generation:10d} {sim.fitness:9d} {rate:13.3e}")

    emit()
    last = 0
    while not sim.is_optimal:
        sim.step()
        if sim.generation in (1, 2, 5, 10, 25, 50, 100) or sim.generation % 250 == 0:
            emit()
            last = sim.generation
    if last != sim.generation:
        emit()
    print(f"optimum found after {sim.generation} generations "
          f"({config.lam * sim.generation} evaluations)")


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=5000)
    parser.add_argument("--lambda", dest="lam", type=int, default=50)
    parser.add_argument("--seed", type=int, default=4)
    args = parser.parse_args()

    trace(AlgorithmConfig(Variant.TWO_RATE, args.n, args.lam), args.seed)
    trace(AlgorithmConfig(Variant.EA_AB, args.n, args.lam,
                          p_min_rule=PMinRule.OVER_N_SQUARED), args.seed)


if __name__ == "__main__":
    main()
