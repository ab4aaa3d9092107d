"""The statistics toolkit on a synthetic three-algorithm shoot-out.

Builds per-run results for three fictional optimizers on four functions,
then walks through the three layers of the reporting stack: avg/std cells,
average competition ranks, and pairwise rank-sum tests with significance
symbols.

Usage: python3 demos/statistics_walkthrough.py
"""

import numpy as np

from vulture_opt import (ResultTable, avg_std, friedman_avg_ranks,
                         significance_symbol, wilcoxon_ranksum_p)

ALGS = ("steady", "jumpy", "sloppy")
FUNCTIONS = ("G1", "G2", "G3", "G4")
RUNS = 20


def main() -> None:
    gen = np.random.Generator(np.random.PCG64(11))
    # "steady" is best, "jumpy" close behind with more spread, "sloppy" worst
    scale = {"steady": (1.0, 0.1), "jumpy": (1.3, 0.6), "sloppy": (4.0, 0.8)}
    cells = {alg: {} for alg in ALGS}
    for alg in ALGS:
        mean, spread = scale[alg]
        for fn in FUNCTIONS:
            cells[alg][fn] = list(np.abs(gen.normal(mean, spread, RUNS)))
    table = ResultTable(ALGS, FUNCTIONS, cells)

    print("avg +/- std per cell:")
    for alg in ALGS:
        row = "  ".join(
            "{:.3f}+/-{:.3f}".format(*avg_std(table.cell(alg, fn)))
            for fn in FUNCTIONS)
        print(f"  {alg:<7s} {row}")

    print("\naverage competition rank (lower is better):")
    for alg, rank in friedman_avg_ranks(table):
        print(f"  {alg:<7s} {rank:.2f}")

    print("\npairwise rank-sum tests per function "
          "(symbol: row beats column '+', loses '-', tie '='):")
    for i, a in enumerate(ALGS):
        for b in ALGS[i + 1:]:
            for fn in FUNCTIONS:
                ours, theirs = table.cell(a, fn), table.cell(b, fn)
                p = wilcoxon_ranksum_p(ours, theirs)
                sym = significance_symbol(p, ours, theirs)
                print(f"  {a} vs {b} on {fn}: p = {p:.3e}  '{sym}'")


if __name__ == "__main__":
    main()
