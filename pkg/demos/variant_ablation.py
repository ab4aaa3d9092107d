"""Ablation across all eight variants: which strategy earns its keep where?

Runs every variant on a couple of landscapes with the same seeds and prints
mean final fitness per variant. The chaotic-elite (h) and mirror-competition
(e) toggles tend to help broadly; the periodic damping schedule (w) helps
origin-basin landscapes and hurts off-origin valleys -- visible here.

Usage: python3 demos/variant_ablation.py [runs]
"""

import sys

from vulture_opt import VARIANT_FLAGS, problem, run, variant_config

FUNCTIONS = ("F1", "F5")
POP, ITERS = 30, 200


def main() -> None:
    runs = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    print(f"{runs} run(s) per cell, pop {POP}, iters {ITERS}, dim 30\n")
    header = "variant  (toggles)" + "".join(f"{fid:>14s}" for fid in FUNCTIONS)
    print(header)
    print("-" * len(header))
    for name in sorted(VARIANT_FLAGS):
        henon, weight, rlc = VARIANT_FLAGS[name]
        toggles = "".join(flag if on else "-" for flag, on in
                          (("h", henon), ("w", weight), ("e", rlc)))
        means = []
        for fid in FUNCTIONS:
            prob = problem(fid, 30)
            finals = []
            for seed in range(runs):
                cfg = variant_config(name, pop_size=POP, max_iters=ITERS,
                                     seed=seed)
                finals.append(run(cfg, prob.objective, prob.space)
                              .final_best.fitness)
            means.append(sum(finals) / len(finals))
        cells = "".join(f"{m:>14.4e}" for m in means)
        print(f"{name:<8s} ({toggles})   {cells}")


if __name__ == "__main__":
    main()
