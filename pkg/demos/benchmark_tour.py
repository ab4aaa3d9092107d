"""Tour of the 23-function catalogue: bounds, optima, and spot evaluations.

Prints one line per function: dimensionality, search box, the catalogued
best value, and what the implementation returns at the known minimizer
(when one is catalogued; the noisy quartic has none).

Usage: python3 demos/benchmark_tour.py
"""

import numpy as np

from vulture_opt import evaluate, registry


def main() -> None:
    print(f"{'id':<4s} {'dim':>4s} {'box':>16s} {'known best':>14s} "
          f"{'value at minimizer':>20s}")
    print("-" * 64)
    for spec in registry():
        box = f"[{spec.lower:g}, {spec.upper:g}]"
        if spec.optimum_location is None:
            at_loc = "stochastic"
        else:
            value = evaluate(spec.fid, np.asarray(spec.optimum_location))
            at_loc = f"{value:.6g}"
        scal = "any" if spec.scalable else "fixed"
        print(f"{spec.fid:<4s} {spec.default_dim:>4d} {box:>16s} "
              f"{spec.known_optimum:>14.6g} {at_loc:>20s}  ({scal} dim)")

    print("\nplugging in your own problem:")
    from vulture_opt import external_problem, run, variant_config

    def quadratic_bowl(x):
        return float(np.sum((x - 1.5) ** 2))

    prob = external_problem(5, (-10.0, 10.0), quadratic_bowl, name="bowl")
    cfg = variant_config("hweavoa", pop_size=20, max_iters=100, seed=0)
    record = run(cfg, prob.objective, prob.space)
    print(f"  {prob.name}: final best {record.final_best.fitness:.3e} "
          f"(true optimum 0 at all-1.5)")


if __name__ == "__main__":
    main()
