"""One seeded run of the full variant on the 30-D sphere, narrated.

Usage: python3 demos/single_run.py [seed]
"""

import sys

from vulture_opt import problem, run, variant_config


def main() -> None:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    prob = problem("F1", 30)
    cfg = variant_config("hweavoa", pop_size=30, max_iters=500, seed=seed)

    print(f"function   : {prob.name} (dim {prob.space.dim}, "
          f"bounds [{prob.space.lower[0]:g}, {prob.space.upper[0]:g}])")
    print(f"variant    : hweavoa  pop 30  iters 500  seed {seed}")

    record = run(cfg, prob.objective, prob.space)

    curve = record.best_fitness_per_iteration
    print(f"evaluations: {record.evaluations_used}")
    print(f"wall time  : {record.wall_time_seconds:.2f} s")
    print("\nbest-so-far milestones:")
    for t in (1, 5, 25, 100, 250, 500):
        print(f"  iter {t:>3d}: {curve[t - 1]:.6e}")
    print(f"\nfinal best fitness: {record.final_best.fitness:.6e}")
    head = ", ".join(f"{v:.2e}" for v in record.final_best.position[:4])
    print(f"final position head: [{head}, ...]")


if __name__ == "__main__":
    main()
