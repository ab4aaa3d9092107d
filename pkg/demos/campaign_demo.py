"""A small end-to-end campaign: grid, files, and the stats digest.

Runs two variants on two functions with paired seeds, then shows what
landed on disk and how to read the stats.json payload back.

Usage: python3 demos/campaign_demo.py [output_dir]
"""

import json
import sys

from vulture_opt import Campaign, run_campaign


def main() -> None:
    out = sys.argv[1] if len(sys.argv) > 1 else "campaign-demo-out"
    campaign = Campaign(
        variants=("avoa", "hweavoa"),
        functions=("F1", "F9"),
        runs=5,
        base_seed=0,
        output_dir=out,
        pop_size=20,
        max_iters=150,
        dim=10,
    )
    cells = len(campaign.variants) * len(campaign.functions)
    print(f"running {cells} cells x {campaign.runs} runs "
          f"(pop {campaign.pop_size}, iters {campaign.max_iters}, "
          f"dim {campaign.dim}) ...")
    table, paths = run_campaign(campaign)

    print("\nfiles written:")
    for kind, path in paths.items():
        lines = sum(1 for _ in open(path)) if path.suffix == ".csv" else "-"
        print(f"  {kind:<8s} {path}  ({lines} lines)" if lines != "-"
              else f"  {kind:<8s} {path}")

    payload = json.loads(paths["stats"].read_text())
    print("\naverage competition ranks:")
    for entry in payload["friedman"]:
        print(f"  {entry['alg']:<8s} {entry['avg_rank']:.2f}")

    print("\npairwise tests:")
    for entry in payload["wilcoxon"]:
        print(f"  {entry['alg_a']} vs {entry['alg_b']} on "
              f"{entry['function']}: p = {entry['p']:.3e}  "
              f"'{entry['symbol']}'")

    print("\nmean final fitness per cell:")
    for alg in table.algorithms:
        for fn in table.functions:
            samples = table.cell(alg, fn)
            print(f"  {alg:<8s} {fn}: {sum(samples) / len(samples):.4e}")


if __name__ == "__main__":
    main()
