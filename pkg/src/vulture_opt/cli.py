"""Command-line interface: single runs, campaigns, timing, stats recomputation.

Exit codes: 0 on success, 1 for configuration/usage problems (bad names,
malformed config, impossible settings), 2 for failures while running
(objective returned NaN, output I/O errors).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .benchmarks import registry
from .core import EvaluationError
from .engine import VARIANT_FLAGS
from .harness import (Campaign, complexity_protocol, compute_stats,
                      load_campaign, read_results_csv, run_campaign)

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vulture-opt",
        description="Vulture-inspired optimization runs, campaigns, and statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one variant on one function")
    run_p.add_argument("--variant", required=True, choices=sorted(VARIANT_FLAGS))
    run_p.add_argument("--function", required=True, metavar="F1..F23")
    run_p.add_argument("--dim", type=int, default=None,
                       help="dimension for scalable functions (default: catalogue dimension)")
    run_p.add_argument("--pop", type=int, default=30, help="population size (default 30)")
    run_p.add_argument("--iters", type=int, default=500, help="iterations (default 500)")
    run_p.add_argument("--runs", type=int, default=1, help="independent seeded runs (default 1)")
    run_p.add_argument("--seed", type=int, default=0, help="base seed (run r uses seed+r)")
    run_p.add_argument("--out", required=True, help="output directory")
    run_p.set_defaults(handler=_cmd_run)

    camp_p = sub.add_parser("campaign", help="run a whole variant x function grid from a config file")
    camp_p.add_argument("--config", required=True, help="campaign config file (TOML)")
    camp_p.set_defaults(handler=_cmd_campaign)

    comp_p = sub.add_parser("complexity", help="measure the runtime-complexity protocol")
    comp_p.add_argument("--dim", type=int, required=True, choices=[10, 20])
    comp_p.add_argument("--evals", type=int, default=200000,
                        help="evaluation budget (default 200000)")
    comp_p.add_argument("--repeats", type=int, default=5,
                        help="full runs to average (default 5)")
    comp_p.add_argument("--variant", default="hweavoa", choices=sorted(VARIANT_FLAGS))
    comp_p.set_defaults(handler=_cmd_complexity)

    stats_p = sub.add_parser("stats", help="recompute stats.json from an existing results.csv")
    stats_p.add_argument("--in", dest="in_dir", required=True,
                         help="directory holding results.csv")
    stats_p.set_defaults(handler=_cmd_stats)

    return parser


def _cmd_run(args) -> int:
    spec = {s.fid: s for s in registry()}.get(args.function.upper())
    if spec is None:
        raise ValueError(f"unknown function id {args.function!r}; expected F1..F23")
    if args.dim is not None and not spec.scalable and args.dim != spec.default_dim:
        raise ValueError(f"{spec.fid} is fixed at dimension {spec.default_dim}")
    campaign = Campaign(variants=(args.variant,), functions=(spec.fid,),
                        runs=args.runs, base_seed=args.seed, output_dir=args.out,
                        pop_size=args.pop, max_iters=args.iters, dim=args.dim)
    table, paths = run_campaign(campaign)
    finals = table.cell(args.variant, spec.fid)
    for r, value in enumerate(finals):
        print(f"run {r} (seed {args.seed + r}): final best {value:.6e}")
    mean = sum(finals) / len(finals)
    print(f"{args.variant} on {spec.fid}: mean {mean:.6e} over {len(finals)} run(s)")
    print(f"wrote {paths['results']}, {paths['curves']}, {paths['stats']}")
    return 0


def _cmd_campaign(args) -> int:
    campaign = load_campaign(args.config)
    table, paths = run_campaign(campaign)
    cells = len(campaign.variants) * len(campaign.functions)
    print(f"campaign finished: {cells} cell(s) x {campaign.runs} run(s)")
    for variant in table.algorithms:
        for fn in table.functions:
            finals = table.cell(variant, fn)
            print(f"  {variant:>8s} {fn:>4s}: mean {sum(finals) / len(finals):.6e}")
    print(f"wrote {paths['results']}, {paths['curves']}, {paths['stats']}")
    return 0


def _cmd_complexity(args) -> int:
    result = complexity_protocol(args.dim, evaluations=args.evals,
                                 repeats=args.repeats, variant=args.variant)
    print(f"dim {args.dim}, variant {args.variant}, budget {args.evals}")
    print(f"T0 (reference loop)   : {result.t0:.6f} s")
    print(f"T1 (raw evaluations)  : {result.t1:.6f} s")
    print(f"T2 (mean full run)    : {result.t2:.6f} s")
    print(f"complexity (T2-T1)/T0 : {result.complexity:.6f}")
    return 0


def _cmd_stats(args) -> int:
    in_dir = Path(args.in_dir)
    _rows, table = read_results_csv(in_dir / "results.csv")
    payload = compute_stats(table)
    out_path = in_dir / "stats.json"
    with out_path.open("w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    print(f"algorithms: {', '.join(table.algorithms)}")
    for entry in payload["friedman"]:
        print(f"  {entry['alg']:>8s}: average rank {entry['avg_rank']:.4f}")
    print(f"wrote {out_path}")
    return 0


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and on --help
        code = exc.code if exc.code is not None else 0
        return 0 if code == 0 else 1
    try:
        return args.handler(args)
    except EvaluationError as exc:
        print(f"evaluation failed: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"I/O failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
