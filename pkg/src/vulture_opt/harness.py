"""Campaign execution, result emission, and the timing-complexity protocol."""

from __future__ import annotations

import csv
import json
import math
import time
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import engine
from .benchmarks import problem, registry
from .engine import VARIANT_FLAGS, variant_config
from .stats import (ResultTable, avg_std, friedman_avg_ranks,
                    significance_symbol, wilcoxon_ranksum_p)

__all__ = [
    "Campaign",
    "ComplexityResult",
    "load_campaign",
    "run_campaign",
    "compute_stats",
    "emit_results",
    "read_results_csv",
    "complexity_protocol",
]

_RESULT_FIELDS = ["variant", "function", "run", "seed",
                  "final_fitness", "evals", "wall_time_s"]
_CURVE_FIELDS = ["variant", "function", "run", "iter", "best_fitness", "evals"]


@dataclass(frozen=True)
class Campaign:
    """A grid of (variant, function) cells, each run `runs` times.

    Run r of every cell uses seed base_seed + r, so runs are paired across
    variants. dim applies to scalable functions only; fixed-dimension
    entries always use their own dimension.
    """

    variants: tuple
    functions: tuple
    runs: int
    base_seed: int
    output_dir: str
    pop_size: int = 30
    max_iters: int = 500
    dim: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "variants", tuple(self.variants))
        object.__setattr__(self, "functions", tuple(str(f).upper() for f in self.functions))
        if not self.variants:
            raise ValueError("campaign needs at least one variant")
        if not self.functions:
            raise ValueError("campaign needs at least one function")
        unknown = [v for v in self.variants if v not in VARIANT_FLAGS]
        if unknown:
            raise ValueError(f"unknown variants: {unknown}; expected {sorted(VARIANT_FLAGS)}")
        known_ids = {spec.fid for spec in registry()}
        bad = [f for f in self.functions if f not in known_ids]
        if bad:
            raise ValueError(f"unknown function ids: {bad}; expected F1..F23")
        if len(set(self.variants)) != len(self.variants):
            raise ValueError("duplicate variants in campaign")
        if len(set(self.functions)) != len(self.functions):
            raise ValueError("duplicate functions in campaign")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.pop_size < 2:
            raise ValueError("pop_size must be >= 2")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.dim is not None and self.dim < 1:
            raise ValueError("dim must be >= 1")


_REQUIRED_KEYS = {"variants", "functions", "runs", "base_seed", "output_dir"}
_OPTIONAL_KEYS = {"pop_size", "max_iters", "dim"}


def load_campaign(path) -> Campaign:
    """Parse a campaign config file (TOML). Any config problem raises ValueError."""
    p = Path(path)
    try:
        raw = tomllib.loads(p.read_text())
    except FileNotFoundError:
        raise ValueError(f"config file not found: {p}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ValueError(f"malformed config {p}: {exc}") from None
    unknown = set(raw) - _REQUIRED_KEYS - _OPTIONAL_KEYS
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    missing = _REQUIRED_KEYS - set(raw)
    if missing:
        raise ValueError(f"missing config keys: {sorted(missing)}")
    for key in ("runs", "base_seed", "pop_size", "max_iters", "dim"):
        if key in raw and type(raw[key]) is not int:
            raise ValueError(f"config key {key!r} must be an integer")
    for key in ("variants", "functions"):
        if not isinstance(raw[key], list) or not all(isinstance(v, str) for v in raw[key]):
            raise ValueError(f"config key {key!r} must be a list of strings")
    if not isinstance(raw["output_dir"], str):
        raise ValueError("config key 'output_dir' must be a string")
    return Campaign(**raw)


def _cell_dim(campaign: Campaign, spec_by_id: dict, fid: str) -> int | None:
    spec = spec_by_id[fid]
    return campaign.dim if (spec.scalable and campaign.dim is not None) else None


def run_campaign(campaign: Campaign) -> tuple:
    """Run every (variant, function, run) cell and write the three output files.

    The output directory is created (and probed for writability) before any
    run starts, so I/O problems surface immediately. Returns the assembled
    ResultTable and a dict of written file paths.
    """
    out = Path(campaign.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    probe = out / ".write-probe"
    probe.write_text("")
    probe.unlink()

    spec_by_id = {spec.fid: spec for spec in registry()}
    result_rows = []
    curve_rows = []
    samples = {v: {f: [] for f in campaign.functions} for v in campaign.variants}
    for variant in campaign.variants:
        for fid in campaign.functions:
            prob = problem(fid, _cell_dim(campaign, spec_by_id, fid))
            for r in range(campaign.runs):
                cfg = variant_config(variant, pop_size=campaign.pop_size,
                                     max_iters=campaign.max_iters,
                                     seed=campaign.base_seed + r)
                record = engine.run(cfg, prob.objective, prob.space)
                samples[variant][fid].append(record.final_best.fitness)
                result_rows.append((variant, fid, r, record.seed,
                                    record.final_best.fitness,
                                    record.evaluations_used,
                                    record.wall_time_seconds))
                init_evals = cfg.pop_size * (2 if cfg.use_henon_elite else 1)
                per_iter = cfg.pop_size * (2 if cfg.use_rlc else 1)
                for t, best in enumerate(record.best_fitness_per_iteration, start=1):
                    curve_rows.append((variant, fid, r, t, float(best),
                                       init_evals + t * per_iter))
    table = ResultTable(campaign.variants, campaign.functions, samples)
    paths = emit_results(out, result_rows, curve_rows, table)
    return table, paths


def compute_stats(table: ResultTable) -> dict:
    """The stats.json payload: average ranks, pairwise tests, per-cell avg/std.

    With a single algorithm the pairwise list is empty and every average
    rank is 1.
    """
    friedman = [{"alg": alg, "avg_rank": rank}
                for alg, rank in friedman_avg_ranks(table)]
    wilcoxon = []
    for i, alg_a in enumerate(table.algorithms):
        for alg_b in table.algorithms[i + 1:]:
            for fn in table.functions:
                sample_a = table.cell(alg_a, fn)
                sample_b = table.cell(alg_b, fn)
                p = wilcoxon_ranksum_p(sample_a, sample_b)
                wilcoxon.append({"alg_a": alg_a, "alg_b": alg_b, "function": fn,
                                 "p": p,
                                 "symbol": significance_symbol(p, sample_a, sample_b)})
    cells = []
    for alg in table.algorithms:
        for fn in table.functions:
            avg, std = avg_std(table.cell(alg, fn))
            cells.append({"alg": alg, "function": fn, "avg": avg, "std": std})
    return {"friedman": friedman, "wilcoxon": wilcoxon, "table": cells}


def emit_results(out_dir, result_rows, curve_rows, table: ResultTable,
                 stats: dict | None = None) -> dict:
    """Write results.csv, curves.csv, and stats.json under out_dir.

    Floats are written with repr (shortest round-trip form) except wall
    times, which get a fixed format; a parse of results.csv therefore
    rebuilds the exact fitness values. Returns the written paths.
    """
    if not result_rows:
        raise ValueError("no result rows to emit")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stats_payload = compute_stats(table) if stats is None else stats

    results_path = out / "results.csv"
    with results_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_RESULT_FIELDS)
        for variant, fid, run_idx, seed, fitness, evals, wall in result_rows:
            writer.writerow([variant, fid, run_idx, seed, repr(float(fitness)),
                             evals, f"{wall:.6f}"])

    curves_path = out / "curves.csv"
    with curves_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_CURVE_FIELDS)
        for variant, fid, run_idx, t, best, evals in curve_rows:
            writer.writerow([variant, fid, run_idx, t, repr(float(best)), evals])

    stats_path = out / "stats.json"
    with stats_path.open("w") as fh:
        json.dump(stats_payload, fh, indent=2)
        fh.write("\n")

    return {"results": results_path, "curves": curves_path, "stats": stats_path}


def read_results_csv(path) -> tuple:
    """Rebuild (result_rows, ResultTable) from an emitted results.csv."""
    p = Path(path)
    if not p.is_file():
        raise ValueError(f"results file not found: {p}")
    rows = []
    with p.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != _RESULT_FIELDS:
            raise ValueError(f"unexpected results.csv header: {reader.fieldnames}")
        for rec in reader:
            rows.append((rec["variant"], rec["function"], int(rec["run"]),
                         int(rec["seed"]), float(rec["final_fitness"]),
                         int(rec["evals"]), float(rec["wall_time_s"])))
    if not rows:
        raise ValueError(f"results file is empty: {p}")
    variants = list(dict.fromkeys(row[0] for row in rows))
    functions = list(dict.fromkeys(row[1] for row in rows))
    samples = {v: {f: [] for f in functions} for v in variants}
    for variant, fid, _run, _seed, fitness, _evals, _wall in rows:
        samples[variant][fid].append(fitness)
    return rows, ResultTable(variants, functions, samples)


class ComplexityResult(NamedTuple):
    """Timing summary: reference loop, raw evaluations, full runs, ratio."""

    t0: float
    t1: float
    t2: float
    complexity: float


_REFERENCE_ROUNDS = 200000


def _reference_loop_time() -> float:
    """Wall time of the fixed arithmetic reference loop."""
    x = 0.55
    started = time.perf_counter()
    for _ in range(_REFERENCE_ROUNDS):
        x = x + x
        x = x / 2.0
        x = x * x
        x = math.sqrt(x)
        x = math.log(x) if x > 0.0 else -math.inf  # log(0) -> -inf instead of raising
        x = math.exp(x)
        x = x / (x + 2.0)
    return time.perf_counter() - started


def complexity_protocol(dim: int, evaluations: int = 200000, repeats: int = 5,
                        variant: str = "hweavoa") -> ComplexityResult:
    """Relative runtime cost of the full optimizer against raw evaluation cost.

    t0 times the fixed arithmetic reference loop; t1 times `evaluations`
    sphere evaluations at the given dimension; t2 averages `repeats` full
    optimizer runs sized to the same evaluation budget. The reported
    complexity is (t2 - t1) / t0.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    if evaluations < 1:
        raise ValueError("evaluations must be >= 1")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    if variant not in VARIANT_FLAGS:
        raise ValueError(f"unknown variant {variant!r}")

    t0 = _reference_loop_time()

    prob = problem("F1", dim)
    rng = np.random.Generator(np.random.PCG64(0))
    points = rng.uniform(prob.space.lower[0], prob.space.upper[0],
                         size=(min(evaluations, 4096), dim))
    objective = prob.objective
    count = points.shape[0]
    started = time.perf_counter()
    for i in range(evaluations):
        objective(points[i % count])
    t1 = time.perf_counter() - started

    use_h, _use_w, use_e = VARIANT_FLAGS[variant]
    pop = 30
    init_evals = pop * (2 if use_h else 1)
    per_iter = pop * (2 if use_e else 1)
    iters = max(1, (evaluations - init_evals) // per_iter)
    times = []
    for k in range(repeats):
        cfg = variant_config(variant, pop_size=pop, max_iters=iters, seed=k)
        times.append(engine.run(cfg, objective, prob.space).wall_time_seconds)
    t2 = sum(times) / len(times)
    return ComplexityResult(t0, t1, t2, (t2 - t1) / t0)
