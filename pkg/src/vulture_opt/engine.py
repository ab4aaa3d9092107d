"""The composed optimization loop.

Seeded initialization, per-iteration phase dispatch on the hunger rate, the
three optional improvement strategies, and elitist leader memory. All member
updates within an iteration read the same leader snapshot (synchronous
updates).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .core import (EvaluationError, Population, RandomSource, SearchSpace,
                   Vulture, clamp, uniform, update_leaders)
from .kernel import (AvoaParams, exploit_stage1_step, exploit_stage2_step,
                     explore_step, hunger_rate, levy_flight, select_leader)
from .strategies import (HenonParams, WeightParams, elite_merge, henon_init,
                         inertia_weight, reverse_candidate, rlc_select)

__all__ = [
    "VARIANT_FLAGS",
    "VariantConfig",
    "RunRecord",
    "variant_config",
    "initialize",
    "step",
    "run",
]

# variant name -> (chaotic-elite init, inertia weight, reverse-learning competition)
VARIANT_FLAGS = {
    "avoa": (False, False, False),
    "havoa": (True, False, False),
    "wavoa": (False, True, False),
    "eavoa": (False, False, True),
    "hwavoa": (True, True, False),
    "heavoa": (True, False, True),
    "weavoa": (False, True, True),
    "hweavoa": (True, True, True),
}


@dataclass(frozen=True)
class VariantConfig:
    """Everything that determines one optimizer run."""

    use_henon_elite: bool = False
    use_weight: bool = False
    use_rlc: bool = False
    avoa: AvoaParams = field(default_factory=AvoaParams)
    henon: HenonParams = field(default_factory=HenonParams)
    weight: WeightParams = field(default_factory=WeightParams)
    pop_size: int = 30
    max_iters: int = 500
    seed: int = 0

    def __post_init__(self):
        if self.pop_size < 2:
            raise ValueError("pop_size must be >= 2")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")


@dataclass(frozen=True, eq=False)
class RunRecord:
    """Everything one seeded run produced."""

    seed: int
    best_fitness_per_iteration: np.ndarray
    final_best: Vulture
    evaluations_used: int
    wall_time_seconds: float


def variant_config(name: str, *, pop_size: int = 30, max_iters: int = 500, seed: int = 0,
                   avoa: AvoaParams | None = None, henon: HenonParams | None = None,
                   weight: WeightParams | None = None) -> VariantConfig:
    """Build the configuration for one of the eight named variants."""
    try:
        use_h, use_w, use_e = VARIANT_FLAGS[name.lower()]
    except KeyError:
        raise ValueError(
            f"unknown variant {name!r}; expected one of {sorted(VARIANT_FLAGS)}"
        ) from None
    return VariantConfig(use_h, use_w, use_e,
                         avoa or AvoaParams(), henon or HenonParams(),
                         weight or WeightParams(), pop_size, max_iters, seed)


def _evaluated(objective, position: np.ndarray) -> Vulture:
    value = float(objective(position))
    if math.isnan(value):
        raise EvaluationError(position)
    return Vulture(position, value)


def initialize(cfg: VariantConfig, objective, space: SearchSpace,
               rng: RandomSource) -> Population:
    """Seed the population; chaotic-elite selection doubles the initial evaluations.

    Draw order: the conventional members' uniforms come first (member-major,
    axis-minor), then the chaotic seeds -- so the conventional half is
    identical for the same seed whether or not the elite toggle is on.
    """
    conventional = []
    for _ in range(cfg.pop_size):
        pos = np.array([uniform(rng, lo, hi) for lo, hi in zip(space.lower, space.upper)])
        conventional.append(_evaluated(objective, pos))
    if cfg.use_henon_elite:
        rows = henon_init(cfg.pop_size, space, rng, cfg.henon)
        chaotic = [_evaluated(objective, row) for row in rows]
        members = elite_merge(chaotic, conventional)
    else:
        members = conventional
    return update_leaders(Population(members))


def step(pop: Population, t: int, cfg: VariantConfig, objective,
         space: SearchSpace, rng: RandomSource) -> Population:
    """Advance one iteration; every member moves from the same leader snapshot.

    Per-member draw order (fixed, so runs replay exactly): h, z, rand1, the
    damping draw when enabled, the branch-choose draw, the leader draw, then
    the selected phase's own draws (explore: randx/rand2/rand3; stage one:
    randx/rand4/rand5/rand6; stage two: the heavy-tail normal pairs, consumed
    by both branches), and finally the mirror draw when the reverse-learning
    competition is enabled. Leaders update once at the end, pooled with the
    previous pair so the best-ever two are kept.
    """
    if not 1 <= t <= cfg.max_iters:
        raise ValueError(f"iteration {t} outside [1, {cfg.max_iters}]")
    par = cfg.avoa
    new_members = []
    for member in pop.members:
        h = uniform(rng, -2.0, 2.0)
        z = uniform(rng, -1.0, 1.0)
        state = hunger_rate(t, cfg.max_iters, par.w, h, z, uniform(rng, 0.0, 1.0))
        if cfg.use_weight:
            damping = inertia_weight(t, cfg.max_iters, cfg.weight, uniform(rng, 0.0, 1.0))
        else:
            damping = 1.0
        choose = uniform(rng, 0.0, 1.0)
        leader = select_leader(pop, par.alpha, par.beta, uniform(rng, 0.0, 1.0))
        rate = state.rate
        if abs(rate) >= 1.0:
            candidate = explore_step(
                member.position, leader, rate, space, choose, par.p1,
                randx=uniform(rng, 0.0, 1.0),
                rand2=uniform(rng, 0.0, 1.0),
                rand3=uniform(rng, 0.0, 1.0),
            )
        elif abs(rate) >= 0.5:
            candidate = exploit_stage1_step(
                member.position, leader, rate, choose, par.p2,
                randx=uniform(rng, 0.0, 1.0),
                rand4=uniform(rng, 0.0, 1.0),
                rand5=uniform(rng, 0.0, 1.0),
                rand6=uniform(rng, 0.0, 1.0),
            )
        else:
            steps = levy_flight(space.dim, rng)
            candidate = exploit_stage2_step(
                member.position, pop, leader, rate, choose, par.p3, steps,
            )
        moved = _evaluated(objective, clamp(damping * candidate, space))
        if cfg.use_rlc:
            mirrored = reverse_candidate(moved.position, space, uniform(rng, 0.0, 1.0))
            moved = rlc_select(moved, _evaluated(objective, mirrored))
        new_members.append(moved)
    pool = [pop.best1, pop.best2, *new_members]
    pool.sort(key=lambda v: v.fitness)  # stable: incumbents outrank equal newcomers
    return Population(new_members, pool[0], pool[1])


def run(cfg: VariantConfig, objective, space: SearchSpace) -> RunRecord:
    """Execute one full seeded run and record its convergence curve."""
    rng = RandomSource(cfg.seed)
    started = time.perf_counter()
    pop = initialize(cfg, objective, space, rng)
    curve = np.empty(cfg.max_iters, dtype=float)
    for t in range(1, cfg.max_iters + 1):
        pop = step(pop, t, cfg, objective, space, rng)
        curve[t - 1] = pop.best1.fitness
    elapsed = time.perf_counter() - started
    init_evals = cfg.pop_size * (2 if cfg.use_henon_elite else 1)
    per_iter = cfg.pop_size * (2 if cfg.use_rlc else 1)
    return RunRecord(cfg.seed, curve, pop.best1,
                     init_evals + cfg.max_iters * per_iter, elapsed)
