"""Optional search improvements layered on the base dynamics.

Three independent toggles: chaotic-elite seeding of the initial population,
a periodic inertia damping of freshly built candidates, and a mirrored
candidate competition after each move.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .core import RandomSource, SearchSpace, Vulture, clamp, uniform

__all__ = [
    "HenonParams",
    "WeightParams",
    "henon_sequence",
    "henon_init",
    "elite_merge",
    "inertia_weight",
    "reverse_candidate",
    "rlc_select",
]

# |x| beyond this is treated as divergence and the sequence restarts
_DIVERGE_LIMIT = 1e5
_MAX_RESTARTS = 100
# fresh map seeds are drawn uniformly from [0, this)
_SEED_HIGH = 0.1


@dataclass(frozen=True)
class HenonParams:
    """Chaotic-map constants plus iteration bookkeeping.

    The default (a, b) = (1.4, 0.3) sits in the map's classical chaotic
    regime; burn_in iterations are discarded so emitted points start on the
    attractor.
    """

    a: float = 1.4
    b: float = 0.3
    x0: float = 0.0
    y0: float = 0.0
    burn_in: int = 100

    def __post_init__(self):
        if self.burn_in < 0:
            raise ValueError("burn_in must be >= 0")


@dataclass(frozen=True)
class WeightParams:
    """Schedule constants for the periodic damping factor.

    Iterations where t mod period reaches the threshold get a crushing factor
    built from alpha + beta * draw; all other iterations pass through at 1.
    """

    alpha: float = 0.8
    beta: float = 0.2
    period: int = 6
    threshold: int = 3

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if self.threshold < 0:
            raise ValueError("threshold must be >= 0")


def henon_sequence(n: int, params: HenonParams, rng: RandomSource | None = None) -> list:
    """First n (x, y) iterates after burn-in.

    If |x| blows past 1e5 the whole sequence restarts from small fresh seeds
    (drawn from rng when given, otherwise from a deterministic fallback
    stream keyed by the restart count), so output stays well-scaled for
    position mapping. Persistent divergence raises RuntimeError.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x, y = float(params.x0), float(params.y0)
    out: list = []
    restarts = 0
    step = 0
    while len(out) < n:
        x, y = 1.0 + y - params.a * x * x, params.b * x
        step += 1
        if abs(x) > _DIVERGE_LIMIT:
            restarts += 1
            if restarts > _MAX_RESTARTS:
                raise RuntimeError(
                    "chaotic sequence diverged repeatedly; check the a/b constants"
                )
            if rng is not None:
                x, y = _SEED_HIGH * rng.random(), _SEED_HIGH * rng.random()
            else:
                fresh = np.random.Generator(np.random.PCG64(restarts))
                x, y = _SEED_HIGH * fresh.random(), _SEED_HIGH * fresh.random()
            out.clear()
            step = 0
            continue
        if step > params.burn_in:
            out.append((x, y))
    return out


def henon_init(n: int, space: SearchSpace, rng: RandomSource,
               params: HenonParams = HenonParams()) -> np.ndarray:
    """n positions (rows) mapped from the chaotic x-track.

    Draws the two map seeds from rng (x0 first, then y0), generates
    n * dim x-values, min-max normalizes the whole batch to [0, 1], and
    scales each column into its axis bounds; consecutive x-values fill
    row-major, one row per individual. A degenerate batch (all x equal)
    falls back to plain uniform sampling with a warning.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    seeded = replace(params,
                     x0=uniform(rng, 0.0, _SEED_HIGH),
                     y0=uniform(rng, 0.0, _SEED_HIGH))
    xs = np.array([pt[0] for pt in henon_sequence(n * space.dim, seeded, rng)])
    low = xs.min()
    span = xs.max() - low
    if span == 0.0:
        warnings.warn("chaotic batch collapsed to a single value; falling back to uniform init",
                      RuntimeWarning)
        unit = np.array([rng.random() for _ in range(n * space.dim)])
    else:
        unit = (xs - low) / span
    grid = unit.reshape(n, space.dim)
    return space.lower + grid * (space.upper - space.lower)


def elite_merge(chaotic: list, conventional: list) -> list:
    """Best half of the two equally sized pools, fitness-ascending.

    The sort is stable: on ties, chaotic members (listed first) outrank
    conventional ones at the same fitness.
    """
    if len(chaotic) != len(conventional):
        raise ValueError("pools must have equal size")
    merged = sorted([*chaotic, *conventional], key=lambda v: v.fitness)
    return merged[: len(chaotic)]


def inertia_weight(t: int, max_iters: int, params: WeightParams, draw: float) -> float:
    """Damping factor in (0, 1] applied to freshly built candidates.

    On iterations where t mod period >= threshold the factor drops to
    (alpha + beta * draw) * sin((pi/10) * (t / max_iters))^5 -- a crushing
    value below ~2.9e-3 -- and is exactly 1 otherwise.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")
    if not 1 <= t <= max_iters:
        raise ValueError(f"t must lie in [1, {max_iters}], got {t}")
    if t % params.period >= params.threshold:
        gain = params.alpha + params.beta * draw
        return gain * math.sin((math.pi / 10.0) * (t / max_iters)) ** 5
    return 1.0


def reverse_candidate(p, space: SearchSpace, draw: float) -> np.ndarray:
    """Mirror of p through draw * (upper + lower), clamped into the box."""
    p = np.asarray(p, dtype=float)
    if p.shape != (space.dim,):
        raise ValueError("position does not match the search space dimension")
    return clamp(draw * (space.upper + space.lower) - p, space)


def rlc_select(incumbent: Vulture, challenger: Vulture) -> Vulture:
    """Keep the lower-fitness of the pair; ties keep the incumbent."""
    return challenger if challenger.fitness < incumbent.fitness else incumbent
