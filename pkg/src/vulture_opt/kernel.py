"""Per-individual update rules of the vulture search dynamics.

Every operation is a pure function of explicit random draws, so each rule is
unit-testable in isolation. The engine owns draw order and clamping; none of
the step functions clamp their output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Population, RandomSource

__all__ = [
    "AvoaParams",
    "HungerState",
    "hunger_rate",
    "select_leader",
    "explore_step",
    "exploit_stage1_step",
    "exploit_stage2_step",
    "levy_flight",
]

# denominators this close to zero are floored to keep the focal attack finite
_DENOM_FLOOR = 1e-12


@dataclass(frozen=True)
class AvoaParams:
    """Branch probabilities and shape constants of the update rules.

    p1/p2/p3 gate the two-way branch inside each movement phase; alpha and
    beta weight the leader roulette (they must sum to 1); w shapes the slow
    periodic drift folded into the hunger rate.
    """

    p1: float = 0.6
    p2: float = 0.4
    p3: float = 0.6
    w: float = 2.5
    alpha: float = 0.8
    beta: float = 0.2

    def __post_init__(self):
        for name in ("p1", "p2", "p3", "alpha", "beta"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        if abs(self.alpha + self.beta - 1.0) > 1e-9:
            raise ValueError("alpha + beta must equal 1")
        if self.w <= 0.0:
            raise ValueError("w must be positive")


@dataclass(frozen=True)
class HungerState:
    """Scalar drive that dispatches an individual between movement phases.

    Attributes:
        rate: signed hunger rate; |rate| >= 1 sends the individual exploring,
            0.5 <= |rate| < 1 selects the first exploitation stage, and
            smaller magnitudes the second.
        drift: the slow periodic component already folded into ``rate``.
    """

    rate: float
    drift: float


def hunger_rate(t: int, max_iters: int, w: float, h: float, z: float, rand1: float) -> HungerState:
    """Hunger state at iteration t of max_iters.

    h in [-2, 2] scales the drift, z in [-1, 1] sets the sign and size of the
    decaying term, rand1 in [0, 1) jitters it. The drift vanishes at
    t == max_iters, so late iterations are dominated by the decaying term.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")
    if not 0 <= t <= max_iters:
        raise ValueError(f"t must lie in [0, {max_iters}], got {t}")
    s = t / max_iters
    angle = 0.5 * math.pi * s
    drift = h * (math.sin(angle) ** w + math.cos(angle) - 1.0)
    rate = (2.0 * rand1 + 1.0) * z * (1.0 - s) + drift
    return HungerState(rate, drift)


def select_leader(pop: Population, alpha: float, beta: float, draw: float) -> np.ndarray:
    """Roulette pick of a leader position: best1 with weight alpha, else best2."""
    if abs(alpha + beta - 1.0) > 1e-9:
        raise ValueError("leader weights must sum to 1")
    if pop.best1 is None or pop.best2 is None:
        raise ValueError("population has no leaders set")
    leader = pop.best1 if draw < alpha else pop.best2
    return leader.position


def _as_pair(p, R) -> tuple:
    p = np.asarray(p, dtype=float)
    R = np.asarray(R, dtype=float)
    if p.shape != R.shape or p.ndim != 1:
        raise ValueError("position and leader must be 1-d vectors of equal length")
    return p, R


def explore_step(p, R, F: float, space, choose: float, p1: float, *,
                 randx: float, rand2: float, rand3: float) -> np.ndarray:
    """Long-range move around a leader. Output is not clamped.

    choose < p1 circles the leader at a distance scaled by the hunger rate;
    otherwise the move re-draws a point inside the whole box around the
    leader's level.
    """
    p, R = _as_pair(p, R)
    if p.shape != (space.dim,):
        raise ValueError("position does not match the search space dimension")
    if choose < p1:
        return R - np.abs(2.0 * randx * R - p) * F
    return R - F + rand2 * ((space.upper - space.lower) * rand3 + space.lower)


def exploit_stage1_step(p, R, F: float, choose: float, p2: float, *,
                        randx: float, rand4: float, rand5: float, rand6: float) -> np.ndarray:
    """First exploitation stage. Output is not clamped.

    choose < p2 performs a siege oscillation around the leader; otherwise a
    rotating spiral move built from the position's own coordinates.
    """
    p, R = _as_pair(p, R)
    if choose < p2:
        return np.abs(2.0 * randx * R - p) * (F + rand4) - (R - p)
    s1 = R * (rand5 * p / (2.0 * math.pi)) * np.cos(p)
    s2 = R * (rand6 * p / (2.0 * math.pi)) * np.sin(p)
    return R - (s1 + s2)


def _guarded(denom: np.ndarray) -> np.ndarray:
    # floor near-zero denominators at +/-1e-12; the sign of a (+/-)0.0 counts as +
    sign = np.where(denom >= 0.0, 1.0, -1.0)
    return np.where(np.abs(denom) < _DENOM_FLOOR, sign * _DENOM_FLOOR, denom)


def exploit_stage2_step(p, pop: Population, R, F: float, choose: float, p3: float,
                        levy: np.ndarray) -> np.ndarray:
    """Second exploitation stage. Output is not clamped.

    choose < p3 aggregates an attack from both leaders toward the position;
    otherwise the position chases the leader with heavy-tailed step sizes.
    """
    p, R = _as_pair(p, R)
    levy = np.asarray(levy, dtype=float)
    if levy.shape != p.shape:
        raise ValueError("levy steps must match the position length")
    if choose < p3:
        b1 = pop.best1.position
        b2 = pop.best2.position
        a1 = b1 - (b1 * p) / _guarded(b1 - p ** 2) * F
        a2 = b2 - (b2 * p) / _guarded(b2 - p ** 2) * F
        return 0.5 * (a1 + a2)
    return R - np.abs(R - p) * F * levy


def levy_flight(dim: int, rng: RandomSource, beta: float = 1.5, scale: float = 0.01) -> np.ndarray:
    """dim heavy-tailed steps from the classical two-normal construction.

    Draws dim normals for the numerator first, then dim for the denominator;
    beta is the stability index.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    num = math.gamma(1.0 + beta) * math.sin(math.pi * beta / 2.0)
    den = math.gamma((1.0 + beta) / 2.0) * beta * 2.0 ** ((beta - 1.0) / 2.0)
    sigma = (num / den) ** (1.0 / beta)
    u = sigma * rng.normals(dim)
    v = rng.normals(dim)
    return scale * u / np.abs(v) ** (1.0 / beta)
