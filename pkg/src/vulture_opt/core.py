"""Shared domain types: search box, candidate solutions, seeded randomness."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "EvaluationError",
    "SearchSpace",
    "Vulture",
    "Population",
    "RandomSource",
    "clamp",
    "uniform",
    "update_leaders",
]


class EvaluationError(RuntimeError):
    """An objective returned NaN at an in-bounds position."""

    def __init__(self, position):
        self.position = np.asarray(position, dtype=float).copy()
        super().__init__(
            f"objective returned NaN at position {self.position.tolist()}"
        )


@dataclass(frozen=True, eq=False)
class SearchSpace:
    """Axis-aligned box constraining every candidate position.

    Attributes:
        lower: per-axis lower bounds, shape (dim,).
        upper: per-axis upper bounds, element-wise strictly above lower.
    """

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise ValueError("bounds must be 1-d arrays of matching length")
        if lower.size < 1:
            raise ValueError("search space needs at least one axis")
        if not np.all(lower < upper):
            raise ValueError("every lower bound must lie strictly below its upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def cube(cls, dim: int, lo: float, hi: float) -> "SearchSpace":
        """Uniform box [lo, hi]^dim."""
        if dim < 1:
            raise ValueError("dim must be >= 1")
        return cls(np.full(dim, float(lo)), np.full(dim, float(hi)))

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def midpoint(self) -> np.ndarray:
        return 0.5 * (self.lower + self.upper)


@dataclass(frozen=True, eq=False)
class Vulture:
    """One candidate solution: a position and its objective value (minimized)."""

    position: np.ndarray
    fitness: float

    def __post_init__(self):
        # own a copy so members stay immutable once constructed
        object.__setattr__(self, "position", np.asarray(self.position, dtype=float).copy())
        object.__setattr__(self, "fitness", float(self.fitness))


@dataclass(frozen=True, eq=False)
class Population:
    """A fixed pool of vultures plus its two current leaders."""

    members: tuple
    best1: Vulture | None = None
    best2: Vulture | None = None

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))


class RandomSource:
    """Seeded random stream owned by a single run.

    Two sources built from the same seed yield identical draw sequences on
    every platform. ``random()`` consumes exactly one uniform draw;
    ``normals(n)`` consumes from the same underlying stream.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def random(self) -> float:
        """One uniform draw in [0, 1)."""
        return float(self._gen.random())

    def normals(self, n: int) -> np.ndarray:
        """n standard-normal draws."""
        return self._gen.standard_normal(n)


def uniform(rng: RandomSource, lo: float, hi: float) -> float:
    """One draw in [lo, hi); advances rng exactly once."""
    if lo > hi:
        raise ValueError(f"empty interval: lo={lo} > hi={hi}")
    return lo + (hi - lo) * rng.random()


def clamp(position, space: SearchSpace) -> np.ndarray:
    """Project a position into the box component-wise; NaN components go to the axis midpoint."""
    x = np.asarray(position, dtype=float)
    if x.shape != (space.dim,):
        raise ValueError(f"position has shape {x.shape}, expected ({space.dim},)")
    out = np.clip(x, space.lower, space.upper)
    # np.clip propagates NaN; the midpoint rule keeps every output usable
    return np.where(np.isnan(x), space.midpoint, out)


def update_leaders(pop: Population) -> Population:
    """Set best1/best2 to the two lowest-fitness members.

    The sort is stable, so ties break toward the lower member index and an
    incumbent listed first keeps its slot.
    """
    if len(pop.members) < 2:
        raise ValueError("need at least two members to select two leaders")
    ranked = sorted(pop.members, key=lambda v: v.fitness)
    return Population(pop.members, ranked[0], ranked[1])
