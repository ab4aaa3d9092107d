"""Classical single-objective test functions F1-F23.

Thirteen scalable functions (seven unimodal, six highly multimodal) plus ten
fixed-dimension multimodal functions, each catalogued with its box range,
default dimension, and best known value. All evaluators are pure; the one
nominally noisy function derives its additive term from a hash of the
coordinates so seeded runs stay reproducible.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .core import EvaluationError, SearchSpace

__all__ = [
    "BenchmarkSpec",
    "Problem",
    "registry",
    "evaluate",
    "problem",
    "external_problem",
]


# --- scalable functions -------------------------------------------------

def sphere(x):
    return float(np.sum(x * x))


def abs_sum_prod(x):
    a = np.abs(x)
    return float(np.sum(a) + np.prod(a))


def rotated_ellipsoid(x):
    return float(np.sum(np.cumsum(x) ** 2))


def max_abs(x):
    return float(np.max(np.abs(x)))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def shifted_step(x):
    return float(np.sum(np.floor(x + 0.5) ** 2))


def _coordinate_noise(x: np.ndarray) -> float:
    # deterministic stand-in for an additive random [0, 1) term: hashing the
    # coordinates keeps the evaluator pure so seeded runs replay exactly
    digest = hashlib.blake2b(np.ascontiguousarray(x, dtype=float).tobytes(), digest_size=8).digest()
    return int.from_bytes(digest, "little") / 2.0 ** 64


def noisy_quartic(x):
    idx = np.arange(1, x.size + 1)
    return float(np.sum(idx * x ** 4) + _coordinate_noise(x))


def sine_valley(x):
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def rastrigin(x):
    return float(np.sum(x * x - 10.0 * np.cos(2.0 * math.pi * x) + 10.0))


def ackley(x):
    n = x.size
    quad = -20.0 * math.exp(-0.2 * math.sqrt(np.sum(x * x) / n))
    trig = -math.exp(np.sum(np.cos(2.0 * math.pi * x)) / n)
    return float(quad + trig + 20.0 + math.e)


def griewank(x):
    idx = np.arange(1, x.size + 1, dtype=float)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(idx))) + 1.0)


def _bound_penalty(x, a, k, m):
    over = np.where(x > a, k * (x - a) ** m, 0.0)
    under = np.where(x < -a, k * (-x - a) ** m, 0.0)
    return float(np.sum(over + under))


def penalized_path(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    head = 10.0 * math.sin(math.pi * y[0]) ** 2
    body = np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(math.pi * y[1:]) ** 2))
    tail = (y[-1] - 1.0) ** 2
    return float(math.pi / n * (head + body + tail) + _bound_penalty(x, 10.0, 100.0, 4.0))


def penalized_tail(x):
    head = math.sin(3.0 * math.pi * x[0]) ** 2
    body = np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * math.pi * x[1:]) ** 2))
    tail = (x[-1] - 1.0) ** 2 * (1.0 + math.sin(2.0 * math.pi * x[-1]) ** 2)
    return float(0.1 * (head + body + tail) + _bound_penalty(x, 5.0, 100.0, 4.0))


# --- fixed-dimension functions ------------------------------------------

_FOXHOLES_A = np.array([
    [-32.0, -16.0, 0.0, 16.0, 32.0] * 5,
    [-32.0] * 5 + [-16.0] * 5 + [0.0] * 5 + [16.0] * 5 + [32.0] * 5,
])


def foxholes(x):
    diff = x[:, None] - _FOXHOLES_A
    wells = np.arange(1.0, 26.0) + np.sum(diff ** 6, axis=0)
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / wells)))


_KOWALIK_A = np.array([0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                       0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
_KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])


def kowalik(x):
    b = _KOWALIK_B
    model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3])
    return float(np.sum((_KOWALIK_A - model) ** 2))


def camel_six_hump(x):
    x1, x2 = x
    return float(4.0 * x1 ** 2 - 2.1 * x1 ** 4 + x1 ** 6 / 3.0
                 + x1 * x2 - 4.0 * x2 ** 2 + 4.0 * x2 ** 4)


def branin(x):
    x1, x2 = x
    bowl = (x2 - 5.1 / (4.0 * math.pi ** 2) * x1 ** 2 + 5.0 / math.pi * x1 - 6.0) ** 2
    wave = 10.0 * (1.0 - 1.0 / (8.0 * math.pi)) * math.cos(x1)
    return float(bowl + wave + 10.0)


def goldstein_price(x):
    x1, x2 = x
    part1 = 1.0 + (x1 + x2 + 1.0) ** 2 * (
        19.0 - 14.0 * x1 + 3.0 * x1 ** 2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 ** 2)
    part2 = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1 ** 2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 ** 2)
    return float(part1 * part2)


_HARTMANN_C = np.array([1.0, 1.2, 3.0, 3.2])

_HARTMANN3_A = np.array([
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
])

_HARTMANN3_P = np.array([
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
])

_HARTMANN6_A = np.array([
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
])

_HARTMANN6_P = np.array([
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
])


def hartmann3(x):
    expo = np.sum(_HARTMANN3_A * (x - _HARTMANN3_P) ** 2, axis=1)
    return float(-np.sum(_HARTMANN_C * np.exp(-expo)))


def hartmann6(x):
    expo = np.sum(_HARTMANN6_A * (x - _HARTMANN6_P) ** 2, axis=1)
    return float(-np.sum(_HARTMANN_C * np.exp(-expo)))


_SHEKEL_A = np.array([
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
])

_SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def _shekel(x, m):
    diff = x - _SHEKEL_A[:m]
    return float(-np.sum(1.0 / (np.sum(diff ** 2, axis=1) + _SHEKEL_C[:m])))


def shekel5(x):
    return _shekel(x, 5)


def shekel7(x):
    return _shekel(x, 7)


def shekel10(x):
    return _shekel(x, 10)


# --- catalogue -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BenchmarkSpec:
    """One catalogued test function.

    optimum_location is informational (None for the hash-noise function,
    whose floor depends on the noise term); for fixed-dimension entries it
    holds a literature minimizer rounded to the usual published precision.
    scalable entries accept any dimension >= 1, fixed entries only their
    default.
    """

    fid: str
    name: str
    func: object
    default_dim: int
    lower: float
    upper: float
    known_optimum: float
    optimum_location: np.ndarray | None
    scalable: bool

    def space(self, dim: int | None = None) -> SearchSpace:
        d = self.default_dim if dim is None else int(dim)
        if d < 1:
            raise ValueError("dim must be >= 1")
        if not self.scalable and d != self.default_dim:
            raise ValueError(f"{self.fid} is fixed at dimension {self.default_dim}")
        return SearchSpace.cube(d, self.lower, self.upper)


_SPECS = (
    BenchmarkSpec("F1", "sphere", sphere, 30, -100.0, 100.0, 0.0, np.zeros(30), True),
    BenchmarkSpec("F2", "abs-sum-prod", abs_sum_prod, 30, -10.0, 10.0, 0.0, np.zeros(30), True),
    BenchmarkSpec("F3", "rotated-ellipsoid", rotated_ellipsoid, 30, -100.0, 100.0, 0.0, np.zeros(30), True),
    BenchmarkSpec("F4", "max-abs", max_abs, 30, -100.0, 100.0, 0.0, np.zeros(30), True),
    BenchmarkSpec("F5", "rosenbrock", rosenbrock, 30, -30.0, 30.0, 0.0, np.ones(30), True),
    BenchmarkSpec("F6", "shifted-step", shifted_step, 30, -100.0, 100.0, 0.0, np.zeros(30), True),
    BenchmarkSpec("F7", "noisy-quartic", noisy_quartic, 30, -1.28, 1.28, 0.0, None, True),
    BenchmarkSpec("F8", "sine-valley", sine_valley, 30, -500.0, 500.0,
                  -418.9829 * 30, np.full(30, 420.9687), True),
    BenchmarkSpec("F9", "rastrigin", rastrigin, 30, -5.12, 5.12, 0.0, np.zeros(30), True),
    BenchmarkSpec("F10", "ackley", ackley, 30, -32.0, 32.0, 0.0, np.zeros(30), True),
    BenchmarkSpec("F11", "griewank", griewank, 30, -600.0, 600.0, 0.0, np.zeros(30), True),
    BenchmarkSpec("F12", "penalized-path", penalized_path, 30, -50.0, 50.0, 0.0, -np.ones(30), True),
    BenchmarkSpec("F13", "penalized-tail", penalized_tail, 30, -50.0, 50.0, 0.0, np.ones(30), True),
    BenchmarkSpec("F14", "foxholes", foxholes, 2, -65.0, 65.0, 0.998,
                  np.array([-31.97833, -31.97833]), False),
    BenchmarkSpec("F15", "kowalik", kowalik, 4, -5.0, 5.0, 3.0e-4,
                  np.array([0.192833, 0.190836, 0.123117, 0.135766]), False),
    BenchmarkSpec("F16", "camel-six-hump", camel_six_hump, 2, -5.0, 5.0, -1.0316,
                  np.array([0.0898, -0.7126]), False),
    BenchmarkSpec("F17", "branin", branin, 2, -5.0, 5.0, 0.398,
                  np.array([math.pi, 2.275]), False),
    BenchmarkSpec("F18", "goldstein-price", goldstein_price, 2, -2.0, 2.0, 3.0,
                  np.array([0.0, -1.0]), False),
    # the classic minimizer sits outside the catalogued [1, 3] box; kept for reference
    BenchmarkSpec("F19", "hartmann-3", hartmann3, 3, 1.0, 3.0, -3.86,
                  np.array([0.114614, 0.555649, 0.852547]), False),
    BenchmarkSpec("F20", "hartmann-6", hartmann6, 6, 0.0, 1.0, -3.32,
                  np.array([0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573]), False),
    BenchmarkSpec("F21", "shekel-5", shekel5, 4, 0.0, 10.0, -10.1532, np.full(4, 4.0), False),
    BenchmarkSpec("F22", "shekel-7", shekel7, 4, 0.0, 10.0, -10.4028, np.full(4, 4.0), False),
    BenchmarkSpec("F23", "shekel-10", shekel10, 4, 0.0, 10.0, -10.5363, np.full(4, 4.0), False),
)

_INDEX = {spec.fid: spec for spec in _SPECS}


def registry() -> list:
    """All 23 catalogued functions, in id order."""
    return list(_SPECS)


def _lookup(fid: str) -> BenchmarkSpec:
    try:
        return _INDEX[fid.upper()]
    except KeyError:
        raise ValueError(f"unknown function id {fid!r}; expected F1..F23") from None


def evaluate(fid: str, x) -> float:
    """Evaluate a catalogued function, enforcing its dimension."""
    spec = _lookup(fid)
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < 1:
        raise ValueError("x must be a non-empty 1-d vector")
    if not spec.scalable and x.size != spec.default_dim:
        raise ValueError(f"{spec.fid} expects dimension {spec.default_dim}, got {x.size}")
    return spec.func(x)


@dataclass(frozen=True, eq=False)
class Problem:
    """An objective plus its box, ready to hand to the engine."""

    name: str
    space: SearchSpace
    objective: object


def problem(fid: str, dim: int | None = None) -> Problem:
    """Catalogued function as an engine-ready problem (dim only for scalable entries)."""
    spec = _lookup(fid)
    return Problem(spec.fid, spec.space(dim), spec.func)


def external_problem(dim: int, bounds, evaluator, name: str = "external") -> Problem:
    """Adapt a user-supplied callback to the engine's problem interface.

    bounds is a (lo, hi) pair of scalars or per-axis arrays. The wrapper
    checks the call-time dimension and surfaces NaN results as evaluation
    errors, exactly like the catalogued functions behave inside the engine.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    lo, hi = bounds
    lower = np.broadcast_to(np.asarray(lo, dtype=float), (dim,)).copy()
    upper = np.broadcast_to(np.asarray(hi, dtype=float), (dim,)).copy()
    space = SearchSpace(lower, upper)

    def wrapped(x):
        x = np.asarray(x, dtype=float)
        if x.shape != (dim,):
            raise ValueError(f"{name} expects dimension {dim}, got shape {x.shape}")
        value = float(evaluator(x))
        if math.isnan(value):
            raise EvaluationError(x)
        return value

    return Problem(name, space, wrapped)
