"""Aggregation and nonparametric comparison of per-run results."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ResultTable",
    "avg_std",
    "friedman_avg_ranks",
    "wilcoxon_ranksum_p",
    "significance_symbol",
]


@dataclass(frozen=True, eq=False)
class ResultTable:
    """Rectangular (algorithm x function) collection of per-run final values.

    samples maps algorithm -> function -> list of final fitnesses; every
    (algorithm, function) cell must be present and non-empty.
    """

    algorithms: tuple
    functions: tuple
    samples: dict

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        object.__setattr__(self, "functions", tuple(self.functions))
        if not self.algorithms or not self.functions:
            raise ValueError("need at least one algorithm and one function")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ValueError("duplicate algorithm names")
        if len(set(self.functions)) != len(self.functions):
            raise ValueError("duplicate function names")
        for alg in self.algorithms:
            row = self.samples.get(alg)
            if row is None:
                raise ValueError(f"missing samples for algorithm {alg!r}")
            for fn in self.functions:
                cell = row.get(fn)
                if not cell:
                    raise ValueError(f"missing samples for ({alg!r}, {fn!r})")

    def cell(self, alg: str, fn: str) -> list:
        return self.samples[alg][fn]

    def cell_mean(self, alg: str, fn: str) -> float:
        return float(np.mean(self.samples[alg][fn]))


def avg_std(samples) -> tuple:
    """Mean and population (divide-by-n) standard deviation."""
    values = np.asarray(list(samples), dtype=float)
    if values.size == 0:
        raise ValueError("need at least one sample")
    return float(values.mean()), float(values.std())


def friedman_avg_ranks(table: ResultTable) -> list:
    """Average competition rank per algorithm across all functions.

    Per function, an algorithm's rank is 1 plus the number of algorithms
    with strictly lower mean, so a tied group shares the minimal rank and
    the group after a tie skips ahead.
    """
    totals = {alg: 0.0 for alg in table.algorithms}
    for fn in table.functions:
        means = {alg: table.cell_mean(alg, fn) for alg in table.algorithms}
        for alg in table.algorithms:
            totals[alg] += 1 + sum(1 for other in table.algorithms
                                   if means[other] < means[alg])
    k = len(table.functions)
    return [(alg, totals[alg] / k) for alg in table.algorithms]


def _midranks(values: np.ndarray) -> np.ndarray:
    order = np.argsort(values, kind="stable")
    ranks = np.empty(values.size, dtype=float)
    ordered = values[order]
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and ordered[j + 1] == ordered[i]:
            j += 1
        ranks[order[i: j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def wilcoxon_ranksum_p(a, b) -> float:
    """Two-sided rank-sum p-value via the tie-corrected normal approximation.

    Ties share midranks and shrink the variance by the usual correction; no
    continuity correction is applied. A pooled sample with zero variance
    (everything tied) carries no evidence and returns 1.
    """
    a = np.asarray(list(a), dtype=float)
    b = np.asarray(list(b), dtype=float)
    if a.size == 0 or b.size == 0:
        raise ValueError("both samples must be non-empty")
    n1, n2 = a.size, b.size
    n = n1 + n2
    pooled = np.concatenate([a, b])
    w = float(_midranks(pooled)[:n1].sum())
    mean_w = n1 * (n + 1) / 2.0
    _, counts = np.unique(pooled, return_counts=True)
    tie_term = float(np.sum(counts.astype(float) ** 3 - counts))
    variance = (n1 * n2 * (n + 1) / 12.0
                - n1 * n2 * tie_term / (12.0 * n * (n - 1)))
    if variance <= 0.0:
        return 1.0
    z = (w - mean_w) / math.sqrt(variance)
    return math.erfc(abs(z) / math.sqrt(2.0))


def significance_symbol(p: float, ours, theirs, alpha: float = 0.05) -> str:
    """'=' when not significant at alpha; else '+' if our mean is lower (better), '-' otherwise."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if p >= alpha:
        return "="
    ours_mean = float(np.mean(np.asarray(list(ours), dtype=float)))
    theirs_mean = float(np.mean(np.asarray(list(theirs), dtype=float)))
    return "+" if ours_mean < theirs_mean else "-"
