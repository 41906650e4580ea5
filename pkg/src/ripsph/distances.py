"""Bottleneck and 1-Wasserstein distances between persistence diagrams.

Ground metric is L-infinity on the (birth, death) plane; a point may match
its orthogonal diagonal projection at cost (death - birth) / 2. Essential
(infinite-death) points must match each other; mismatched counts make the
distance infinite.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import PersistenceDiagram


def _split(d: PersistenceDiagram, dim: int) -> tuple[list[tuple[float, float]], list[float]]:
    finite = [(p.birth, p.death) for p in d.in_dimension(dim) if not p.is_essential]
    essential = sorted(p.birth for p in d.in_dimension(dim) if p.is_essential)
    return finite, essential


def _linf(p: tuple[float, float], q: tuple[float, float]) -> float:
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _diag_cost(p: tuple[float, float]) -> float:
    return (p[1] - p[0]) / 2.0


def _cost_matrix(a: list[tuple[float, float]],
                 b: list[tuple[float, float]]) -> np.ndarray:
    """Square (n+m) x (m+n) matrix: rows = a-points then m diagonal slots,
    columns = b-points then n diagonal slots; diagonal-diagonal costs 0."""
    n, m = len(a), len(b)
    cost = np.zeros((n + m, m + n), dtype=np.float64)
    for i, p in enumerate(a):
        for j, q in enumerate(b):
            cost[i, j] = _linf(p, q)
        cost[i, m:] = _diag_cost(p)
    for j, q in enumerate(b):
        cost[n:, j] = _diag_cost(q)
    return cost


def _has_perfect_matching(allowed: np.ndarray) -> bool:
    """Augmenting-path maximum bipartite matching on a boolean square matrix."""
    size = allowed.shape[0]
    match_of_col = [-1] * size
    adjacency = [np.flatnonzero(allowed[i]) for i in range(size)]

    def try_augment(row: int, seen: list[bool]) -> bool:
        for col in adjacency[row]:
            if not seen[col]:
                seen[col] = True
                if match_of_col[col] == -1 or try_augment(match_of_col[col], seen):
                    match_of_col[col] = row
                    return True
        return False

    for row in range(size):
        if not try_augment(row, [False] * size):
            return False
    return True


def bottleneck_distance(a: PersistenceDiagram, b: PersistenceDiagram,
                        dim: int) -> float:
    """Exact bottleneck distance for one homology dimension.

    Binary search over the realized cost values only, each step checked by
    a bipartite perfect-matching feasibility test, so no floating
    thresholds enter the answer.
    """
    fa, ea = _split(a, dim)
    fb, eb = _split(b, dim)
    if len(ea) != len(eb):
        return math.inf
    essential_cost = max((abs(x - y) for x, y in zip(ea, eb)), default=0.0)
    if not fa and not fb:
        return essential_cost
    cost = _cost_matrix(fa, fb)
    candidates = np.unique(cost)
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _has_perfect_matching(cost <= candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    return max(essential_cost, float(candidates[lo]))


def wasserstein_distance(a: PersistenceDiagram, b: PersistenceDiagram,
                         dim: int) -> float:
    """1-Wasserstein distance: minimum total L-infinity cost over perfect
    matchings with diagonal augmentation, via exact assignment."""
    fa, ea = _split(a, dim)
    fb, eb = _split(b, dim)
    if len(ea) != len(eb):
        return math.inf
    essential_costs = [abs(x - y) for x, y in zip(ea, eb)]
    if not fa and not fb:
        return math.fsum(essential_costs)
    cost = _cost_matrix(fa, fb)
    rows, cols = linear_sum_assignment(cost)
    # fsum: exactly rounded, so the total does not depend on argument order
    return math.fsum(essential_costs + list(cost[rows, cols]))
