"""Integer-cost linear assignment solvers.

Three independent routes to the same optimum: the forward auction
algorithm used in production, an O(n^3) Hungarian method and exhaustive
enumeration for small instances.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import EntryOutOfRange, NegativeCost, NonSquare, TooLarge

CostMatrix = Sequence[Sequence[int]]

BRUTEFORCE_MAX_N = 10


@dataclass(frozen=True)
class AssignmentSolution:
    """``perm[i]`` is the column assigned to row ``i``."""

    perm: tuple[int, ...]
    total_cost: int
    rounds: int = 0


class MaxLegResult(NamedTuple):
    total: int
    max_leg: int
    empty: bool = False


def _validate(c: CostMatrix) -> list[list[int]]:
    n = len(c)
    rows = []
    for r in c:
        row = [int(v) for v in r]
        if len(row) != n:
            raise NonSquare(f"row of length {len(row)} in a matrix with {n} rows")
        if any(v < 0 for v in row):
            raise NegativeCost("assignment costs must be nonnegative")
        rows.append(row)
    return rows


def _total(c: list[list[int]], perm: Sequence[int]) -> int:
    return sum(c[i][j] for i, j in enumerate(perm))


def solve_auction(c: CostMatrix) -> AssignmentSolution:
    """Minimum-cost assignment by forward auction.

    Costs are multiplied by ``n + 1`` and prices move in integer steps with
    a minimum increment of 1. The final assignment is then within ``n``
    scaled units of optimal, which is less than one unscaled unit, so on
    integer data the result is exactly optimal. Ties between equally cheap
    items go to the lowest column index.
    """
    cm = _validate(c)
    n = len(cm)
    if n == 0:
        return AssignmentSolution((), 0)
    scale = n + 1
    scaled = [[v * scale for v in row] for row in cm]
    prices = [0] * n
    owner = [-1] * n
    assigned = [-1] * n
    unassigned = deque(range(n))
    rounds = 0
    while unassigned:
        i = unassigned.popleft()
        rounds += 1
        row = scaled[i]
        best_j = -1
        best = second = None
        for j in range(n):
            v = row[j] + prices[j]
            if best is None or v < best:
                second = best
                best, best_j = v, j
            elif second is None or v < second:
                second = v
        gamma = 0 if second is None else second - best
        prices[best_j] += gamma + 1
        prev = owner[best_j]
        if prev >= 0:
            assigned[prev] = -1
            unassigned.append(prev)
        owner[best_j] = i
        assigned[i] = best_j
    return AssignmentSolution(tuple(assigned), _total(cm, assigned), rounds)


def solve_hungarian(c: CostMatrix) -> AssignmentSolution:
    """Minimum-cost assignment by the shortest augmenting path Hungarian
    method with row/column potentials, O(n^3)."""
    cm = _validate(c)
    n = len(cm)
    if n == 0:
        return AssignmentSolution((), 0)
    inf = float("inf")
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    match = [0] * (n + 1)  # match[col] = row, 1-based, 0 = free
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = inf
            j1 = 0
            row = cm[i0 - 1]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = row[j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    perm = [0] * n
    for j in range(1, n + 1):
        perm[match[j] - 1] = j - 1
    return AssignmentSolution(tuple(perm), _total(cm, perm))


def solve_bruteforce(c: CostMatrix) -> AssignmentSolution:
    """Exhaustive minimum over all ``n!`` permutations (``n <= 10``)."""
    cm = _validate(c)
    n = len(cm)
    if n > BRUTEFORCE_MAX_N:
        raise TooLarge(f"brute force limited to n <= {BRUTEFORCE_MAX_N}, got {n}")
    best_perm: tuple[int, ...] = ()
    best = None
    for perm in itertools.permutations(range(n)):
        t = _total(cm, perm)
        if best is None or t < best:
            best, best_perm = t, perm
    return AssignmentSolution(best_perm, best or 0)


def min_assignment_cost_with_max_leg(c: CostMatrix) -> MaxLegResult:
    """Optimal total and the largest single entry used by ANY optimal
    assignment.

    Entries must lie in {1, 2, 3}. A cell (i, j) lies on some optimum iff
    the optimum of the minor without row i and column j plus ``c[i][j]``
    equals the overall optimum; cells are tried from the largest value
    down.
    """
    cm = _validate(c)
    n = len(cm)
    if n == 0:
        return MaxLegResult(0, 0, True)
    for row in cm:
        for val in row:
            if val not in (1, 2, 3):
                raise EntryOutOfRange(f"entry {val} not in {{1, 2, 3}}")
    total = solve_hungarian(cm).total_cost
    for leg in (3, 2, 1):
        for i in range(n):
            for j in range(n):
                if cm[i][j] != leg:
                    continue
                minor = [
                    [cm[r][k] for k in range(n) if k != j]
                    for r in range(n)
                    if r != i
                ]
                if solve_hungarian(minor).total_cost + leg == total:
                    return MaxLegResult(total, leg)
    raise AssertionError("no optimal cell found")  # unreachable for n >= 1
