"""Exact 1-Wasserstein distance between finitely supported measures on a
graph, and curvature evaluated straight from its definition.

This is the general route: it makes no degree assumptions and serves as
the independent check for the closed-form formulas in ``curvature``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AlphaOutOfRange,
    IsolatedVertex,
    NotAnEdge,
    NotProbability,
    SameVertex,
    UnreachableMass,
)
from .graphcore import INF, Graph

Rational = Fraction


def as_rational(value: int | str | Fraction) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class DiscreteMeasure:
    """Probability measure given by ``(vertex, mass)`` atoms with positive
    masses summing to one."""

    atoms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        seen = set()
        total = Fraction(0)
        for v, m in self.atoms:
            if v in seen:
                raise NotProbability(f"vertex {v} appears twice")
            if m <= 0:
                raise NotProbability(f"nonpositive mass {m} at vertex {v}")
            seen.add(v)
            total += m
        if total != 1:
            raise NotProbability(f"masses sum to {total}, not 1")

    @classmethod
    def from_dict(cls, masses: dict[int, Fraction]) -> DiscreteMeasure:
        return cls(tuple(sorted((v, as_rational(m)) for v, m in masses.items() if m)))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.atoms)


def dirac(v: int) -> DiscreteMeasure:
    return DiscreteMeasure(((v, Fraction(1)),))


def vertex_measure(g: Graph, x: int, alpha: Fraction | int | str) -> DiscreteMeasure:
    """Lazy random walk step from ``x``: mass ``alpha`` stays at ``x`` and the
    rest is spread evenly over the neighbours."""
    alpha = as_rational(alpha)
    if not 0 <= alpha <= 1:
        raise AlphaOutOfRange(f"alpha={alpha} outside [0, 1]")
    deg = g.degree(x)
    masses: dict[int, Fraction] = {}
    if alpha > 0:
        masses[x] = alpha
    if alpha < 1:
        if deg == 0:
            raise IsolatedVertex(f"vertex {x} has no neighbours")
        share = (1 - alpha) / deg
        for w in g.adj[x]:
            masses[w] = share
    return DiscreteMeasure.from_dict(masses)


def _min_cost_flow(
    supply: list[int], demand: list[int], cost: list[list[int]]
) -> int:
    """Minimum cost of shipping integer ``supply`` to ``demand`` over a
    complete bipartite network with uncapacitated arcs.

    Successive shortest paths with Bellman-Ford (queue based) on the
    residual network; every augmentation ships the path bottleneck.
    """
    ns, nt = len(supply), len(demand)
    src, sink = ns + nt, ns + nt + 1
    size = ns + nt + 2
    # adjacency of arc indices; arcs stored as parallel lists
    head: list[int] = []
    cap: list[int] = []
    wt: list[int] = []
    out: list[list[int]] = [[] for _ in range(size)]

    def add(u: int, v: int, c: int, w: int) -> None:
        out[u].append(len(head))
        head.append(v)
        cap.append(c)
        wt.append(w)
        out[v].append(len(head))
        head.append(u)
        cap.append(0)
        wt.append(-w)

    total_supply = sum(supply)
    for i, s in enumerate(supply):
        add(src, i, s, 0)
    for j, t in enumerate(demand):
        add(ns + j, sink, t, 0)
    for i in range(ns):
        for j in range(nt):
            add(i, ns + j, total_supply, cost[i][j])

    shipped = 0
    total_cost = 0
    while shipped < total_supply:
        dist = [math.inf] * size
        in_arc = [-1] * size
        queued = [False] * size
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            queued[u] = False
            du = dist[u]
            for a in out[u]:
                if cap[a] > 0:
                    v = head[a]
                    nd = du + wt[a]
                    if nd < dist[v]:
                        dist[v] = nd
                        in_arc[v] = a
                        if not queued[v]:
                            queued[v] = True
                            queue.append(v)
        if dist[sink] == math.inf:
            raise UnreachableMass("flow network cannot route all mass")
        push = total_supply - shipped
        v = sink
        while v != src:
            a = in_arc[v]
            push = min(push, cap[a])
            v = head[a ^ 1]
        v = sink
        while v != src:
            a = in_arc[v]
            cap[a] -= push
            cap[a ^ 1] += push
            v = head[a ^ 1]
        shipped += push
        total_cost += push * dist[sink]
    return total_cost


def wasserstein1(g: Graph, mu: DiscreteMeasure, nu: DiscreteMeasure) -> Fraction:
    """Exact W1 distance between ``mu`` and ``nu`` with the graph metric as
    ground cost."""
    a, b = mu.as_dict(), nu.as_dict()
    excess: dict[int, Fraction] = {}
    deficit: dict[int, Fraction] = {}
    # mass present in both measures stays where it is
    for v in set(a) | set(b):
        diff = a.get(v, Fraction(0)) - b.get(v, Fraction(0))
        if diff > 0:
            excess[v] = diff
        elif diff < 0:
            deficit[v] = -diff
    if not excess:
        return Fraction(0)
    denom = math.lcm(*(m.denominator for m in (*excess.values(), *deficit.values())))
    src = sorted(excess)
    dst = sorted(deficit)
    supply = [int(excess[v] * denom) for v in src]
    demand = [int(deficit[v] * denom) for v in dst]
    cost = []
    for s in src:
        dist = g.bfs(s)
        row = []
        for t in dst:
            if dist[t] == INF:
                raise UnreachableMass(f"no path between {s} and {t}")
            row.append(int(dist[t]))
        cost.append(row)
    return Fraction(_min_cost_flow(supply, demand, cost), denom)


def kappa_alpha_direct(
    g: Graph, x: int, y: int, alpha: Fraction | int | str
) -> Fraction:
    """``1 - W1(mu_x, mu_y) / d(x, y)`` for the idleness-``alpha`` walks."""
    if x == y:
        raise SameVertex("curvature needs two distinct vertices")
    alpha = as_rational(alpha)
    dxy = g.distance(x, y)
    if dxy == INF:
        raise UnreachableMass(f"{x} and {y} lie in different components")
    w = wasserstein1(g, vertex_measure(g, x, alpha), vertex_measure(g, y, alpha))
    return 1 - w / int(dxy)


def kappa_lly_direct(g: Graph, x: int, y: int) -> Fraction:
    """Lin-Lu-Yau curvature of an edge of arbitrary degrees.

    The idleness function is linear on ``[1/(max(d_x, d_y) + 1), 1]`` and
    vanishes at 1, so one evaluation at the left end of that interval
    fixes the slope.
    """
    if x == y:
        raise SameVertex("curvature needs two distinct vertices")
    if not g.has_edge(x, y):
        raise NotAnEdge(f"({x}, {y}) is not an edge")
    alpha = Fraction(1, max(g.degree(x), g.degree(y)) + 1)
    return kappa_alpha_direct(g, x, y, alpha) / (1 - alpha)

