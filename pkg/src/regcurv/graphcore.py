"""Simple undirected graphs, BFS metric queries and edge decomposition."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, InputError, NotAnEdge

INF = math.inf

# Any R_x vertex reaches any R_y vertex through the path i - x - y - j.
EDGE_DISTANCE_CAP = 3


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[i]`` is the sorted tuple of neighbours of ``i``. Instances are
    hashable and compare by structure (not by isomorphism class).
    """

    __slots__ = ("n", "adj", "_nbr_sets", "_ball_cache")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise InputError(f"adjacency has {len(adj)} rows for n={n}")
        rows = tuple(tuple(sorted(row)) for row in adj)
        for i, row in enumerate(rows):
            for a, b in zip(row, row[1:]):
                if a == b:
                    raise InputError(f"duplicate neighbour {a} at vertex {i}")
            for j in row:
                if not 0 <= j < n:
                    raise InputError(f"neighbour {j} of vertex {i} out of range")
                if j == i:
                    raise InputError(f"self-loop at vertex {i}")
        sets = tuple(frozenset(r) for r in rows)
        for i, row in enumerate(rows):
            for j in row:
                if i not in sets[j]:
                    raise InputError(f"asymmetric adjacency: {i}->{j} without {j}->{i}")
        self.n = n
        self.adj = rows
        self._nbr_sets = sets
        self._ball_cache: dict[tuple[int, int], dict[int, int]] = {}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in rows[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(r) for r in self.adj]

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None if degs else 0

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._nbr_sets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adj[v]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} not in [0, {self.n})")

    # metric queries -------------------------------------------------------

    def bounded_distances(self, s: int, cap: int) -> dict[int, int]:
        """Vertices within distance ``cap`` of ``s`` mapped to their distance."""
        self._check(s)
        if cap < 0:
            raise InputError("cap must be nonnegative")
        key = (s, cap)
        cached = self._ball_cache.get(key)
        if cached is not None:
            return cached
        dist = {s: 0}
        frontier = [s]
        for depth in range(1, cap + 1):
            nxt = []
            for u in frontier:
                for w in self.adj[u]:
                    if w not in dist:
                        dist[w] = depth
                        nxt.append(w)
            if not nxt:
                break
            frontier = nxt
        self._ball_cache[key] = dist
        return dist

    def bfs(self, s: int) -> list[float]:
        """Distances from ``s`` to every vertex (``inf`` where unreachable)."""
        self._check(s)
        dist: list[float] = [INF] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def distance(self, s: int, t: int) -> float:
        """Shortest-path length, ``inf`` when ``s`` and ``t`` are disconnected."""
        self._check(t)
        return self.bfs(s)[t]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d != INF for d in self.bfs(0))

    def num_components(self) -> int:
        seen = [False] * self.n
        count = 0
        for s in range(self.n):
            if seen[s]:
                continue
            count += 1
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
        return count

    def diameter(self) -> float:
        """Largest pairwise distance; ``inf`` if disconnected."""
        best = 0
        for s in range(self.n):
            ecc = max(self.bfs(s))
            if ecc == INF:
                return INF
            best = max(best, ecc)
        return best

    def girth(self) -> float:
        """Length of a shortest cycle, ``inf`` for forests.

        BFS from every vertex; a non-tree edge (u, w) closes a cycle of
        length at most dist[u] + dist[w] + 1 and the minimum over all roots
        is exact.
        """
        best = INF
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                if 2 * dist[u] >= best:
                    break
                for w in self.adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def triangle_count(self) -> int:
        total = 0
        for u, v in self.edges():
            total += len(self._nbr_sets[u] & self._nbr_sets[v])
        return total // 3

    def edge_context(self, x: int, y: int) -> EdgeContext:
        return edge_context(self, x, y)


@dataclass(frozen=True)
class EdgeContext:
    """Neighbourhood decomposition of an edge ``x ~ y``.

    ``triangle`` holds the common neighbours, ``rx``/``ry`` the remaining
    exclusive neighbours of each endpoint, and ``cost[i][j]`` the graph
    distance between ``rx[i]`` and ``ry[j]`` (always 1, 2 or 3).
    """

    x: int
    y: int
    deg_x: int
    deg_y: int
    triangle: tuple[int, ...]
    rx: tuple[int, ...]
    ry: tuple[int, ...]
    cost: tuple[tuple[int, ...], ...]

    @property
    def equal_degree(self) -> bool:
        return self.deg_x == self.deg_y


def edge_context(g: Graph, x: int, y: int) -> EdgeContext:
    """Split the neighbourhoods of the edge ``x ~ y`` into triangle and R-parts."""
    if not g.has_edge(x, y):
        raise NotAnEdge(f"({x}, {y}) is not an edge")
    sx, sy = g._nbr_sets[x], g._nbr_sets[y]
    tri = sx & sy
    rx = tuple(sorted(sx - tri - {y}))
    ry = tuple(sorted(sy - tri - {x}))
    cost = tuple(
        tuple(_capped(g, i, j) for j in ry)
        for i in rx
    )
    return EdgeContext(x, y, len(sx), len(sy), tuple(sorted(tri)), rx, ry, cost)


def _capped(g: Graph, i: int, j: int) -> int:
    ball = g.bounded_distances(i, EDGE_DISTANCE_CAP - 1)
    return ball.get(j, EDGE_DISTANCE_CAP)


def pair_costs(g: Graph, rows: Sequence[int], cols: Sequence[int]) -> list[list[int]]:
    """Distance matrix between two vertex lists lying in a common edge's
    neighbourhood; entries are capped at 3, which is lossless there."""
    return [[_capped(g, i, j) for j in cols] for i in rows]
