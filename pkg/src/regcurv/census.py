"""Exhaustive enumeration of connected d-regular graphs at desk scale.

Labeled graphs are generated by backtracking in breadth-first labeling
order (every vertex touched for the first time receives the next free
label), which also guarantees connectivity. Isomorphic duplicates are
removed through a canonical form: the lexicographically smallest
upper-triangle adjacency bitstring over the leaves of an
individualization-refinement search tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .curvature import classify_graph
from .errors import OutOfSupportedRange
from .graphcore import Graph

# largest n supported per degree
SUPPORTED = {3: 10, 4: 9}


@dataclass(frozen=True)
class CensusRequest:
    n: int
    d: int

    def validate(self) -> None:
        n, d = self.n, self.d
        cap = SUPPORTED.get(d)
        if cap is None or n > cap:
            raise OutOfSupportedRange(
                f"(n={n}, d={d}) outside the supported envelope: "
                + ", ".join(f"d={k}: n<={v}" for k, v in SUPPORTED.items())
            )
        if n < 1 or d < 0:
            raise OutOfSupportedRange(f"invalid request n={n}, d={d}")


def _is_feasible(n: int, d: int) -> bool:
    return d < n and (n * d) % 2 == 0


# canonical form ---------------------------------------------------------


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Sub-cells replace their parent in place, ordered by neighbour count
    into the splitter, so the result depends on the graph and the input
    partition only, never on vertex labels.
    """
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
            if changed:
                cells = out
                break
    return cells


def _leaf_code(adj: list[int], order: list[int]) -> int:
    n = len(order)
    code = 0
    for j in range(1, n):
        vj = order[j]
        for i in range(j):
            code = (code << 1) | ((adj[order[i]] >> vj) & 1)
    return code


def canonical_code(g: Graph) -> int:
    """Isomorphism-invariant integer encoding of ``g`` (its bits are the
    upper-triangle adjacency of a canonical relabeling)."""
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        for w in row:
            adj[v] |= 1 << w
    return _canonical(adj)


def _canonical(adj: list[int]) -> int:
    n = len(adj)
    if n <= 1:
        return 0
    best: int | None = None
    stack = [_refine(adj, [list(range(n))])]
    while stack:
        cells = stack.pop()
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _leaf_code(adj, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            continue
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            stack.append(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1:]))
    return best


def graph_from_code(n: int, code: int) -> Graph:
    nbits = n * (n - 1) // 2
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (code >> (nbits - 1 - k)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# generation ---------------------------------------------------------------


def _labeled_bfs_graphs(n: int, d: int):
    """Yield adjacency bitmasks of connected d-regular graphs labeled in
    breadth-first order from vertex 0."""
    adj = [0] * n
    deg = [0] * n

    def rec(v: int, disc: int):
        if v == n:
            yield list(adj)
            return
        if v >= disc:
            return  # v unreachable from vertex 0
        need = d - deg[v]
        old = [w for w in range(v + 1, disc) if deg[w] < d and not (adj[v] >> w) & 1]
        fresh_max = min(need, n - disc)
        for k in range(fresh_max + 1):
            m = need - k
            if m > len(old):
                continue
            fresh = list(range(disc, disc + k))
            for chosen in itertools.combinations(old, m):
                nbrs = (*chosen, *fresh)
                for w in nbrs:
                    adj[v] |= 1 << w
                    adj[w] |= 1 << v
                    deg[w] += 1
                deg[v] = d
                if _still_feasible(v, disc + k, n, d, deg):
                    yield from rec(v + 1, disc + k)
                for w in nbrs:
                    adj[v] &= ~(1 << w)
                    adj[w] &= ~(1 << v)
                    deg[w] -= 1
                deg[v] = d - need

    yield from rec(0, 1)


def _still_feasible(v: int, disc: int, n: int, d: int, deg: list[int]) -> bool:
    # every later vertex must still be able to find its missing neighbours
    # among the other later vertices
    later = n - v - 1
    total = 0
    for w in range(v + 1, n):
        miss = d - deg[w]
        if miss > later - 1:
            return False
        total += miss
    return total % 2 == 0


def enumerate_regular(req: CensusRequest) -> list[Graph]:
    """One representative per isomorphism class of connected d-regular
    graphs on n vertices, sorted by canonical code."""
    req.validate()
    n, d = req.n, req.d
    if not _is_feasible(n, d) or (d == 0 and n > 1):
        return []
    codes = set()
    for adj in _labeled_bfs_graphs(n, d):
        codes.add(_canonical(adj))
    return [graph_from_code(n, c) for c in sorted(codes)]


@dataclass(frozen=True)
class CensusTable:
    n: int
    d: int
    total: int
    ric_positive: int
    bone_idle: int
    ricci_flat: int

    def as_dict(self) -> dict[str, int]:
        return {
            "n": self.n, "d": self.d, "total": self.total,
            "ric_positive": self.ric_positive, "bone_idle": self.bone_idle,
            "ricci_flat": self.ricci_flat,
        }


def census_with_classification(
    req: CensusRequest, graphs: list[Graph] | None = None
) -> CensusTable:
    if graphs is None:
        graphs = enumerate_regular(req)
    classes = [classify_graph(g) for g in graphs]
    return CensusTable(
        n=req.n,
        d=req.d,
        total=len(graphs),
        ric_positive=sum(c.ric_positive for c in classes),
        bone_idle=sum(c.bone_idle for c in classes),
        ricci_flat=sum(c.ricci_flat for c in classes),
    )
