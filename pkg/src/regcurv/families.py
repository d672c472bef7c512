"""Deterministic generators for named graph families and fixed fixtures."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import EmptyGraph, InvalidParams, UnknownFixture
from .graphcore import Graph


class Kind(str, Enum):
    CYCLE = "cycle"
    PATH = "path"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "kbipartite"
    HYPERCUBE = "hypercube"
    COCKTAIL_PARTY = "cocktail"
    PETERSEN = "petersen"
    DODECAHEDRAL = "dodecahedral"
    PRISM = "prism"
    MOEBIUS_LADDER = "moebius"
    BONE_IDLE_RING = "bi"
    SHARPNESS = "sharpness"
    FIGURE = "figure"


@dataclass(frozen=True)
class FamilySpec:
    kind: Kind
    params: tuple[int | str, ...] = ()


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParams(msg)


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    _need(leaves >= 1, f"star needs at least one leaf, got {leaves}")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, f"K_(a,b) needs a, b >= 1, got {a}, {b}")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(k: int) -> Graph:
    _need(k >= 1, f"hypercube needs dimension >= 1, got {k}")
    n = 1 << k
    return Graph.from_edges(
        n, [(v, v ^ (1 << b)) for v in range(n) for b in range(k) if v < v ^ (1 << b)]
    )


def cocktail_party(m: int) -> Graph:
    """``K_{m x 2}``: 2m vertices, all pairs adjacent except ``2i ~ 2i+1``."""
    _need(m >= 2, f"cocktail party graph needs m >= 2, got {m}")
    n = 2 * m
    return Graph.from_edges(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if u // 2 != v // 2]
    )


def generalized_petersen(n: int, k: int) -> Graph:
    """Outer cycle ``0..n-1``, spokes ``i ~ n+i``, inner ``n+i ~ n+(i+k)``."""
    _need(n >= 3 and 1 <= k < n / 2, f"GP({n},{k}) is not defined")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedral() -> Graph:
    return generalized_petersen(10, 2)


def prism(n: int) -> Graph:
    """``Y_n = C_n x K_2``; the two cycles are ``0..n-1`` and ``n..2n-1``."""
    _need(n >= 3, f"prism needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    return Graph.from_edges(2 * n, edges)


def moebius_ladder(n: int) -> Graph:
    """``M_n``: the cycle ``C_2n`` plus the chords ``i ~ i + n``."""
    _need(n >= 2, f"Moebius ladder needs n >= 2, got {n}")
    m = 2 * n
    edges = [(i, (i + 1) % m) for i in range(m)] + [(i, i + n) for i in range(n)]
    return Graph.from_edges(m, edges)


def bone_idle_ring(n: int) -> Graph:
    """``BI_n``: inner cycle ``x_0..x_{n-1}`` (indices ``0..n-1``), outer
    cycle ``y_0..y_{n-1}`` (indices ``n..2n-1``), and ``y_k ~ x_{k-1},
    x_{k+1}`` (mod n)."""
    _need(n >= 6, f"BI_n needs n >= 6, got {n}")
    edges = []
    for k in range(n):
        edges.append((k, (k + 1) % n))
        edges.append((n + k, n + (k + 1) % n))
        edges.append((n + k, (k - 1) % n))
        edges.append((n + k, (k + 1) % n))
    return Graph.from_edges(2 * n, edges)


def sharpness_construction(d: int) -> Graph:
    """d-regular graph on ``(3d + 8) / 2`` vertices whose edge ``(0, 1)`` has
    Lin-Lu-Yau curvature 0 and ``kappa_0 = -1/d``.

    Needs ``d`` even and ``d >= 12``. Vertex order: ``x, y``, then
    ``z_0..z_{l-3}``, ``x_0..x_l``, ``y_0..y_l``, ``v_1, v_2`` with
    ``l = d / 2``.
    """
    _need(d >= 12 and d % 2 == 0, f"sharpness construction needs even d >= 12, got {d}")
    l = d // 2
    x, y = 0, 1
    z = list(range(2, 2 + l - 2))
    xs = list(range(z[-1] + 1, z[-1] + 1 + l + 1))
    ys = list(range(xs[-1] + 1, xs[-1] + 1 + l + 1))
    v1, v2 = ys[-1] + 1, ys[-1] + 2
    n = v2 + 1
    edges = {(x, y)}
    edges |= {(x, zi) for zi in z} | {(y, zi) for zi in z}
    edges |= {(x, xi) for xi in xs} | {(y, yi) for yi in ys}
    for i, zi in enumerate(z):
        edges |= {(zi, xs[j]) for j in range(l) if j != i}
        skip = {(2 * i) % (l + 1), (2 * i + 1) % (l + 1)}
        edges |= {(zi, ys[j]) for j in range(l + 1) if j not in skip}
    for i, j in itertools.combinations(range(l + 1), 2):
        if (i, j) != (l - 2, l - 1):
            edges.add((xs[i], xs[j]))
        edges.add((ys[i], ys[j]))
    edges |= {(xs[l], ys[j]) for j in range(l - 1)}
    for v in (v1, v2):
        edges |= {(v, xs[i]) for i in range(l)}
        edges |= {(v, ys[i]) for i in [*range(l - 5), l - 1, l]}
    edges |= {(v1, ys[l - 5]), (v1, ys[l - 4]), (v2, ys[l - 3]), (v2, ys[l - 2])}
    edges.add((v1, v2))
    return Graph.from_edges(n, sorted(edges))


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """Vertex ``(i, j)`` gets index ``i * b.n + j``."""
    if a.n == 0 or b.n == 0:
        raise EmptyGraph("cartesian product of an empty graph")
    edges = []
    for i in range(a.n):
        for j in range(b.n):
            v = i * b.n + j
            edges += [(v, i * b.n + k) for k in b.adj[j] if k > j]
            edges += [(v, k * b.n + j) for k in a.adj[i] if k > i]
    return Graph.from_edges(a.n * b.n, edges)


def cartesian_power(g: Graph, k: int) -> Graph:
    _need(k >= 1, f"power needs k >= 1, got {k}")
    out = g
    for _ in range(k - 1):
        out = cartesian_product(out, g)
    return out


# Fixtures transcribed from drawings. The designated edge is (0, 1) in
# every case: vertex 0 plays x, vertex 1 plays y.
_FIXTURE_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    # d_x = 2, d_y = 3
    "example1": (6, [(0, 1), (0, 2), (1, 3), (1, 4), (5, 2), (5, 3), (5, 4)]),
    # d_x = 3, d_y = 4
    "example2": (
        9,
        [
            (0, 1), (0, 2), (0, 4), (1, 8), (1, 3), (2, 3),
            (1, 5), (4, 6), (5, 6), (2, 7), (4, 7), (7, 8),
        ],
    ),
    # 4-regular on 9 vertices with a flat edge
    "counterexample_9v4r": (
        9,
        [
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7),
            (2, 3), (2, 4), (3, 4), (5, 6), (5, 7), (6, 7),
            (8, 2), (8, 3), (8, 6), (8, 5), (4, 7),
        ],
    ),
}

FIXTURE_IDS = ("example1", "example2", "counterexample_9v4r", "petersen", "dodecahedral")

# edge whose curvature the fixture is built to exhibit
DESIGNATED_EDGE = (0, 1)


def figure_fixture(name: str) -> Graph:
    if name == "petersen":
        return petersen()
    if name == "dodecahedral":
        return dodecahedral()
    try:
        n, edges = _FIXTURE_EDGES[name]
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_IDS)}"
        ) from None
    return Graph.from_edges(n, edges)


_ARITY = {
    Kind.CYCLE: 1, Kind.PATH: 1, Kind.STAR: 1, Kind.COMPLETE: 1,
    Kind.COMPLETE_BIPARTITE: 2, Kind.HYPERCUBE: 1, Kind.COCKTAIL_PARTY: 1,
    Kind.PETERSEN: 0, Kind.DODECAHEDRAL: 0, Kind.PRISM: 1,
    Kind.MOEBIUS_LADDER: 1, Kind.BONE_IDLE_RING: 1, Kind.SHARPNESS: 1,
    Kind.FIGURE: 1,
}


def generate(spec: FamilySpec) -> Graph:
    kind = Kind(spec.kind)
    p = spec.params
    want = _ARITY[kind]
    if kind == Kind.COMPLETE_BIPARTITE and len(p) == 1:
        p = (p[0], p[0])
    _need(len(p) == want, f"{kind.value} takes {want} parameter(s), got {len(p)}")
    if kind == Kind.FIGURE:
        return figure_fixture(str(p[0]))
    try:
        q = [int(v) for v in p]
    except ValueError:
        raise InvalidParams(f"{kind.value} parameters must be integers, got {p}") from None
    if kind == Kind.CYCLE:
        return cycle(q[0])
    if kind == Kind.PATH:
        return path(q[0])
    if kind == Kind.STAR:
        return star(q[0])
    if kind == Kind.COMPLETE:
        return complete(q[0])
    if kind == Kind.COMPLETE_BIPARTITE:
        return complete_bipartite(q[0], q[1])
    if kind == Kind.HYPERCUBE:
        return hypercube(q[0])
    if kind == Kind.COCKTAIL_PARTY:
        return cocktail_party(q[0])
    if kind == Kind.PETERSEN:
        return petersen()
    if kind == Kind.DODECAHEDRAL:
        return dodecahedral()
    if kind == Kind.PRISM:
        return prism(q[0])
    if kind == Kind.MOEBIUS_LADDER:
        return moebius_ladder(q[0])
    if kind == Kind.BONE_IDLE_RING:
        return bone_idle_ring(q[0])
    return sharpness_construction(q[0])
