import itertools
import random

import networkx as nx
import pytest

from regcurv.census import (
    CensusRequest,
    canonical_code,
    census_with_classification,
    enumerate_regular,
    graph_from_code,
)
from regcurv.errors import OutOfSupportedRange
from regcurv.graphcore import Graph

from conftest import random_regular, to_nx

# connected regular graphs per (n, d), and how many have positive curvature
TABLE = {
    (4, 3): (1, 1), (6, 3): (2, 2), (8, 3): (5, 2), (10, 3): (19, 1),
    (5, 4): (1, 1), (6, 4): (1, 1), (7, 4): (2, 2), (8, 4): (6, 6), (9, 4): (16, 15),
}


@pytest.fixture(scope="module")
def census():
    return {key: enumerate_regular(CensusRequest(*key)) for key in TABLE}


def test_counts(census):
    for key, (total, _) in TABLE.items():
        assert len(census[key]) == total, key


def test_classification_counts(census):
    for key, (total, pos) in TABLE.items():
        t = census_with_classification(CensusRequest(*key), census[key])
        assert (t.total, t.ric_positive) == (total, pos), key


def test_graphs_are_connected_regular_and_distinct(census):
    for (n, d), graphs in census.items():
        hs = [to_nx(g) for g in graphs]
        for g, h in zip(graphs, hs):
            assert g.n == n and g.regular_degree() == d and g.is_connected()
        for a, b in itertools.combinations(hs, 2):
            assert not nx.is_isomorphic(a, b)


def test_sorted_by_code(census):
    for graphs in census.values():
        codes = [canonical_code(g) for g in graphs]
        assert codes == sorted(codes)


def test_random_regular_graphs_are_covered(census):
    rng = random.Random(2)
    for (n, d) in [(8, 3), (10, 3), (9, 4)]:
        codes = {canonical_code(g) for g in census[(n, d)]}
        for _ in range(60):
            assert canonical_code(random_regular(rng, n, d)) in codes


def test_canonical_code_is_relabeling_invariant():
    rng = random.Random(9)
    for _ in range(100):
        n = rng.randint(2, 10)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])
        assert canonical_code(g) == canonical_code(h)
        assert nx.is_isomorphic(to_nx(graph_from_code(n, canonical_code(g))), to_nx(g))


def test_infeasible_cells_are_empty():
    assert enumerate_regular(CensusRequest(5, 3)) == []
    assert enumerate_regular(CensusRequest(3, 4)) == []


@pytest.mark.parametrize("n, d", [(12, 3), (10, 4), (6, 5), (8, 2)])
def test_out_of_range(n, d):
    with pytest.raises(OutOfSupportedRange):
        enumerate_regular(CensusRequest(n, d))


def test_deterministic():
    a = enumerate_regular(CensusRequest(8, 3))
    b = enumerate_regular(CensusRequest(8, 3))
    assert a == b
