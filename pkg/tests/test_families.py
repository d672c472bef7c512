from fractions import Fraction as F

import networkx as nx
import pytest

from regcurv import families
from regcurv.curvature import classify_graph, edge_report
from regcurv.errors import EmptyGraph, InvalidParams, UnknownFixture
from regcurv.families import FamilySpec, Kind, generate
from regcurv.graphcore import Graph

from conftest import to_nx


@pytest.mark.parametrize(
    "g, n, d",
    [
        (families.cycle(6), 6, 2),
        (families.complete(5), 5, 4),
        (families.complete_bipartite(3, 3), 6, 3),
        (families.hypercube(4), 16, 4),
        (families.cocktail_party(4), 8, 6),
        (families.petersen(), 10, 3),
        (families.dodecahedral(), 20, 3),
        (families.prism(5), 10, 3),
        (families.moebius_ladder(4), 8, 3),
        (families.bone_idle_ring(7), 14, 4),
        (families.sharpness_construction(12), 22, 12),
        (families.sharpness_construction(18), 31, 18),
    ],
)
def test_sizes_and_regularity(g, n, d):
    assert g.n == n
    assert g.regular_degree() == d
    assert g.is_connected()


def test_isomorphic_to_networkx_builders():
    pairs = [
        (families.petersen(), nx.petersen_graph()),
        (families.dodecahedral(), nx.dodecahedral_graph()),
        (families.hypercube(3), nx.hypercube_graph(3)),
        (families.prism(6), nx.circular_ladder_graph(6)),
        (families.moebius_ladder(5), nx.circulant_graph(10, [1, 5])),
        (families.cocktail_party(3), nx.octahedral_graph()),
        (families.complete_bipartite(2, 4), nx.complete_bipartite_graph(2, 4)),
    ]
    for ours, ref in pairs:
        assert nx.is_isomorphic(to_nx(ours), ref)


def test_star_and_path():
    s = families.star(4)
    assert s.degree(0) == 4 and all(s.degree(v) == 1 for v in range(1, 5))
    assert families.path(5).num_edges == 4


def test_bone_idle_ring_is_bone_idle():
    for n in (6, 7, 8):
        assert classify_graph(families.bone_idle_ring(n)).bone_idle


@pytest.mark.parametrize("d", [12, 14, 16, 18])
def test_sharpness_edge(d):
    r = edge_report(families.sharpness_construction(d), 0, 1)
    assert r.kappa == 0
    assert r.kappa0 == F(-1, d)


def test_product():
    c5 = families.cycle(5)
    sq = families.cartesian_product(c5, c5)
    assert sq.n == 25 and sq.num_edges == 50
    assert nx.is_isomorphic(to_nx(sq), nx.cartesian_product(to_nx(c5), to_nx(c5)))
    assert families.cartesian_power(families.complete(2), 3) == families.cartesian_power(
        families.complete(2), 3
    )
    assert nx.is_isomorphic(
        to_nx(families.cartesian_power(families.complete(2), 3)), nx.hypercube_graph(3)
    )
    with pytest.raises(EmptyGraph):
        families.cartesian_product(c5, Graph(0, []))


def test_generate_dispatch():
    assert generate(FamilySpec(Kind.CYCLE, (5,))) == families.cycle(5)
    assert generate(FamilySpec(Kind("kbipartite"), (3,))) == families.complete_bipartite(3, 3)
    assert generate(FamilySpec(Kind.FIGURE, ("petersen",))) == families.petersen()
    with pytest.raises(InvalidParams):
        generate(FamilySpec(Kind.CYCLE, ()))
    with pytest.raises(InvalidParams):
        generate(FamilySpec(Kind.CYCLE, ("x",)))
    with pytest.raises(InvalidParams):
        families.cycle(2)
    with pytest.raises(InvalidParams):
        families.sharpness_construction(11)
    with pytest.raises(UnknownFixture):
        families.figure_fixture("nope")


def test_fixtures():
    for name in families.FIXTURE_IDS:
        g = families.figure_fixture(name)
        assert g.is_connected()
        assert g.has_edge(*families.DESIGNATED_EDGE)
    g = families.figure_fixture("counterexample_9v4r")
    assert g.n == 9 and g.regular_degree() == 4
