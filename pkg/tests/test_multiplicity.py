from fractions import Fraction

import pytest
from hypothesis import given, settings

from chromakac.errors import ContractViolation, SizeLimitError
from chromakac.graph import Graph, generate_graph
from chromakac.lattice import ConnectedPartition, enumerate_lattice, mobius, partition_of
from chromakac.multiplicity import (
    MultTable,
    edge_weight,
    edge_weight_lie,
    literal_paths,
    mult_partition,
    mult_root,
    path_sum,
    path_sums,
)

from strategies import graphs

K2 = generate_graph("complete", 2)
K3 = generate_graph("complete", 3)
K4 = generate_graph("complete", 4)
P3 = generate_graph("path", 3)
P4 = generate_graph("path", 4)


def test_mult_root_examples():
    assert mult_root(MultTable(K2), 0b11) == 1
    assert mult_root(MultTable(K3), 0b111) == 2
    assert mult_root(MultTable(P3), 0b111) == 1


def test_mult_root_contract():
    t = MultTable(P3)
    with pytest.raises(ContractViolation):
        t.mult_root(0b101)
    with pytest.raises(ContractViolation):
        t.mult_root(0)


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 2), (4, 6), (5, 24), (6, 120)])
def test_complete_graph_multiplicity_is_factorial(n, expected):
    # mult beta(Pi) for K_n is (n-1)!: the q^1 coefficient of q(q+1)...(q+n-1)
    G = generate_graph("complete", n)
    assert MultTable(G).mult_root(G.full) == expected


def test_memo_holds_positive_values_singletons_one():
    t = MultTable(generate_graph("random", 6, seed=4, p=0.6))
    roots = t.all_roots()
    assert all(m >= 1 for m in t.memo.values())
    assert all(roots[1 << v] == 1 for v in range(6))


def test_mult_partition_examples():
    t = MultTable(K3)
    lat = enumerate_lattice(K3)
    assert mult_partition(t, lat.bottom) == 1
    assert mult_partition(t, lat.top) == 2
    assert mult_partition(MultTable(K4), ConnectedPartition.from_lists([[0, 1], [2, 3]])) == 1


def test_edge_weight_examples():
    top3 = ConnectedPartition.from_lists([[0, 1, 2]])
    assert edge_weight(K3, top3, (0b001, 0b110)) == Fraction(2, 3)
    assert edge_weight(K2, ConnectedPartition.from_lists([[0, 1]]), (0b01, 0b10)) == 1
    pi = ConnectedPartition.from_lists([[0, 1], [2, 3]])
    assert edge_weight(P4, pi, (0b01, 0b10)) == Fraction(1, 2)


def test_edge_weight_contract():
    pi = ConnectedPartition.from_lists([[0, 1, 2]])
    with pytest.raises(ContractViolation):
        edge_weight(P3, pi, (0b010, 0b101))  # {0,2} disconnected
    with pytest.raises(ContractViolation):
        edge_weight(P3, ConnectedPartition.from_lists([[0], [1, 2]]), (0b001, 0b010))


@settings(max_examples=60, deadline=None)
@given(graphs(max_l=6))
def test_weight_range_and_lie_form(G):
    lat = enumerate_lattice(G)
    last = len(lat) - 1
    for i, pi in enumerate(lat.elements):
        for c in lat.covers[i]:
            w = edge_weight(G, pi, (c.a, c.b))
            assert w == edge_weight_lie(G, pi, (c.a, c.b))
            assert 0 < w <= 1
            assert (w == 1) == (c.target == last)


def test_path_sum_examples():
    lat = enumerate_lattice(K3)
    assert path_sum(lat, lat.bottom) == 1
    assert path_sum(lat, lat.top) == 2
    lat = enumerate_lattice(P3)
    assert path_sum(lat, lat.top) == 1


def test_literal_paths_k3():
    lat = enumerate_lattice(K3)
    paths = list(literal_paths(lat, lat.top))
    assert len(paths) == 3
    assert all(w == Fraction(2, 3) for _, w in paths)
    assert all(p[0] == lat.top and p[-1] == lat.bottom for p, _ in paths)


@pytest.mark.parametrize("family, n", [("complete", 4), ("cycle", 4), ("star", 4), ("path", 4), ("complete", 3)])
def test_literal_enumeration_matches_dp(family, n):
    G = generate_graph(family, n)
    lat = enumerate_lattice(G)
    f = path_sums(lat)
    for i, pi in enumerate(lat.elements):
        assert path_sum(lat, pi, literal=True) == f[i]


def test_literal_enumeration_guard():
    lat = enumerate_lattice(generate_graph("path", 5))
    with pytest.raises(SizeLimitError):
        list(literal_paths(lat, lat.top))


@settings(max_examples=60, deadline=None)
@given(graphs(max_l=7))
def test_path_sum_integral_and_equals_mult(G):
    lat = enumerate_lattice(G)
    t = MultTable(G)
    for pi, f in zip(lat, path_sums(lat)):
        assert f.denominator == 1
        assert f == t.mult_partition(pi)


@settings(max_examples=60, deadline=None)
@given(graphs(max_l=7))
def test_mobius_is_signed_multiplicity(G):
    lat = enumerate_lattice(G)
    t = MultTable(G)
    mu = mobius(lat)
    for pi in lat:
        assert mu[pi] == (-1) ** (G.l - len(pi)) * t.mult_partition(pi)


@settings(max_examples=40, deadline=None)
@given(graphs(max_l=7))
def test_multiplicity_depends_only_on_induced_subgraph(G):
    t = MultTable(G)
    for S, m in t.all_roots().items():
        H = G.induced(S)
        assert MultTable(H).mult_root(H.full) == m


def test_trees_are_multiplicity_free():
    spider = Graph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    trees = [generate_graph("path", 7), generate_graph("star", 7), spider]
    for G in trees:
        t = MultTable(G)
        lat = enumerate_lattice(G)
        f = path_sums(lat)
        assert set(t.all_roots().values()) == {1}
        assert all(x == 1 for x in f)


def test_path4_all_roots_one():
    assert set(MultTable(P4).all_roots().values()) == {1}


def test_partition_lookup_on_lattice():
    lat = enumerate_lattice(K4)
    pi = partition_of(lat, [[0, 1], [2, 3]])
    assert path_sum(lat, pi) == 1
