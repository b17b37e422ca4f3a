import random

import pytest
from conftest import graphs
from hypothesis import given
from oracles import bipartite, edge_set, matching_number

from paraglider.enumeration import graph_from_mask, labeled_graphs, pair_index
from paraglider.errors import GraphParseError, GraphSizeError
from paraglider.families import make_bhat, make_hstar, make_ht
from paraglider.graph import (
    Graph,
    complement,
    components,
    format_graph,
    is_matching,
    max_matching,
    parse_graph,
    shortest_odd_cycle,
    two_coloring,
)
from paraglider.patterns import is_isomorphic, triangle


def test_complement_examples():
    c5 = Graph.cycle(5)
    assert is_isomorphic(complement(c5), c5)
    assert complement(Graph.complete(3)).m == 0
    p4 = Graph.path(4)
    assert complement(complement(p4)) == p4
    assert complement(complement(p4)).adj == p4.adj


@pytest.mark.parametrize("n", range(7))
def test_complement_involution_exhaustive(n):
    for g in labeled_graphs(n):
        back = g.complement().complement()
        assert back.adj == g.adj


@given(graphs(min_n=7, max_n=8))
def test_complement_involution_sampled(g):
    assert g.complement().complement() == g


def test_shortest_odd_cycle_examples():
    assert shortest_odd_cycle(Graph.path(4)) is None
    cyc = shortest_odd_cycle(Graph.cycle(5))
    assert sorted(cyc) == [0, 1, 2, 3, 4]
    assert all(Graph.cycle(5).has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))
    assert len(shortest_odd_cycle(make_ht(2))) == 5


def _check_odd_cycle(g):
    cyc = shortest_odd_cycle(g)
    truth = bipartite(g.n, edge_set(g))
    assert (cyc is None) == truth
    assert (two_coloring(g) is None) == (not truth)
    if cyc is not None:
        k = len(cyc)
        assert k % 2 == 1 and len(set(cyc)) == k
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
        if triangle(g) is None:
            # chordless in a triangle-free graph
            assert sum(g.has_edge(a, b) for i, a in enumerate(cyc) for b in cyc[i + 1:]) == k


@pytest.mark.parametrize("n", range(6))
def test_odd_cycle_vs_bipartite_exhaustive(n):
    for g in labeled_graphs(n):
        _check_odd_cycle(g)


def test_odd_cycle_vs_bipartite_n7_sample():
    rng = random.Random(7)
    pairs = pair_index(7)
    for _ in range(3000):
        _check_odd_cycle(graph_from_mask(7, rng.getrandbits(21), pairs))


def test_odd_cycle_is_deterministic():
    g = make_hstar()
    assert shortest_odd_cycle(g) == shortest_odd_cycle(Graph.from_edges(g.n, g.edges()))


def test_max_matching_examples():
    assert len(max_matching(Graph.cycle(5))) == 2
    assert len(max_matching(Graph.complete(4))) == 2
    h = make_bhat(2)
    assert len(max_matching(h)) == 5
    assert h.n - len(max_matching(h)) == 6


@pytest.mark.parametrize("n", range(7))
def test_max_matching_exhaustive(n):
    for g in labeled_graphs(n):
        m = max_matching(g)
        assert is_matching(g, m)
        assert len(m) == matching_number(edge_set(g))


def test_max_matching_n7_sample():
    rng = random.Random(11)
    pairs = pair_index(7)
    for _ in range(2000):
        g = graph_from_mask(7, rng.getrandbits(21), pairs)
        m = max_matching(g)
        assert is_matching(g, m) and len(m) == matching_number(edge_set(g))


def test_max_matching_blossom_case():
    # two triangles joined by a path; greedy without blossoms can stall here
    g = Graph.from_edges(8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)])
    assert len(max_matching(g)) == 4


def test_components_examples():
    assert sorted(bin(c).count("1") for c in components(Graph.empty(3))) == [1, 1, 1]
    c5k1 = Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)])
    assert sorted(bin(c).count("1") for c in components(c5k1)) == [1, 5]
    assert components(make_hstar()) == [(1 << 16) - 1]


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(3, [0b010, 0b000, 0b000])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0b00])  # loop
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0b000])  # bit beyond n
    with pytest.raises(GraphSizeError):
        Graph.empty(129)


def test_env_cap_only_lowers(monkeypatch):
    monkeypatch.setenv("PARAGLIDER_MAX_N", "10")
    with pytest.raises(GraphSizeError):
        Graph.empty(11)
    monkeypatch.setenv("PARAGLIDER_MAX_N", "500")
    with pytest.raises(GraphSizeError):
        Graph.empty(129)


def test_parse_format_round_trip():
    g = make_hstar()
    text = format_graph(g, "H*")
    again = parse_graph(text)
    assert again == g
    assert format_graph(again, "H*") == text


@given(graphs(max_n=10))
def test_round_trip_property(g):
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize(
    "text,line",
    [
        ("3\n0 1\n0 1\n", 3),
        ("3\n1 1\n", 2),
        ("3\n2 1\n", 2),
        ("3\n0 3\n", 2),
        ("# c\nx\n", 2),
        ("3\n0 1 2\n", 2),
        ("3\r\n0 1\n", 1),
    ],
)
def test_parse_errors_cite_lines(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_skips_comments_and_blanks():
    g = parse_graph("# header\n\n4\n# edge list\n0 1\n\n2 3\n")
    assert g.n == 4 and g.edges() == [(0, 1), (2, 3)]


def test_parse_size_cap():
    with pytest.raises(GraphSizeError):
        parse_graph("200\n")
