
import pytest
from conftest import graphs
from hypothesis import given
from oracles import alpha, chi, edge_set, omega, theta

from paraglider.enumeration import labeled_graphs, triangle_free_graphs
from paraglider.errors import BudgetExceeded, NotTriangleFreeError
from paraglider.exact import (
    bipartite_max_independent_set,
    brute_invariants,
    chromatic_coloring,
    chromatic_number,
    clique_number,
    independence_number,
    is_clique_cover,
    min_clique_cover,
    theta_triangle_free,
)
from paraglider.families import make_bhat, make_hstar, make_ht
from paraglider.graph import Graph


def test_c5_invariants():
    r = brute_invariants(Graph.cycle(5))
    assert (r.omega, r.alpha, r.chi, r.theta) == (2, 2, 3, 3)
    assert r.validate(Graph.cycle(5))


@pytest.mark.parametrize(
    "h,a,th",
    [(make_hstar(), 5, 8), (make_bhat(2), 4, 6), (make_ht(1), 4, 5), (make_ht(2), 6, 8), (Graph.cycle(5), 2, 3)],
    ids=["Hstar", "Bhat2", "H1", "H2", "C5"],
)
def test_named_values(h, a, th):
    assert independence_number(h) == a
    assert theta_triangle_free(h)[0] == th
    if h.n <= 16:
        assert len(min_clique_cover(h)) == th


def test_ht_alpha():
    for t in range(1, 6):
        assert independence_number(make_ht(t)) == 2 * t + 2


def test_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    p = Graph.from_edges(10, outer + inner + spokes)
    r = brute_invariants(p)
    assert (r.omega, r.alpha, r.chi, r.theta) == (2, 4, 3, 5)
    assert r.validate(p)


def _agrees(g):
    E = edge_set(g)
    r = brute_invariants(g)
    assert r.validate(g)
    assert (r.omega, r.alpha, r.chi, r.theta) == (omega(g.n, E), alpha(g.n, E), chi(g.n, E), theta(g.n, E))


@pytest.mark.parametrize("n", range(6))
def test_invariants_vs_naive_exhaustive(n):
    for g in labeled_graphs(n):
        _agrees(g)


@given(graphs(min_n=6, max_n=8))
def test_invariants_vs_naive_sampled(g):
    _agrees(g)


@pytest.mark.parametrize("n", range(8))
def test_chi_equals_theta_of_complement_exhaustive(n):
    for g in labeled_graphs(n):
        assert chromatic_number(g) == len(min_clique_cover(g.complement()))


@pytest.mark.parametrize("n", range(7))
def test_theta_triangle_free_exhaustive(n):
    for h in triangle_free_graphs(n):
        count, cover = theta_triangle_free(h)
        assert is_clique_cover(h, cover) and len(cover) == count
        assert count == len(min_clique_cover(h))
        if n <= 5:
            assert count == theta(h.n, edge_set(h))


def test_theta_triangle_free_rejects_triangles():
    with pytest.raises(NotTriangleFreeError) as info:
        theta_triangle_free(Graph.complete(4))
    assert len(info.value.witness) == 3


def test_caps():
    with pytest.raises(BudgetExceeded):
        chromatic_number(Graph.empty(17))
    with pytest.raises(BudgetExceeded):
        clique_number(Graph.empty(41))
    assert chromatic_number(Graph.complete(16)) == 16
    assert clique_number(Graph.cycle(40)) == 2


@given(graphs(max_n=12))
def test_coloring_is_proper_and_optimal_lower_bound(g):
    col = chromatic_coloring(g)
    assert all(col[u] != col[v] for u, v in g.edges())
    k = max(col, default=-1) + 1
    assert k >= clique_number(g)
    assert k == chromatic_number(g)


def test_bipartite_mis_is_konig():
    for n in range(7):
        for h in labeled_graphs(n):
            try:
                s = bipartite_max_independent_set(h)
            except ValueError:
                continue
            assert h.is_independent(s) and s.bit_count() == independence_number(h)
