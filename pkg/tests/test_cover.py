import math

import pytest
from conftest import graphs
from hypothesis import given

from paraglider.acceptance import refined_bound
from paraglider.cover import (
    build_cover,
    color,
    cover_over_all_c5s,
    independent_set_witness,
    theorem_bound,
    witness_independent_set,
)
from paraglider.decompose import all_decompositions, decompose
from paraglider.enumeration import labeled_graphs, target_class_graphs
from paraglider.errors import ClassViolation
from paraglider.exact import chromatic_number, clique_number, independence_number, is_clique_cover
from paraglider.families import GenParams, make_bhat, make_hstar, make_ht, random_class_member
from paraglider.graph import Graph, bits, is_matching
from paraglider.patterns import has_induced


def _members(count, base=0):
    for seed in range(count):
        yield seed, random_class_member(GenParams(seed=base + seed, n_target=8 + seed % 33))


@pytest.mark.parametrize(
    "h,size,claim,label",
    [
        (make_hstar(), 8, "alpha+3", "other"),
        (make_bhat(2), 6, "2alpha-2", "B1"),
        (make_ht(1), 5, "3alpha/2-1", "B2"),
        (make_ht(2), 8, "3alpha/2-1", "B2"),
        (make_ht(3), 11, "3alpha/2-1", "B2"),
    ],
    ids=["Hstar", "Bhat2", "H1", "H2", "H3"],
)
def test_named_covers_are_tight(h, size, claim, label):
    cover, trace = build_cover(h)
    assert len(cover) == size
    assert (trace.claimed, trace.label) == (claim, label)
    assert trace.bound == size
    assert is_clique_cover(h, cover.parts)
    assert len(cover) == refined_bound(label, independence_number(h))


def test_bhat_sharper_bound():
    _, trace = build_cover(make_bhat(2))
    assert trace.case.startswith("2.1")
    assert trace.sharper_bound == 6
    assert trace.eq1 and trace.eq2


def test_c5_cover():
    cover, trace = build_cover(Graph.cycle(5))
    assert len(cover) == 3 and trace.alpha == 2


def test_perfect_and_disconnected_routes():
    cover, trace = build_cover(Graph.cycle(6))
    assert trace.case == "perfect" and len(cover) == 3 and trace.alpha == 3
    c5k2 = Graph.from_edges(7, [(i, (i + 1) % 5) for i in range(5)])
    cover, trace = build_cover(c5k2)
    assert trace.case == "disconnected" and len(cover) == 5
    assert trace.isolated == [5, 6] and trace.alpha == 4


def test_input_checks():
    with pytest.raises(ClassViolation):
        build_cover(Graph.cycle(7))
    with pytest.raises(ClassViolation):
        build_cover(Graph.complete(3))
    with pytest.raises(ClassViolation):
        color(Graph.empty(3))
    with pytest.raises(ClassViolation):
        independent_set_witness(Graph.cycle(7))


def _check_color(g):
    coloring, trace = color(g)
    assert len(coloring.colors) == g.n
    assert all(coloring.colors[u] != coloring.colors[v] for u, v in g.edges())
    w = clique_number(g)
    assert coloring.count <= max(w + 3, 2 * w - 2)
    assert coloring.count <= theorem_bound(trace.alpha)
    assert sorted(v for cls in coloring.classes() for v in cls) == list(range(g.n))
    return coloring


@pytest.mark.parametrize("n", range(7))
def test_color_exhaustive_small(n):
    for g in target_class_graphs(n):
        col = _check_color(g)
        if n <= 6:
            assert col.count >= chromatic_number(g)


def test_color_random_complements():
    for seed, h in _members(500, base=50_000):
        g = h.complement()
        col = _check_color(g)
        # alpha(g) <= 2 so chi(g) = n - max matching of the complement
        _, trace = build_cover(h)
        assert col.count == trace.size


def _check_trace(h, cover, trace):
    assert trace.size == len(cover)
    assert h.is_independent(trace.alpha_set)
    if trace.alpha_source == "witness":
        assert trace.alpha_set.bit_count() == trace.alpha
    for name, pairs in trace.matchings.items():
        assert is_matching(h, pairs), name
    if trace.eq1 is not None:
        assert trace.eq1 and trace.eq2
    if trace.case.startswith("2.1"):
        assert "M" in trace.sets
        for x, y in trace.sets["M"]:
            assert not h.has_edge(x, y)


def test_random_members_meet_refined_bounds():
    seen = set()
    for seed, h in _members(500, base=20_000):
        d = decompose(h)
        cover, trace = build_cover(h, d)
        assert is_clique_cover(h, cover.parts)
        _check_trace(h, cover, trace)
        alpha = independence_number(h)
        assert trace.alpha <= alpha
        assert len(cover) <= refined_bound(trace.label, alpha), seed
        assert len(cover) <= theorem_bound(alpha)
        if trace.sharper_bound is not None:
            assert len(cover) <= trace.sharper_bound <= 2 * alpha - 2
        seen.add(trace.case)
    assert len(seen) >= 6


def test_large_members_use_witness_alpha():
    for seed in range(15):
        h = random_class_member(GenParams(seed=900 + seed, n_target=60 + 4 * seed))
        cover, trace = build_cover(h)
        assert trace.alpha_source == "witness"
        assert len(cover) <= trace.bound <= theorem_bound(trace.alpha)


def test_every_c5_root_stays_within_bound():
    for seed, h in _members(40, base=70_000):
        for probe in cover_over_all_c5s(h):
            assert probe.error is None and probe.within_bound, (seed, probe)
    assert len(all_decompositions(make_hstar())) == len(cover_over_all_c5s(make_hstar()))


def test_witness_named():
    h = make_hstar()
    w = witness_independent_set(h, decompose(h))
    assert w.largest == 5 and 3 * w.largest == h.n - 1
    h3 = make_ht(3)
    w3 = witness_independent_set(h3, decompose(h3))
    assert w3.largest >= 7
    assert w3.partition


def test_witness_random_members():
    for seed, h in _members(300, base=30_000):
        w = witness_independent_set(h, decompose(h))
        for s in w.sets:
            assert h.is_independent(s)
        assert h.is_independent(w.best)
        assert w.largest >= math.ceil((h.n - 1) / 3)
        if 3 * w.largest < h.n:
            assert h.n == 16


def test_independent_set_witness_general():
    for n in range(6):
        for h in labeled_graphs(n):
            if has_induced("K3", h) or has_induced("P2uP3", h):
                continue
            s = independent_set_witness(h)
            assert h.is_independent(s)
            assert 3 * s.bit_count() >= h.n - 1


@given(graphs(max_n=9))
def test_cover_property(h):
    if has_induced("K3", h) or has_induced("P2uP3", h):
        with pytest.raises(ClassViolation):
            build_cover(h)
        return
    cover, trace = build_cover(h)
    assert is_clique_cover(h, cover.parts)
    assert len(cover) <= theorem_bound(independence_number(h))
    assert set(bits(h.vertices)) == {v for p in cover.parts for v in bits(p)}
