import numpy as np
import pytest
from oracles import alpha, edge_set, has_triangle

from paraglider.acceptance import subset_isomorphism_oracle
from paraglider.enumeration import (
    MAX_ENUM_N,
    alpha_two_graphs,
    check_target_graph,
    graph_from_mask,
    labeled_graphs,
    mask_of_graph,
    pair_index,
    scan,
    target_class_graphs,
    triangle_free_graphs,
)
from paraglider.families import make_hstar
from paraglider.graph import Graph
from paraglider.patterns import PatternName

# labeled triangle-free graphs on n = 0..7 vertices
TRIANGLE_FREE = [1, 1, 2, 7, 41, 388, 5789, 133501]
# labeled {3K1, paraglider}-free graphs, counted by the mask oracle below
TARGET = [1, 1, 2, 7, 41, 358, 4154, 58549]


def test_mask_round_trip():
    for n in range(6):
        pairs = pair_index(n)
        for mask in range(0, 1 << len(pairs), 7):
            assert mask_of_graph(graph_from_mask(n, mask, pairs)) == mask


@pytest.mark.parametrize("n", range(8))
def test_counts(n):
    tf = list(triangle_free_graphs(n))
    a2 = list(alpha_two_graphs(n))
    assert len(tf) == len(a2) == TRIANGLE_FREE[n]
    assert len({mask_of_graph(g) for g in tf}) == len(tf)
    assert sum(1 for _ in target_class_graphs(n)) == TARGET[n]


@pytest.mark.parametrize("n", range(6))
def test_extension_matches_full_scan(n):
    want_tf = {mask_of_graph(g) for g in labeled_graphs(n) if not has_triangle(g.n, edge_set(g))}
    assert {mask_of_graph(g) for g in triangle_free_graphs(n)} == want_tf
    want_a2 = {mask_of_graph(g) for g in labeled_graphs(n) if alpha(g.n, edge_set(g)) <= 2}
    assert {mask_of_graph(g) for g in alpha_two_graphs(n)} == want_a2


def test_target_counts_from_mask_oracle():
    for n in range(8):
        flags = subset_isomorphism_oracle(n)
        free = ~flags[PatternName.THREE_K1] & ~flags[PatternName.PARAGLIDER]
        assert int(np.count_nonzero(free)) == TARGET[n]
        assert int(np.count_nonzero(~flags[PatternName.K3])) == TRIANGLE_FREE[n]


@pytest.mark.parametrize("n", range(7))
def test_scan_small(n):
    report = scan(n)
    assert report.ok, report.violations[:3]
    assert report.target == TARGET[n]
    assert report.scanned == TRIANGLE_FREE[n]
    d = report.to_dict()
    assert d["target_class"] == TARGET[n] and d["violations"] == []


def test_scan_limit():
    with pytest.raises(ValueError):
        scan(MAX_ENUM_N + 1)


def test_check_target_graph_named():
    problems, tight = check_target_graph(Graph.cycle(5).complement())
    assert problems == [] and not tight
    problems, _ = check_target_graph(make_hstar().complement(), exact_chi=False)
    assert problems == []
