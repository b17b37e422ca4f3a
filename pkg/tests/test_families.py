import pytest

from paraglider.decompose import Label, classify, decompose, validate_structure
from paraglider.errors import GraphSizeError
from paraglider.families import GenerationExhausted, GenParams, make_bhat, make_hstar, make_ht, random_class_member
from paraglider.graph import Graph
from paraglider.patterns import in_class_H, is_isomorphic


def test_hstar_shape():
    h = make_hstar()
    assert (h.n, h.m) == (16, 40)
    assert all(h.degree(v) == 5 for v in range(16))
    assert in_class_H(h)
    assert validate_structure(h, decompose(h)).ok


def test_hstar_is_the_folded_5_cube():
    # 4-bit words, adjacent when they differ in one bit or in all four
    clebsch = Graph.from_edges(16, [(u, v) for u in range(16) for v in range(u + 1, 16) if bin(u ^ v).count("1") in (1, 4)])
    assert is_isomorphic(make_hstar(), clebsch)


def test_hstar_is_vertex_labelled_as_documented():
    h = make_hstar()
    for k in range(5):
        assert h.has_edge(k, (k + 1) % 5)
        assert h.has_edge(5 + k, k)
        assert h.has_edge(10 + k, (k - 1) % 5) and h.has_edge(10 + k, (k + 1) % 5)
        assert h.has_edge(15, 10 + k)


@pytest.mark.parametrize("s", range(2, 9))
def test_bhat(s):
    h = make_bhat(s)
    assert h.n == 3 * s + 5
    assert in_class_H(h)
    assert classify(h, decompose(h)).label is Label.B1


def test_bhat_one_has_no_edge_between_its_b_sets():
    h = make_bhat(1)
    assert in_class_H(h)
    assert classify(h, decompose(h)).label is Label.OTHER


@pytest.mark.parametrize("t", range(1, 9))
def test_ht(t):
    h = make_ht(t)
    assert h.n == 5 * t + 5
    assert in_class_H(h)
    assert classify(h, decompose(h)).label is Label.B2


def test_family_argument_checks():
    with pytest.raises(ValueError):
        make_bhat(0)
    with pytest.raises(ValueError):
        make_ht(0)
    with pytest.raises(GraphSizeError):
        make_ht(25)
    with pytest.raises(GraphSizeError):
        make_bhat(42)


def test_sampler_is_reproducible():
    p = GenParams(seed=1234, n_target=30)
    assert random_class_member(p) == random_class_member(p)
    assert random_class_member(p) != random_class_member(GenParams(seed=1235, n_target=30))


def test_sampler_outputs_are_members():
    sizes = []
    for seed in range(200):
        h = random_class_member(GenParams(seed=seed, n_target=8 + seed % 33))
        assert in_class_H(h)
        sizes.append(h.n)
    assert max(sizes) >= 35


def test_sampler_covers_labels():
    labels = {Label.B1: 0, Label.B2: 0, Label.OTHER: 0}
    for seed in range(300):
        h = random_class_member(GenParams(seed=seed, n_target=8 + seed % 33))
        labels[classify(h, decompose(h)).label] += 1
    assert all(v >= 10 for v in labels.values()), labels


def test_degenerate_params_give_c5():
    for seed in range(5):
        h = random_class_member(GenParams(seed=seed, hA_range=(0, 0), hB_range=(0, 0), s2_range=(0, 0), n_target=5))
        assert is_isomorphic(h, Graph.cycle(5))


def test_hstar_shape_params_give_hstar():
    for seed in range(10):
        p = GenParams(seed=seed, hA_range=(5, 5), hB_range=(5, 5), s2_range=(1, 1), max_set=1, n_target=16)
        assert is_isomorphic(random_class_member(p), make_hstar())


def test_param_validation():
    with pytest.raises(ValueError):
        GenParams(hA_range=(3, 6))
    with pytest.raises(ValueError):
        GenParams(s2_range=(2, 1))
    with pytest.raises(GraphSizeError):
        GenParams(n_target=129)
    with pytest.raises(ValueError):
        GenParams(seed=-1)


def test_budget_exhaustion():
    p = GenParams(seed=1, hA_range=(5, 5), hB_range=(5, 5), s2_range=(6, 6), max_set=1, n_target=21, budget=50)
    with pytest.raises(GenerationExhausted) as info:
        random_class_member(p)
    assert info.value.budget == 50
