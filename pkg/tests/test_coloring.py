import random

import pytest

import cmseq as cq
from cmseq.errors import SearchCapExceededError, TooFewClassesError

from conftest import petersen, random_graph


def assert_proper(g, decomp):
    for cls in decomp.classes:
        assert cq.is_matching(g, cls)
    assert sorted(e for cls in decomp.classes for e in cls) == list(range(g.m))


def test_fan_recoloring_examples():
    assert cq.edge_color_delta_plus_one(cq.cycle(6)).t == 2
    assert cq.edge_color_delta_plus_one(cq.cycle(5)).t == 3
    d = cq.edge_color_delta_plus_one(cq.complete(4))
    assert d.t == 3
    assert_proper(cq.complete(4), d)


def test_fan_recoloring_random():
    rng = random.Random(17)
    for _ in range(120):
        g = random_graph(rng, max_n=12, max_m=22)
        d = cq.edge_color_delta_plus_one(g)
        assert d.t <= g.max_degree() + 1
        assert_proper(g, d)


def test_exact_chromatic_index():
    c, w = cq.exact_chromatic_index(cq.cycle(6))
    assert c == 2 and w.t == 2
    c, w = cq.exact_chromatic_index(petersen())
    assert c == 4
    assert_proper(petersen(), w)
    c, w = cq.exact_chromatic_index(cq.b_graph(3))
    assert c == 4  # degree-3 blocker admits no 3-coloring
    with pytest.raises(SearchCapExceededError):
        cq.exact_chromatic_index(cq.complete(12), cap=40)


def test_equitable_examples():
    assert sorted(cq.equitable_decomposition(cq.cycle(5), 3).sizes()) == [1, 2, 2]
    assert sorted(cq.equitable_decomposition(cq.cycle(6), 2).sizes()) == [3, 3]
    assert sorted(cq.equitable_decomposition(cq.complete(4), 3).sizes()) == [2, 2, 2]


def test_equitable_too_few_classes():
    with pytest.raises(TooFewClassesError):
        cq.equitable_decomposition(cq.cycle(5), 2)  # odd cycle needs 3
    with pytest.raises(TooFewClassesError):
        cq.equitable_decomposition(cq.complete(4), 2)


def test_equitable_class_sizes_random():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng, max_n=9, max_m=14)
        c, _ = cq.exact_chromatic_index(g)
        for t in (c, c + 1, c + 2):
            d = cq.equitable_decomposition(g, t)
            assert d.t == t
            sizes = d.sizes()
            assert max(sizes) - min(sizes) <= 1
            assert all(s in (g.m // t, -(-g.m // t)) for s in sizes)
            assert_proper(g, d)
