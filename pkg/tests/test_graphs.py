import random

import pytest
from hypothesis import given, strategies as st

import cmseq as cq
from cmseq.errors import DuplicateEdgeError, LoopEdgeError, VertexOutOfRangeError

from conftest import petersen, random_graph, spec_b3


def test_build_cycle():
    g = cq.build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4
    assert g.degree_sequence() == (2, 2, 2, 2)


def test_build_blocker_shape():
    g = spec_b3()
    assert g.m == 7
    assert g.degree_sequence() == (2, 3, 3, 3, 3)


def test_build_rejections():
    with pytest.raises(DuplicateEdgeError):
        cq.build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(LoopEdgeError):
        cq.build_graph(3, [(1, 1)])
    with pytest.raises(VertexOutOfRangeError):
        cq.build_graph(3, [(0, 3)])


def test_is_matching():
    c4 = cq.cycle(4)
    assert cq.is_matching(c4, {0, 2})
    assert not cq.is_matching(c4, {0, 1})
    b3 = spec_b3()
    assert cq.is_matching(b3, {b3.index_of(0, 1), b3.index_of(2, 3)})


def test_adjacent_edges():
    c4 = cq.cycle(4)
    assert cq.adjacent_edges(c4, 0) == {1, 3}
    b3 = spec_b3()
    e = b3.index_of(3, 4)
    expect = {b3.index_of(1, 3), b3.index_of(2, 3), b3.index_of(0, 4)}
    assert cq.adjacent_edges(b3, e) == expect
    single = cq.build_graph(2, [(0, 1)])
    assert cq.adjacent_edges(single, 0) == frozenset()


def test_matching_number_examples():
    assert cq.matching_number(cq.cycle(5)) == 2
    assert cq.matching_number(spec_b3()) == 2
    assert cq.matching_number(cq.complete(4)) == 2
    assert cq.matching_number(petersen()) == 5


def test_matching_witness_is_matching():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng)
        witness = cq.maximum_matching(g)
        assert cq.is_matching(g, witness)
        assert len(witness) == cq.matching_number(g)
        assert len(witness) <= g.vertex_count // 2


def test_matching_number_matches_brute_force():
    rng = random.Random(6)
    for _ in range(150):
        g = random_graph(rng, max_n=9, max_m=12)
        assert cq.matching_number(g) == cq.matching_number_brute(g)
    # odd components and dense cases where greedy alone is wrong
    assert cq.matching_number(petersen()) == cq.matching_number_brute(petersen())


@given(st.integers(0, 10**6))
def test_adjacency_symmetric(seed):
    g = random_graph(random.Random(seed), max_n=8, max_m=10)
    for e in range(g.m):
        for f in cq.adjacent_edges(g, e):
            assert e in cq.adjacent_edges(g, f)
