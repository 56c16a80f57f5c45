import random

import pytest
from hypothesis import given, strategies as st

import cmseq as cq
from cmseq.errors import EdgeNotInGraphError, OverlappingEdgesError, SameEdgeError

from conftest import random_graph


def path4():
    """Four edges a-b-c-d in a path of 5 vertices; labels follow (a,b,c,d)."""
    g = cq.build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    return g, cq.full_ordering(g)


def test_forward_distance():
    g, o = path4()
    assert cq.forward_distance(o, 0, 2) == 2
    assert cq.forward_distance(o, 1, 0) == 3
    with pytest.raises(SameEdgeError):
        cq.forward_distance(o, 0, 0)


def test_distance():
    g, o = path4()
    assert cq.distance(o, 0, 1) == 1
    assert cq.distance(o, 0, 2) == 2
    g7 = cq.matching_graph(7)
    o7 = cq.full_ordering(g7)
    assert cq.distance(o7, o7.edge_at(0), o7.edge_at(5)) == 2


def test_cms_examples():
    c5 = cq.cycle(5)
    assert cq.cms_of_ordering(cq.make_ordering(c5, (0, 2, 4, 1, 3))) == 2
    c4 = cq.cycle(4)
    for seq in [(0, 1, 2, 3), (0, 2, 1, 3), (1, 3, 0, 2), (3, 1, 2, 0)]:
        assert cq.cms_of_ordering(cq.make_ordering(c4, seq)) == 1
    pm = cq.matching_graph(3)
    assert cq.cms_of_ordering(cq.full_ordering(pm)) == 3


def test_ms_examples():
    g = cq.build_graph(3, [(0, 1), (1, 2)])
    assert cq.ms_of_ordering(cq.full_ordering(g)) == 1
    c5 = cq.cycle(5)
    o = cq.make_ordering(c5, (0, 2, 4, 1, 3))
    assert cq.ms_of_ordering(o) >= cq.cms_of_ordering(o)
    assert cq.ms_of_ordering(cq.full_ordering(cq.matching_graph(4))) == 4


def test_concat():
    g = cq.build_graph(6, [(0, 1), (2, 3), (4, 5)])
    o1 = cq.make_ordering(g, (0, 1))
    o2 = cq.make_ordering(g, (2,))
    joined = cq.concat(o1, o2)
    assert joined.seq == (0, 1, 2)
    with pytest.raises(OverlappingEdgesError):
        cq.concat(o1, cq.make_ordering(g, (1, 2)))


def test_concat_associative():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, max_n=8, max_m=9)
        edges = list(range(g.m))
        rng.shuffle(edges)
        a, b = rng.randrange(g.m + 1), rng.randrange(g.m + 1)
        lo, hi = min(a, b), max(a, b)
        o1 = cq.make_ordering(g, edges[:lo])
        o2 = cq.make_ordering(g, edges[lo:hi])
        o3 = cq.make_ordering(g, edges[hi:])
        left = cq.concat(cq.concat(o1, o2), o3)
        right = cq.concat(o1, cq.concat(o2, o3))
        assert left.seq == right.seq


def test_subordering():
    g, o = path4()
    sub = cq.subordering(o, {1, 3})
    assert sub.seq == (1, 3)
    assert cq.subordering(o, set(range(4))).seq == o.seq
    assert cq.subordering(o, set()).seq == ()
    with pytest.raises(EdgeNotInGraphError):
        cq.subordering(cq.make_ordering(g, (0, 1)), {3})


def test_subordering_preserves_relative_order():
    rng = random.Random(9)
    for _ in range(40):
        g = random_graph(rng)
        seq = list(range(g.m))
        rng.shuffle(seq)
        o = cq.make_ordering(g, seq)
        sub = frozenset(rng.sample(range(g.m), rng.randrange(g.m + 1)))
        so = cq.subordering(o, sub)
        for i in range(len(so.seq)):
            for j in range(i + 1, len(so.seq)):
                assert o.label(so.seq[i]) < o.label(so.seq[j])


@given(st.integers(0, 10**6))
def test_metric_chain(seed):
    rng = random.Random(seed)
    g = random_graph(rng, max_n=8, max_m=10)
    seq = list(range(g.m))
    rng.shuffle(seq)
    o = cq.make_ordering(g, seq)
    cms = cq.cms_of_ordering(o)
    ms = cq.ms_of_ordering(o)
    assert 0 < cms <= ms <= g.m
    assert cms <= cq.matching_number(g) or cq.is_matching(g, range(g.m))


@given(st.integers(0, 10**6), st.integers(0, 50))
def test_cms_rotation_reflection_invariant(seed, r):
    rng = random.Random(seed)
    g = random_graph(rng, max_n=8, max_m=10)
    seq = list(range(g.m))
    rng.shuffle(seq)
    o = cq.make_ordering(g, seq)
    base = cq.cms_of_ordering(o)
    assert cq.cms_of_ordering(cq.rotate(o, r)) == base
    assert cq.cms_of_ordering(cq.reflect(o)) == base


def test_every_window_of_cms_size_is_matching():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, max_n=8, max_m=10)
        seq = list(range(g.m))
        rng.shuffle(seq)
        o = cq.make_ordering(g, seq)
        s = cq.cms_of_ordering(o)
        m = g.m
        for start in range(m):
            window = [seq[(start + i) % m] for i in range(min(s, m))]
            assert cq.is_matching(g, window)
