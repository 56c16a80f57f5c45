import pytest

import cmseq as cq
from cmseq.errors import (
    NotTwoRegularError,
    PreconditionViolatedError,
    SizeMismatchError,
    TooSmallError,
)

from conftest import all_two_regular_multisets


def alternating_classes(g):
    """Parity 2-coloring of a union of even cycles (or one even cycle)."""
    h0, h1 = set(), set()
    for walk in cq.cycle_components(g):
        for j, e in enumerate(walk):
            (h0 if j % 2 == 0 else h1).add(e)
    return frozenset(h0), frozenset(h1)


def test_cycle_base_case():
    g = cq.cycle(8)
    h0, h1 = alternating_classes(g)
    o0, o1 = cq.order_cycle_or_paths(g, h0, h1)
    assert cq.cms_of_ordering(cq.concat(o0, o1)) == 3


def test_disjoint_paths_case():
    g = cq.build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    o0, o1 = cq.order_cycle_or_paths(g, frozenset({0, 2}), frozenset({1, 3}))
    assert cq.cms_of_ordering(cq.concat(o0, o1)) >= 1
    assert set(o0.seq) == {0, 2} and set(o1.seq) == {1, 3}


def test_cycle_or_paths_rejections():
    g = cq.two_regular([4, 4])
    h0, h1 = alternating_classes(g)
    with pytest.raises(PreconditionViolatedError):
        cq.order_cycle_or_paths(g, h0, h1)  # two cycles, not one
    g2 = cq.build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(SizeMismatchError):
        cq.order_cycle_or_paths(g2, frozenset({0, 1}), frozenset())


def test_order_two_matchings_single_edges():
    g = cq.build_graph(3, [(0, 1), (1, 2)])
    o0, o1 = cq.order_two_matchings(g, frozenset({0}), frozenset({1}))
    assert cq.cms_of_ordering(cq.concat(o0, o1)) >= 0


def test_order_two_matchings_cycle_and_mixed():
    g = cq.cycle(6)
    h0, h1 = alternating_classes(g)
    o0, o1 = cq.order_two_matchings(g, h0, h1)
    assert cq.cms_of_ordering(cq.concat(o0, o1)) >= 2

    g = cq.two_regular([4, 6])
    h0, h1 = alternating_classes(g)
    o0, o1 = cq.order_two_matchings(g, h0, h1)
    assert cq.cms_of_ordering(cq.concat(o0, o1)) >= 4


def test_order_two_matchings_many_shapes(rng):
    from conftest import random_disjoint_matchings

    for _ in range(200):
        t = rng.randrange(1, 12)
        g, (h0, h1) = random_disjoint_matchings(rng, [t, t])
        o0, o1 = cq.order_two_matchings(g, h0, h1)
        assert cq.cms_of_ordering(cq.concat(o0, o1)) >= t - 1


def test_no_single_4cycle_blocks():
    g = cq.cycle(9)
    blocks = cq.order_no_single_4cycle(g)
    sizes = [len(b.seq) for b in blocks]
    assert sizes == [3, 3, 3]
    for b in blocks:
        assert cq.is_matching(g, b.seq)
    joined = cq.concat_all(blocks)
    assert cq.cms_of_ordering(joined) >= 3
    # forward distance from block j into block j+1 at least |block j|
    boundaries = [0, sizes[0], sizes[0] + sizes[1]]
    label_block = {}
    for j, b in enumerate(blocks):
        for e in b.seq:
            label_block[e] = j
    for e in range(g.m):
        for f in cq.adjacent_edges(g, e):
            if label_block[f] == (label_block[e] + 1) % 3:
                assert cq.forward_distance(joined, e, f) >= sizes[label_block[e]]


def test_no_single_4cycle_families():
    g = cq.two_regular([3, 3])
    assert cq.cms_of_ordering(cq.concat_all(cq.order_no_single_4cycle(g))) >= 2
    g = cq.two_regular([4, 4, 5])
    assert cq.cms_of_ordering(cq.concat_all(cq.order_no_single_4cycle(g))) >= 4
    with pytest.raises(PreconditionViolatedError):
        cq.order_no_single_4cycle(cq.two_regular([4, 5]))
    with pytest.raises(NotTwoRegularError):
        cq.order_no_single_4cycle(cq.complete(4))


def test_order_two_regular_examples():
    for parts, n in [([4, 5], 9), ([4, 3], 7), ([12], 12)]:
        g = cq.two_regular(parts)
        assert cq.cms_of_ordering(cq.order_two_regular(g)) >= n // 3
    with pytest.raises(TooSmallError):
        cq.order_two_regular(cq.cycle(5))


def test_order_two_regular_exhaustive_small():
    for n in range(6, 19):
        for parts in all_two_regular_multisets(n):
            g = cq.two_regular(parts)
            o = cq.order_two_regular(g)
            assert len(o.seq) == g.m
            assert cq.cms_of_ordering(o) >= n // 3, parts
