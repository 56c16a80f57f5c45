import pytest

import cmseq as cq
from cmseq.errors import (
    KEvenError,
    KTooSmallError,
    LengthTooSmallError,
    PreconditionViolatedError,
)


def test_cycle():
    g = cq.cycle(5)
    assert g.m == 5
    assert g.edges == tuple((i, (i + 1) % 5) if i < 4 else (0, 4) for i in range(5))
    with pytest.raises(LengthTooSmallError):
        cq.cycle(2)


def test_two_regular_union():
    g = cq.two_regular([3, 4])
    assert g.vertex_count == 7 and g.m == 7
    comps = cq.cycle_components(g)
    assert sorted(len(c) for c in comps) == [3, 4]


def test_complete():
    assert cq.complete(4).m == 6


def test_b_graph_even():
    g = cq.b_graph(4)
    assert g.vertex_count == 5 and g.m == 10
    assert g.degree_sequence() == (4, 4, 4, 4, 4)


def test_b_graph_odd():
    g = cq.b_graph(3)
    assert g.m == 7
    assert g.degree_sequence() == (2, 3, 3, 3, 3)
    g5 = cq.b_graph(5)
    assert g5.m == (25 + 10 - 1) // 2
    with pytest.raises(KTooSmallError):
        cq.b_graph(1)


def test_b_graph_edge_count_formulas():
    for k in range(2, 11):
        g = cq.b_graph(k)
        if k % 2 == 0:
            assert g.m == k * (k + 1) // 2
        else:
            assert g.m == (k * k + 2 * k - 1) // 2
            degs = g.degree_sequence()
            assert degs.count(k - 1) == 1 and degs.count(k) == k + 1


def test_b_prime_graph():
    g = cq.b_prime_graph(3)
    assert g.vertex_count == 10 and g.m == 15
    assert g.regular_degree() == 3
    # first k+2 vertices induce the single blocker
    inner = [e for e in range(g.m) if max(g.endpoints(e)) < 5]
    assert len(inner) == 7
    with pytest.raises(KEvenError):
        cq.b_prime_graph(4)


def test_bk_containing_regular():
    g = cq.bk_containing_regular(14, 3)
    assert g.vertex_count == 14 and g.regular_degree() == 3
    g = cq.bk_containing_regular(16, 4)
    assert g.regular_degree() == 4 and g.vertex_count == 16
    with pytest.raises(PreconditionViolatedError):
        cq.bk_containing_regular(10, 3)


def test_random_regular():
    g = cq.random_regular(8, 3, seed=1)
    assert g.regular_degree() == 3
    again = cq.random_regular(8, 3, seed=1)
    assert g.edges == again.edges
    other = cq.random_regular(8, 3, seed=2)
    assert g.edges != other.edges  # overwhelmingly likely
    with pytest.raises(PreconditionViolatedError):
        cq.random_regular(5, 3, seed=0)


def test_circulant_filler():
    g = cq.circulant(11, 4)
    assert g.regular_degree() == 4
    g = cq.circulant(6, 3)
    assert g.regular_degree() == 3
