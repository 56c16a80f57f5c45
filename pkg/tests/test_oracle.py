import random
from fractions import Fraction

import pytest

import cmseq as cq
from cmseq.errors import BudgetExceededError, InvalidHintError, SearchCapExceededError

from conftest import brute_cms, petersen, random_graph, spec_b3


def test_exact_cms_named_values():
    assert cq.exact_cms(cq.cycle(7)).value == 3
    assert cq.exact_cms(cq.complete(5)).value == 1
    assert cq.exact_cms(cq.complete(4)).value == 1
    assert cq.exact_cms(cq.b_graph(3)).value == 1
    assert cq.exact_cms(spec_b3()).value == 1


def test_exact_cms_witness_attains_value():
    for g in (cq.cycle(9), cq.two_regular([3, 4]), cq.complete(5)):
        res = cq.exact_cms(g)
        assert cq.cms_of_ordering(res.ordering) == res.value


def test_exact_cms_matching_case():
    g = cq.matching_graph(5)
    assert cq.exact_cms(g).value == 5


def test_exact_cms_matches_brute_force():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng, max_n=7, max_m=7)
        assert cq.exact_cms(g).value == brute_cms(g)


def test_exact_cms_isomorphism_invariant():
    rng = random.Random(37)
    for _ in range(10):
        g = random_graph(rng, max_n=8, max_m=10)
        perm = list(range(g.vertex_count))
        rng.shuffle(perm)
        relabeled = cq.build_graph(
            g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges]
        )
        assert cq.exact_cms(g).value == cq.exact_cms(relabeled).value


def test_exact_cms_regular_upper_limit():
    # a k-regular graph never reaches (n-1)/2 + 1
    for g in (cq.cycle(8), petersen(), cq.complete(6), cq.b_prime_graph(3)):
        assert cq.exact_cms(g).value <= (g.vertex_count - 1) // 2


def test_budget_exceeded_interval():
    with pytest.raises(BudgetExceededError) as exc_info:
        cq.exact_cms(petersen(), node_budget=50)
    err = exc_info.value
    assert 1 <= err.lo <= err.hi
    assert cq.cms_of_ordering(err.ordering) >= err.lo


def test_fractional_chromatic_index_values():
    assert cq.fractional_chromatic_index(cq.cycle(4)) == 2
    assert cq.fractional_chromatic_index(cq.cycle(5)) == Fraction(5, 2)
    assert cq.fractional_chromatic_index(cq.complete(4)) == 3
    assert cq.fractional_chromatic_index(cq.matching_graph(4)) == 1
    assert cq.fractional_chromatic_index(petersen()) == 3
    with pytest.raises(SearchCapExceededError):
        cq.fractional_chromatic_index(cq.complete(8), cap=20)


def test_fractional_index_between_degree_and_chromatic_index():
    rng = random.Random(41)
    for _ in range(40):
        g = random_graph(rng, max_n=8, max_m=12)
        cf = cq.fractional_chromatic_index(g)
        c, _ = cq.exact_chromatic_index(g)
        assert g.max_degree() <= cf <= c


def test_upper_bound_fractional():
    assert cq.cms_upper_bound_fractional(cq.cycle(5)) == 2
    assert cq.cms_upper_bound_fractional(cq.complete(4)) == 2
    assert cq.cms_upper_bound_fractional(cq.matching_graph(4)) == 4


def test_upper_bound_subgraph():
    triangle = cq.cycle(3)
    for n in (9, 12, 15):
        bound_i, _ = cq.cms_upper_bound_subgraph(n, triangle, 1)
        assert bound_i == Fraction(n, 3)
    b3 = cq.b_graph(3)
    _, bound_ii = cq.cms_upper_bound_subgraph(15, b3, 1)
    assert bound_ii == Fraction(15, 4)
    g = cq.cycle(6)
    bound_i, _ = cq.cms_upper_bound_subgraph(g.m, g, cq.exact_cms(g).value)
    assert bound_i == cq.matching_number(g)
    with pytest.raises(InvalidHintError):
        cq.cms_upper_bound_subgraph(10, triangle, 0)


def test_maximal_matchings():
    mats = cq.maximal_matchings(cq.cycle(5))
    assert len(mats) == 5
    assert all(len(m) == 2 for m in mats)
