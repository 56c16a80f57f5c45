"""Shared fixtures and independent oracles."""
from __future__ import annotations

import itertools
import random

import pytest

import cmseq as cq


def petersen() -> cq.Graph:
    return cq.build_graph(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )


def spec_b3() -> cq.Graph:
    """The 7-edge blocker on 5 vertices with the degree-2 vertex last."""
    return cq.build_graph(5, [(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3), (3, 4)])


def random_graph(rng: random.Random, max_n: int = 10, max_m: int = 12) -> cq.Graph:
    n = rng.randrange(2, max_n + 1)
    cap = min(max_m, n * (n - 1) // 2)
    target = rng.randrange(1, cap + 1)
    pairs = set()
    tries = 0
    while len(pairs) < target and tries < 200:
        u, v = rng.sample(range(n), 2)
        pairs.add((min(u, v), max(u, v)))
        tries += 1
    return cq.build_graph(n, sorted(pairs))


def random_disjoint_matchings(rng: random.Random, sizes, n_extra: int = 4):
    """Edge-disjoint matchings of the given sizes inside one host graph.

    Matchings may share vertices with each other (never within one).
    Returns (graph, [frozenset of edge ids per matching]).
    """
    n = 2 * max(sizes, default=1) + n_extra
    pairs: list[tuple[int, int]] = []
    seen = set()
    groups = []
    for size in sizes:
        used_vertices: set[int] = set()
        group = []
        tries = 0
        while len(group) < size:
            tries += 1
            if tries > 500:
                n += 2
                tries = 0
            u, v = rng.sample(range(n), 2)
            key = (min(u, v), max(u, v))
            if key in seen or u in used_vertices or v in used_vertices:
                continue
            seen.add(key)
            used_vertices.update(key)
            group.append(len(pairs))
            pairs.append(key)
        groups.append(frozenset(group))
    return cq.build_graph(n, pairs), groups


def brute_cms(g: cq.Graph) -> int:
    """Exhaustive cms over all cyclic orderings (rotations pinned)."""
    m = g.m
    if m == 0:
        return 0
    if cq.is_matching(g, range(m)):
        return m
    best = 0
    for perm in itertools.permutations(range(1, m)):
        o = cq.make_ordering(g, (0,) + perm)
        best = max(best, cq.cms_of_ordering(o))
    return best


def all_two_regular_multisets(n: int, smallest: int = 3):
    """Cycle-length multisets (ascending) of 2-regular graphs of order n."""
    if n == 0:
        yield []
        return
    for part in range(smallest, n + 1):
        if n - part not in (1, 2):
            for rest in all_two_regular_multisets(n - part, part):
                yield [part] + rest


@pytest.fixture
def rng():
    return random.Random(20260810)
