"""Graph families used as instances and fixtures.

Includes the blocker family B_k (complete graph for even k; for odd k the
complement of a 3-vertex path plus a matching) whose presence in a k-regular
graph forces a small cyclic matching sequenceability, together with the
joined double copy B'_k and k-regular hosts containing them.
"""
from __future__ import annotations

import random

from .errors import (
    GenerationFailedError,
    KEvenError,
    KTooSmallError,
    LengthTooSmallError,
    PreconditionViolatedError,
)
from .graphs import Graph, build_graph


def cycle(n: int) -> Graph:
    """Cycle C_n with edges e_i = {i, i+1 mod n}."""
    if n < 3:
        raise LengthTooSmallError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on n vertices (n-1 edges)."""
    if n < 1:
        raise LengthTooSmallError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    """Complete graph K_n, edges in lexicographic order."""
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def matching_graph(t: int) -> Graph:
    """Perfect matching with t edges on 2t vertices."""
    return build_graph(2 * t, [(2 * i, 2 * i + 1) for i in range(t)])


def disjoint_union(gs) -> Graph:
    """Vertex-disjoint union; vertex blocks are consecutive, edges kept in
    block order."""
    gs = list(gs)
    n = 0
    pairs = []
    for g in gs:
        pairs.extend((u + n, v + n) for u, v in g.edges)
        n += g.vertex_count
    return build_graph(n, pairs)


def two_regular(cycle_lengths) -> Graph:
    """Union of disjoint cycles with the given lengths."""
    lengths = list(cycle_lengths)
    if not lengths:
        raise LengthTooSmallError("need at least one cycle length")
    return disjoint_union(cycle(l) for l in lengths)


def b_graph(k: int) -> Graph:
    """Blocker graph B_k.

    Even k: K_{k+1} with k(k+1)/2 edges.  Odd k: k+2 vertices whose
    complement is a 3-vertex path centered at vertex k+1 plus a perfect
    matching on vertices 0..k-2; this leaves vertex k+1 with degree k-1 and
    every other vertex with degree k, for (k^2+2k-1)/2 edges total.
    """
    if k < 2:
        raise KTooSmallError(f"b_graph needs k >= 2, got {k}")
    if k % 2 == 0:
        return complete(k + 1)
    nv = k + 2
    comp = {(k - 1, k + 1), (k, k + 1)}
    comp |= {(2 * i, 2 * i + 1) for i in range((k - 1) // 2)}
    pairs = [
        (u, v)
        for u in range(nv)
        for v in range(u + 1, nv)
        if (u, v) not in comp
    ]
    return build_graph(nv, pairs)


def b_prime_graph(k: int) -> Graph:
    """Two disjoint copies of B_k joined by an edge between their
    degree-(k-1) vertices; k-regular on 2k+4 vertices.  Odd k only."""
    if k % 2 == 0:
        raise KEvenError("b_prime_graph is defined for odd k")
    if k < 3:
        raise KTooSmallError(f"b_prime_graph needs k >= 3, got {k}")
    base = b_graph(k)
    shift = k + 2
    pairs = list(base.edges)
    pairs += [(u + shift, v + shift) for u, v in base.edges]
    pairs.append((k + 1, shift + k + 1))
    return build_graph(2 * shift, pairs)


def circulant(n: int, k: int) -> Graph:
    """k-regular circulant: offsets 1..floor(k/2), plus n/2 when k is odd.

    Needs n > k, and even n when k is odd.  Deterministic filler for
    regular-graph constructions.
    """
    if n <= k:
        raise PreconditionViolatedError(f"circulant needs n > k ({n} <= {k})")
    if k % 2 == 1 and n % 2 == 1:
        raise PreconditionViolatedError("odd k needs even n")
    pairs = set()
    for d in range(1, k // 2 + 1):
        for i in range(n):
            j = (i + d) % n
            pairs.add((min(i, j), max(i, j)))
    if k % 2 == 1:
        for i in range(n // 2):
            pairs.add((i, i + n // 2))
    g = build_graph(n, sorted(pairs))
    if g.regular_degree() != k:
        raise GenerationFailedError(f"circulant({n},{k}) is not {k}-regular")
    return g


def bk_containing_regular(n: int, k: int, seed: int | None = None) -> Graph:
    """k-regular graph on n vertices containing B_k as a subgraph.

    Disjoint union of B_k (even k, needs n >= 2k+2) or B'_k (odd k, needs
    n >= 3k+5) with a k-regular graph on the remaining vertices.  The filler
    is a circulant by default; pass a seed to use the pairing model instead.
    """
    if n * k % 2 != 0:
        raise PreconditionViolatedError("nk must be even")
    if k % 2 == 0:
        if n < 2 * k + 2:
            raise PreconditionViolatedError(f"even k needs n >= {2 * k + 2}")
        base = b_graph(k)
    else:
        if n < 3 * k + 5:
            raise PreconditionViolatedError(f"odd k needs n >= {3 * k + 5}")
        base = b_prime_graph(k)
    rest = n - base.vertex_count
    filler = random_regular(rest, k, seed) if seed is not None else circulant(rest, k)
    return disjoint_union([base, filler])


def random_regular(n: int, k: int, seed: int, max_tries: int = 10000) -> Graph:
    """Random simple k-regular graph via the pairing model with rejection.

    Deterministic for a given seed.  Rejection of samples with loops or
    repeated pairs keeps the output simple; the retry cap is generous for
    desk-scale k.
    """
    if n <= k:
        raise PreconditionViolatedError(f"need n > k, got n={n}, k={k}")
    if n * k % 2 != 0:
        raise PreconditionViolatedError("nk must be even")
    rng = random.Random(seed)
    stubs_template = [v for v in range(n) for _ in range(k)]
    for _ in range(max_tries):
        stubs = stubs_template[:]
        rng.shuffle(stubs)
        pairs = set()
        ok = True
        it = iter(stubs)
        for u, v in zip(it, it):
            if u == v:
                ok = False
                break
            key = (min(u, v), max(u, v))
            if key in pairs:
                ok = False
                break
            pairs.add(key)
        if ok:
            return build_graph(n, sorted(pairs))
    raise GenerationFailedError(f"no simple {k}-regular graph after {max_tries} tries")
