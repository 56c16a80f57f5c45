"""Ordering assembly and certified lower bounds.

Builds cyclic orderings whose matching-window guarantees follow from a
layered partition: per class i the layout is Z_i, Y_i, X_i, with the Y/Z
orderings paired across consecutive classes and the X orderings sorted
against the following Y block.  Every public entry point returns a
CmsCertificate whose measured value is recomputed from the ordering alone,
so verification never trusts the construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .coloring import equitable_decomposition, exact_chromatic_index
from .errors import (
    NotMatchingError,
    PartitionInvalidError,
    PreconditionViolatedError,
    SearchCapExceededError,
)
from .graphs import Graph, is_matching
from .orderings import EdgeOrdering, cms_of_ordering, concat, concat_all, make_ordering
from .partitioning import (
    XyzPartition,
    extend_to_partition,
    required_y,
    semipartition_class1,
    semipartition_class2,
    semipartition_random,
    verify_partition,
)
from .two_regular_orderings import order_two_matchings, order_two_regular


@dataclass(frozen=True)
class CmsCertificate:
    """A constructed ordering together with its claimed and measured bound.

    ``verified`` means the measured value was recomputed from the ordering,
    the ordering uses every edge exactly once, and measured >= claimed.
    """

    n: int
    m: int
    k: int | None
    c: int | None
    method: str
    parameters: dict
    ordering: EdgeOrdering
    claimed_bound: int
    measured_cms: int
    verified: bool


def _certify(
    g: Graph,
    ordering: EdgeOrdering,
    claimed: int,
    method: str,
    parameters: dict,
    c: int | None = None,
) -> CmsCertificate:
    measured = cms_of_ordering(ordering)
    complete = len(ordering.seq) == g.m
    return CmsCertificate(
        n=g.vertex_count,
        m=g.m,
        k=g.regular_degree(),
        c=c,
        method=method,
        parameters=dict(parameters),
        ordering=ordering,
        claimed_bound=claimed,
        measured_cms=measured,
        verified=complete and measured >= claimed,
    )


def verify_certificate(cert: CmsCertificate) -> bool:
    """Re-check a certificate from its ordering alone."""
    o = cert.ordering
    g = o.graph
    if len(o.seq) != g.m or set(o.seq) != set(range(g.m)):
        return False
    measured = cms_of_ordering(o)
    return measured == cert.measured_cms and measured >= cert.claimed_bound


# -- matching-against-fixed-ordering constructions ---------------------------


def _alpha_sorted(x_set, y_ordering: EdgeOrdering) -> tuple[int, ...]:
    """Edges of x_set sorted by the smallest label of an adjacent edge in
    the fixed ordering (unadjacent edges last, ties by edge index)."""
    g = y_ordering.graph
    y_edges = y_ordering.edge_set()

    def alpha(e: int):
        best = math.inf
        for v in g.endpoints(e):
            for f in g.incident_edges(v):
                if f != e and f in y_edges:
                    best = min(best, y_ordering.label(f))
        return best

    return tuple(sorted(x_set, key=lambda e: (alpha(e), e)))


def order_against_fixed(x_set, y_ordering: EdgeOrdering) -> EdgeOrdering:
    """Order a matching against a fixed matching ordering.

    The join of the result with ``y_ordering`` has every adjacent pair at
    forward distance at least ceil(|x_set|/2).
    """
    g = y_ordering.graph
    x_set = frozenset(x_set)
    if not is_matching(g, x_set):
        raise NotMatchingError("x_set is not a matching")
    if not is_matching(g, y_ordering.seq):
        raise NotMatchingError("fixed ordering is not over a matching")
    if x_set & y_ordering.edge_set():
        raise PreconditionViolatedError("edge sets must be disjoint")
    return make_ordering(g, _alpha_sorted(x_set, y_ordering))


def order_with_y2_last(x_set, y_ordering: EdgeOrdering) -> EdgeOrdering:
    """Variant for fixed orderings whose doubly-adjacent edges come last.

    With y1 (y2) the number of fixed-ordering edges adjacent to exactly one
    (two) edges of x_set, the join reaches forward distance at least
    min(x, x + y - y1 - 2*y2).  The y2 edges must occupy the final labels of
    ``y_ordering``.
    """
    g = y_ordering.graph
    x_set = frozenset(x_set)
    if not is_matching(g, x_set):
        raise NotMatchingError("x_set is not a matching")
    if x_set & y_ordering.edge_set():
        raise PreconditionViolatedError("edge sets must be disjoint")
    x_vertices = {}
    for e in x_set:
        for v in g.endpoints(e):
            x_vertices[v] = e
    doubly = set()
    for f in y_ordering.seq:
        hits = sum(1 for v in g.endpoints(f) if v in x_vertices)
        if hits == 2:
            doubly.add(f)
    tail = set(y_ordering.seq[len(y_ordering.seq) - len(doubly):])
    if tail != doubly:
        raise PreconditionViolatedError(
            "doubly-adjacent edges must occupy the last labels"
        )
    return make_ordering(g, _alpha_sorted(x_set, y_ordering))


# -- partition-driven assembly ---------------------------------------------


def _require_valid(p: XyzPartition):
    bad = [v for v in verify_partition(p) if not v.passed]
    if bad:
        detail = "; ".join(f"{v.name}: {v.witness}" for v in bad)
        raise PartitionInvalidError(f"partition fails {detail}")


def build_yz_orderings(p: XyzPartition) -> tuple[list[EdgeOrdering], list[EdgeOrdering]]:
    """Per class: orderings of Y_i and Z_i such that the join of Y_i with
    Z_{i+1} reaches forward distance y-1 and the doubly-blocked edges of
    Y_i occupy its final labels."""
    _require_valid(p)
    g = p.decomposition.graph
    maps = p.decomposition.vertex_maps()
    c = p.c
    ly: list = [None] * c
    lz: list = [None] * c
    for i in range(c):
        nxt = (i + 1) % c
        prev = (i - 1) % c
        y_prime = sorted(
            e
            for e in p.y_sets[i]
            if sum(
                1
                for v in g.endpoints(e)
                if maps[prev].get(v) in p.x_sets[prev]
            )
            == 2
        )
        yp = len(y_prime)
        idx_of = {e: j for j, e in enumerate(y_prime)}

        # Z' covers every Z_{i+1} edge adjacent to a doubly-blocked edge,
        # each placed at the slot of its last such neighbor
        z_next = p.z_sets[nxt]
        slot: list = [None] * yp
        used = set()
        for f in sorted(z_next):
            nbrs = [
                idx_of[maps[i].get(v)]
                for v in g.endpoints(f)
                if maps[i].get(v) in idx_of
            ]
            if nbrs:
                j = max(nbrs)
                assert slot[j] is None, "two blockers share a slot"
                slot[j] = f
                used.add(f)
        fill = iter(sorted(z_next - used))
        z_prime = []
        for j in range(yp):
            if slot[j] is None:
                slot[j] = next(fill)
            z_prime.append(slot[j])
        z_prime_set = set(z_prime)

        y_rest = sorted(p.y_sets[i] - set(y_prime))
        z_rest = sorted(z_next - z_prime_set)
        t = len(y_rest)
        assert len(z_rest) >= t, "Z block too small for pairing"
        w_set = z_rest[:t]
        r_set = z_rest[t:]
        if t:
            o_y, o_w = order_two_matchings(g, frozenset(y_rest), frozenset(w_set))
            y_rest_seq, w_seq = list(o_y.seq), list(o_w.seq)
        else:
            y_rest_seq, w_seq = [], []

        ly[i] = make_ordering(g, y_rest_seq + y_prime)
        lz[nxt] = make_ordering(g, w_seq + r_set + z_prime)
    return ly, lz


def build_x_orderings(p: XyzPartition, ly: list[EdgeOrdering]) -> list[EdgeOrdering]:
    """Per class: an ordering of X_i whose join with the Y_{i+1} ordering
    reaches forward distance x, and whose join with the X_{i+1} ordering
    reaches x - y."""
    g = p.decomposition.graph
    maps = p.decomposition.vertex_maps()
    c = p.c
    x, y = p.x, p.y
    head_size = min(x, (2 * y) // 3)
    heads: list = [None] * c
    head_orderings: list = [None] * c
    for i in range(c):
        nxt = (i + 1) % c
        touching = set()
        y1 = y2 = 0
        for f in p.y_sets[nxt]:
            hits = [
                maps[i].get(v)
                for v in g.endpoints(f)
                if maps[i].get(v) in p.x_sets[i]
            ]
            touching.update(hits)
            if len(hits) == 1:
                y1 += 1
            elif len(hits) == 2:
                y2 += 1
        assert y1 + 2 * y2 <= 2 * x - p.w, "coverage bound violated"
        assert 3 * (2 * x - p.w) <= 2 * y, "size arithmetic violated"
        head = set(touching)
        for e in sorted(p.x_sets[i]):
            if len(head) >= head_size:
                break
            head.add(e)
        assert len(head) == head_size
        heads[i] = frozenset(head)
        head_orderings[i] = order_with_y2_last(heads[i], ly[nxt])

    if x <= (2 * y) // 3:
        return list(head_orderings)
    out = []
    for i in range(c):
        nxt = (i + 1) % c
        tail = p.x_sets[i] - heads[i]
        tail_ordering = order_against_fixed(tail, head_orderings[nxt])
        out.append(concat(head_orderings[i], tail_ordering))
    return out


def assemble_from_partition(
    p: XyzPartition, method: str = "partition", parameters: dict | None = None
) -> CmsCertificate:
    """Concatenate Z_i, Y_i, X_i orderings over all classes and certify the
    bound x + y - 1."""
    ly, lz = build_yz_orderings(p)
    lx = build_x_orderings(p, ly)
    blocks = []
    for i in range(p.c):
        blocks.extend((lz[i], ly[i], lx[i]))
    ell = concat_all(blocks)
    params = dict(parameters or {})
    params.update({"x": p.x, "y": p.y, "w": p.w})
    claimed = max(0, p.x + p.y - 1)
    return _certify(
        p.decomposition.graph, ell, claimed, method, params, c=p.c
    )


# -- certified pipelines -----------------------------------------------------


def two_regular_certificate(g: Graph) -> CmsCertificate:
    """Certificate for a 2-regular graph at the tight bound floor(n/3)."""
    ordering = order_two_regular(g)
    return _certify(g, ordering, g.vertex_count // 3, "two_regular", {}, c=None)


def _chromatic_index_with_fallback(g: Graph, cap: int) -> tuple[int, bool]:
    """(chromatic index, exact?) with a graceful cap fallback to Delta+1."""
    try:
        c, _ = exact_chromatic_index(g, cap=cap)
        return c, True
    except SearchCapExceededError:
        return g.max_degree() + 1, False


def general_lower_bound_ordering(g: Graph, chromatic_cap: int = 40) -> CmsCertificate:
    """Certificate at floor(m/2c) - 1 for any graph, where c is the
    chromatic index when computable under the cap and Delta+1 otherwise.

    Splits each class of an equitable c-decomposition into a head and a
    tail of t = floor(m/2c) edges and pairs each tail with the next class's
    head so that consecutive classes meet at distance t-1 or more.
    """
    m = g.m
    if m == 0:
        return _certify(g, make_ordering(g, ()), 0, "general_lower", {"c": 0, "t": 0})
    if is_matching(g, range(m)):
        ordering = make_ordering(g, range(m))
        return _certify(
            g, ordering, max(0, m // 2 - 1), "general_lower", {"c": 1, "t": m // 2}, c=1
        )
    c, exact = _chromatic_index_with_fallback(g, chromatic_cap)
    t = m // (2 * c)
    params = {"c": c, "t": t, "chromatic_index_exact": exact}
    if t <= 0:
        ordering = make_ordering(g, range(m))
        return _certify(g, ordering, 0, "general_lower", params, c=c)
    d = equitable_decomposition(g, c, cap=chromatic_cap)
    heads, mids, tails = [], [], []
    for cls in d.classes:
        edges = sorted(cls)
        heads.append(edges[:t])
        mids.append(edges[t : len(edges) - t])
        tails.append(edges[len(edges) - t :])
    head_seq: list = [None] * c
    tail_seq: list = [None] * c
    for i in range(c):
        nxt = (i + 1) % c
        o_tail, o_head = order_two_matchings(
            g, frozenset(tails[i]), frozenset(heads[nxt])
        )
        tail_seq[i] = list(o_tail.seq)
        head_seq[nxt] = list(o_head.seq)
    seq: list[int] = []
    for i in range(c):
        seq.extend(head_seq[i])
        seq.extend(mids[i])
        seq.extend(tail_seq[i])
    return _certify(g, make_ordering(g, seq), t - 1, "general_lower", params, c=c)


def regular_certificate(
    g: Graph,
    method: str = "explicit",
    alpha=None,
    seed: int | None = None,
    retries: int = 64,
    chromatic_cap: int = 40,
    x: int | None = None,
) -> CmsCertificate:
    """Layered-partition certificate for a k-regular graph, k >= 3.

    The explicit method picks x = floor((nk - 8c)(c - 1) / (2c(4c - 7)))
    (overridable) and grows a semipartition deterministically; the
    randomized method samples vertices with probability alpha (default 1/7)
    under the given seed and retries until the measured (x, w) pair is
    workable.  Needs n >= 6(k+1).
    """
    k = g.regular_degree()
    if k is None or k < 3:
        raise PreconditionViolatedError("need a k-regular graph with k >= 3")
    n = g.vertex_count
    if n < 6 * (k + 1):
        raise PreconditionViolatedError(f"need n >= {6 * (k + 1)}")
    c, exact = _chromatic_index_with_fallback(g, chromatic_cap)
    d = equitable_decomposition(g, c, cap=chromatic_cap)

    if method == "explicit":
        if x is None:
            x = (n * k - 8 * c) * (c - 1) // (2 * c * (4 * c - 7))
        params = {"c": c, "chromatic_index_exact": exact}
        if x < 1:
            ordering = make_ordering(g, range(g.m))
            params["degenerate"] = True
            return _certify(g, ordering, 0, "explicit_degenerate", params, c=c)
        if c == k:
            semi = semipartition_class1(d, x)
            tag = "explicit_class1"
        else:
            semi = semipartition_class2(d, x)
            tag = "explicit_class2"
        y = required_y(semi.x, semi.w)
        assert semi.x + 2 * y <= g.m // c, "size gate failed for the chosen x"
        part = extend_to_partition(semi)
        return assemble_from_partition(part, method=tag, parameters=params)

    if method == "randomized":
        if seed is None:
            raise PreconditionViolatedError("randomized method needs a seed")
        if alpha is None:
            alpha = Fraction(1, 7)
        semi = semipartition_random(d, alpha, seed, retries=retries)
        part = extend_to_partition(semi)
        params = {
            "c": c,
            "chromatic_index_exact": exact,
            "alpha": str(Fraction(alpha)),
            "seed": seed,
        }
        return assemble_from_partition(part, method="randomized", parameters=params)

    raise PreconditionViolatedError(f"unknown method {method!r}")
