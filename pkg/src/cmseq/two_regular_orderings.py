"""Orderings of 2-regular graphs and of unions of two equal matchings.

The constructions here realize the tight bounds for 2-regular graphs:

* a single cycle of length L admits an ordering with every adjacent pair at
  cyclic distance floor((L-1)/2) or more: skip-by-two labels for odd L, a
  two-block interleaving for even L;
* two equal matchings whose union is a cycle or disjoint paths admit block
  orderings whose join reaches distance t-1, by a vertex-merge induction
  down to the even-cycle base case;
* any two disjoint equal matchings reach t-1 by repeatedly splitting off a
  balanced union of components;
* a 2-regular graph that does not contain exactly one 4-cycle admits a
  three-block ordering whose blocks are balanced matchings with a forward
  distance guarantee between consecutive blocks, giving cyclic distance at
  least floor(n/3); the excluded one-4-cycle case is handled by splicing
  the 4-cycle edges into the three blocks of the remainder.
"""
from __future__ import annotations

from .errors import (
    NotMatchingError,
    NotTwoRegularError,
    PreconditionViolatedError,
    SizeMismatchError,
    TooSmallError,
)
from .graphs import Graph, is_matching
from .orderings import EdgeOrdering, concat_all

# Internal edge records are (edge_id, u, v) triples.  Vertices are plain
# ints; merges introduce fresh synthetic ids above the host range.  Ids
# always refer to host-graph edges, so merged recursions need no un-mapping.


def _adjacency(rec0, rec1):
    adj: dict[int, list[tuple[int, int, int]]] = {}
    for cls, recs in enumerate((rec0, rec1)):
        for eid, u, v in recs:
            adj.setdefault(u, []).append((eid, cls, v))
            adj.setdefault(v, []).append((eid, cls, u))
    for v, inc in adj.items():
        if len(inc) > 2:
            raise NotMatchingError(f"vertex {v} covered more than twice in union")
    return adj


def _walk_from(adj, start, stop_at_start):
    """Walk a path/cycle component from ``start``; returns edge and class
    lists in traversal order."""
    edges, classes = [], []
    at = start
    prev_edge = None
    while True:
        step = None
        for eid, cls, other in sorted(adj[at]):
            if eid != prev_edge:
                step = (eid, cls, other)
                break
        if step is None:
            break
        eid, cls, nxt = step
        edges.append(eid)
        classes.append(cls)
        prev_edge = eid
        at = nxt
        if stop_at_start and at == start:
            break
    return edges, classes


def _component_list(rec0, rec1):
    """Components of the union of two matchings given as records.

    Each entry: dict(edges, classes, is_cycle, ends [(vertex, class)...],
    counts (per class), key).
    """
    adj = _adjacency(rec0, rec1)
    seen = set()
    comps = []
    for v0 in sorted(adj):
        if v0 in seen:
            continue
        verts = set()
        stack = [v0]
        while stack:
            v = stack.pop()
            if v in verts:
                continue
            verts.add(v)
            for _, _, other in adj[v]:
                if other not in verts:
                    stack.append(other)
        seen |= verts
        ends = sorted(v for v in verts if len(adj[v]) == 1)
        is_cycle = not ends
        start = ends[0] if ends else min(verts)
        edges, classes = _walk_from(adj, start, stop_at_start=is_cycle)
        comps.append(
            {
                "edges": edges,
                "classes": classes,
                "is_cycle": is_cycle,
                "ends": [(v, adj[v][0][1]) for v in ends],
                "counts": (classes.count(0), classes.count(1)),
                "key": min(verts),
            }
        )
    return comps


def _interleave_even_cycle(walk_edges, walk_classes):
    """Base case: a 2t-cycle alternating the two classes.

    Positions i and 2t-1-i receive label i in opposite classes, so that the
    joined ordering (class 0 block then class 1 block) keeps every adjacent
    pair at cyclic distance t-1 or t.
    """
    L = len(walk_edges)
    assert L % 2 == 0
    t = L // 2
    offset = 0 if walk_classes[0] == 0 else 1
    cyc = walk_edges[offset:] + walk_edges[:offset]
    seqs = [[None] * t, [None] * t]
    for i in range(t):
        j = i % 2
        seqs[j][i] = cyc[i]
        seqs[1 - j][i] = cyc[L - 1 - i]
    return seqs[0], seqs[1]


def _order_cycle_or_paths_records(rec0, rec1, next_vertex):
    """Merge induction for the cycle-or-paths case; returns (seq0, seq1)."""
    t = len(rec0)
    comps = _component_list(rec0, rec1)
    cycles = [c for c in comps if c["is_cycle"]]
    if cycles:
        if len(comps) > 1:
            raise PreconditionViolatedError(
                "union must be a single cycle or a union of paths"
            )
        comp = comps[0]
        if len(comp["edges"]) != 2 * t:
            raise PreconditionViolatedError("cycle does not use all edges")
        return _interleave_even_cycle(comp["edges"], comp["classes"])

    # all paths: pick an end y with a class-0 edge and an end z with a
    # class-1 edge (different components when there are several), merge
    # them into one synthetic vertex and recurse
    y_cands = []
    z_cands = []
    for ci, comp in enumerate(comps):
        for v, cls in comp["ends"]:
            (y_cands if cls == 0 else z_cands).append((v, ci))
    pick = None
    if len(comps) >= 2:
        for y, ciy in sorted(y_cands):
            for z, ciz in sorted(z_cands):
                if ciy != ciz:
                    pick = (y, z)
                    break
            if pick:
                break
    else:
        if y_cands and z_cands:
            pick = (sorted(y_cands)[0][0], sorted(z_cands)[0][0])
    if pick is None:
        raise PreconditionViolatedError("no mergeable path ends found")
    y, z = pick
    x = next_vertex

    def substitute(recs, old):
        out = []
        done = False
        for eid, u, v in recs:
            if not done and (u == old or v == old):
                out.append((eid, x, v if u == old else u))
                done = True
            else:
                out.append((eid, u, v))
        assert done
        return out

    rec0b = substitute(rec0, y)
    rec1b = substitute(rec1, z)
    return _order_cycle_or_paths_records(rec0b, rec1b, next_vertex + 1)


def _records(g: Graph, edge_set):
    return [(e, *g.endpoints(e)) for e in sorted(edge_set)]


def order_cycle_or_paths(g: Graph, h0, h1) -> tuple[EdgeOrdering, EdgeOrdering]:
    """Block orderings of two equal matchings whose union is a single cycle
    or a union of vertex-disjoint paths; the join has cyclic distance at
    least t-1 between adjacent pairs (t = matching size, t >= 2)."""
    h0, h1 = frozenset(h0), frozenset(h1)
    if len(h0) != len(h1):
        raise SizeMismatchError(f"matching sizes differ: {len(h0)} vs {len(h1)}")
    if len(h0) < 2:
        raise PreconditionViolatedError("construction needs t >= 2")
    if h0 & h1:
        raise PreconditionViolatedError("matchings must be edge-disjoint")
    for name, h in (("h0", h0), ("h1", h1)):
        if not is_matching(g, h):
            raise NotMatchingError(f"{name} is not a matching")
    seq0, seq1 = _order_cycle_or_paths_records(
        _records(g, h0), _records(g, h1), g.vertex_count
    )
    return EdgeOrdering(g, tuple(seq0)), EdgeOrdering(g, tuple(seq1))


def order_two_matchings(g: Graph, h0, h1) -> tuple[EdgeOrdering, EdgeOrdering]:
    """Block orderings of two disjoint equal matchings whose join has cyclic
    distance at least t-1 between adjacent pairs; any component structure."""
    h0, h1 = frozenset(h0), frozenset(h1)
    if len(h0) != len(h1):
        raise SizeMismatchError(f"matching sizes differ: {len(h0)} vs {len(h1)}")
    if h0 & h1:
        raise PreconditionViolatedError("matchings must be edge-disjoint")
    for name, h in (("h0", h0), ("h1", h1)):
        if not is_matching(g, h):
            raise NotMatchingError(f"{name} is not a matching")

    def rec(a: frozenset, b: frozenset) -> tuple[list[int], list[int]]:
        t = len(a)
        if t == 0:
            return [], []
        if t == 1:
            return [min(a)], [min(b)]
        comps = _component_list(_records(g, a), _records(g, b))
        comps.sort(key=lambda c: c["key"])
        pick: list[dict] = []
        for comp in comps:
            if len(comp["edges"]) % 2 == 0:
                pick = [comp]
                break
        if not pick:
            # all components are odd paths; take the first balancing pair
            # (one class-0-heavy, one class-1-heavy)
            for i in range(len(comps)):
                for j in range(i + 1, len(comps)):
                    ca, cb = comps[i]["counts"], comps[j]["counts"]
                    if ca[0] + cb[0] == ca[1] + cb[1]:
                        pick = [comps[i], comps[j]]
                        break
                if pick:
                    break
        if not pick:
            raise AssertionError("no balanced split exists")
        dag_edges = set()
        for comp in pick:
            dag_edges |= set(comp["edges"])
        a_dag = frozenset(a & dag_edges)
        b_dag = frozenset(b & dag_edges)
        s = len(a_dag)
        assert s == len(b_dag)
        if s == 1:
            s0, s1 = [min(a_dag)], [min(b_dag)]
        else:
            s0, s1 = _order_cycle_or_paths_records(
                _records(g, a_dag), _records(g, b_dag), g.vertex_count
            )
        rest0, rest1 = rec(a - a_dag, b - b_dag)
        return list(s0) + rest0, list(s1) + rest1

    seq0, seq1 = rec(h0, h1)
    return EdgeOrdering(g, tuple(seq0)), EdgeOrdering(g, tuple(seq1))


# -- 2-regular graphs -----------------------------------------------------------


def cycle_components(g: Graph) -> list[list[int]]:
    """The cycles of a 2-regular graph as edge walks; error otherwise."""
    if g.regular_degree() != 2:
        raise NotTwoRegularError("graph is not 2-regular")
    seen = set()
    comps = []
    for v0 in range(g.vertex_count):
        if v0 in seen:
            continue
        walk = []
        at = v0
        prev_edge = None
        while True:
            step = None
            for e in sorted(g.incident_edges(at)):
                if e != prev_edge:
                    step = e
                    break
            u, v = g.endpoints(step)
            nxt = v if u == at else u
            walk.append(step)
            seen.add(at)
            prev_edge = step
            at = nxt
            if at == v0:
                break
        comps.append(walk)
    return comps


def _optimal_cycle_sequence(walk: list[int]) -> list[int]:
    """Edge sequence of a single cycle with cyclic distance floor((L-1)/2)."""
    L = len(walk)
    if L % 2 == 1:
        return [walk[(2 * j) % L] for j in range(L)]
    classes = [j % 2 for j in range(L)]
    s0, s1 = _interleave_even_cycle(walk, classes)
    return list(s0) + list(s1)


def _balanced_three(m: int) -> tuple[int, int, int]:
    m0 = -(-m // 3)
    m2 = m // 3
    return m0, m - m0 - m2, m2


def _three_blocks(g: Graph, comps: list[list[int]]) -> tuple[list[int], list[int], list[int]]:
    """Recursive three-block construction for a union of cycles containing
    either zero or at least two 4-cycles."""
    m = sum(len(c) for c in comps)
    sizes = _balanced_three(m)
    has_odd = any(len(c) % 2 == 1 for c in comps)

    if len(comps) == 1 or not has_odd:
        if len(comps) == 1:
            full = _optimal_cycle_sequence(comps[0])
        else:
            h0, h1 = set(), set()
            for walk in comps:
                for j, e in enumerate(walk):
                    (h0 if j % 2 == 0 else h1).add(e)
            o0, o1 = order_two_matchings(g, frozenset(h0), frozenset(h1))
            full = list(o0.seq) + list(o1.seq)
        b0 = full[: sizes[0]]
        b1 = full[sizes[0] : sizes[0] + sizes[1]]
        b2 = full[sizes[0] + sizes[1] :]
        for block in (b0, b1, b2):
            assert is_matching(g, block), "balanced block is not a matching"
        return b0, b1, b2

    by_key = sorted(comps, key=min)
    mod3 = [c for c in by_key if len(c) % 3 == 0]
    if mod3:
        inner = mod3[0]
        rest = [c for c in by_key if c is not inner]
        bp = _three_blocks(g, [inner])
        bq = _three_blocks(g, rest)
        return tuple(list(p) + list(q) for p, q in zip(bp, bq))

    odd = [c for c in by_key if len(c) % 2 == 1]
    outer = odd[0]  # odd cycle, length >= 5 and not divisible by 3
    mpp = len(outer)
    assert mpp >= 5
    rest = [c for c in by_key if c is not outer]
    bp = _three_blocks(g, rest)
    targets = [sizes[i] - len(bp[i]) for i in range(3)]
    limit = (mpp - 1) // 2
    assert all(0 <= t <= limit for t in targets), "block split out of range"
    mprime = m - mpp
    for j in range(3):
        # forward-distance guarantee for pairs inside the spliced cycle
        assert (m - mprime - 1) // 2 + len(bp[(j + 1) % 3]) >= sizes[j], (
            "composition inequality failed"
        )
    full2 = _optimal_cycle_sequence(outer)
    cut0 = targets[0]
    cut1 = targets[0] + targets[1]
    b2blocks = [full2[:cut0], full2[cut0:cut1], full2[cut1:]]
    for block in b2blocks:
        assert is_matching(g, block), "spliced cycle block is not a matching"
    return tuple(list(p) + list(q) for p, q in zip(bp, b2blocks))


def order_no_single_4cycle(g: Graph) -> tuple[EdgeOrdering, EdgeOrdering, EdgeOrdering]:
    """Three balanced matching blocks for a 2-regular graph without exactly
    one 4-cycle.

    The concatenated ordering has every pair of adjacent edges at cyclic
    distance at least floor(n/3); moreover the forward distance from a
    block-j edge to an adjacent block-(j+1) edge is at least the size of
    block j.
    """
    comps = cycle_components(g)
    if sum(1 for c in comps if len(c) == 4) == 1:
        raise PreconditionViolatedError("graph contains exactly one 4-cycle")
    b0, b1, b2 = _three_blocks(g, comps)
    return (
        EdgeOrdering(g, tuple(b0)),
        EdgeOrdering(g, tuple(b1)),
        EdgeOrdering(g, tuple(b2)),
    )


def order_two_regular(g: Graph) -> EdgeOrdering:
    """Ordering of any 2-regular graph on n >= 6 vertices with cyclic
    distance at least floor(n/3) between adjacent edges."""
    comps = cycle_components(g)
    n = g.vertex_count
    if n < 6:
        raise TooSmallError("need n >= 6")
    four = [c for c in comps if len(c) == 4]
    if len(four) != 1:
        return concat_all(order_no_single_4cycle(g))

    # exactly one 4-cycle: splice its edges into the blocks of the rest
    fc = four[0]
    e0, e1, e2, e3 = fc  # walk order: {e0,e2} and {e1,e3} are matchings
    rest = [c for c in comps if c is not fc]
    bp0, bp1, bp2 = _three_blocks(g, rest)
    mprime = len(bp0) + len(bp1) + len(bp2)
    if mprime % 3 in (0, 1):
        seq = bp0 + [e0] + bp1 + [e2] + bp2 + [e1, e3]
    else:
        estar = bp1[-1]
        seq = bp0 + [e0] + bp1[:-1] + [e2, estar] + bp2 + [e1, e3]
    return EdgeOrdering(g, tuple(seq))
