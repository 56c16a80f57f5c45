"""Cyclic edge orderings and their matching-sequence metrics.

An ordering assigns labels 0..m-1 to a set of edges of a host graph.  It
may cover all edges or just a subset, so the same type serves for full
orderings, block orderings, and suborderings.  Concatenation shifts the
second operand's labels, matching the usual join of orderings of
edge-disjoint graphs realized inside their union.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    EdgeNotInGraphError,
    OverlappingEdgesError,
    SameEdgeError,
)
from .graphs import Graph


@dataclass(frozen=True)
class EdgeOrdering:
    """Bijection between an edge subset of ``graph`` and labels 0..m-1.

    ``seq[label]`` is the edge carrying that label.
    """

    graph: Graph
    seq: tuple[int, ...]
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pos = {}
        m = self.graph.m
        for lbl, e in enumerate(self.seq):
            if not 0 <= e < m:
                raise EdgeNotInGraphError(f"edge index {e} outside 0..{m - 1}")
            if e in pos:
                raise OverlappingEdgesError(f"edge {e} appears twice in ordering")
            pos[e] = lbl
        object.__setattr__(self, "seq", tuple(self.seq))
        object.__setattr__(self, "_pos", pos)

    @property
    def m(self) -> int:
        return len(self.seq)

    def label(self, e: int) -> int:
        try:
            return self._pos[e]
        except KeyError:
            raise EdgeNotInGraphError(f"edge {e} not in ordering") from None

    def edge_at(self, label: int) -> int:
        return self.seq[label % len(self.seq)]

    def edge_set(self) -> frozenset:
        return frozenset(self.seq)


def make_ordering(graph: Graph, seq) -> EdgeOrdering:
    return EdgeOrdering(graph, tuple(seq))


def full_ordering(graph: Graph, seq=None) -> EdgeOrdering:
    """Ordering of all edges; identity order unless ``seq`` is given."""
    if seq is None:
        seq = range(graph.m)
    o = EdgeOrdering(graph, tuple(seq))
    if o.m != graph.m:
        raise EdgeNotInGraphError("full ordering must use every edge exactly once")
    return o


def forward_distance(o: EdgeOrdering, e: int, e2: int) -> int:
    """Steps from e's label to e2's label, modulo m; in [1, m-1]."""
    if e == e2:
        raise SameEdgeError("forward distance needs two distinct edges")
    return (o.label(e2) - o.label(e)) % o.m


def distance(o: EdgeOrdering, e: int, e2: int) -> int:
    """min of the two forward distances; at most floor(m/2)."""
    if e == e2:
        raise SameEdgeError("distance needs two distinct edges")
    d = (o.label(e2) - o.label(e)) % o.m
    return min(d, o.m - d)


def _labels_by_vertex(o: EdgeOrdering):
    """vertex -> sorted labels of ordering edges incident with it."""
    by_vertex: dict[int, list[int]] = {}
    g = o.graph
    for lbl, e in enumerate(o.seq):
        u, v = g.endpoints(e)
        by_vertex.setdefault(u, []).append(lbl)
        by_vertex.setdefault(v, []).append(lbl)
    return by_vertex


def cms_of_ordering(o: EdgeOrdering) -> int:
    """Largest s such that every cyclic window of s edges is a matching.

    Equals the minimum cyclic distance over adjacent edge pairs; m when the
    ordered edges form a matching, 0 for the empty ordering.
    """
    m = o.m
    if m == 0:
        return 0
    best = m
    for labels in _labels_by_vertex(o).values():
        if len(labels) < 2:
            continue
        labels.sort()
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                d = labels[j] - labels[i]
                d = min(d, m - d)
                if d < best:
                    best = d
    return best


def ms_of_ordering(o: EdgeOrdering) -> int:
    """Non-cyclic variant: minimum forward gap over adjacent pairs.

    m for a matching, 0 for the empty ordering.  Always >= cms.
    """
    m = o.m
    if m == 0:
        return 0
    best = m
    for labels in _labels_by_vertex(o).values():
        if len(labels) < 2:
            continue
        labels.sort()
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                d = labels[j] - labels[i]
                if d < best:
                    best = d
    return best


def concat(o1: EdgeOrdering, o2: EdgeOrdering) -> EdgeOrdering:
    """Join two orderings over disjoint edge sets of the same host graph.

    Labels of o1 are kept; labels of o2 are shifted by |o1|.
    """
    if o1.graph is not o2.graph and o1.graph != o2.graph:
        raise OverlappingEdgesError("orderings live on different host graphs")
    if o1.edge_set() & o2.edge_set():
        raise OverlappingEdgesError("orderings share edges")
    return EdgeOrdering(o1.graph, o1.seq + o2.seq)


def concat_all(orderings) -> EdgeOrdering:
    orderings = list(orderings)
    if not orderings:
        raise ValueError("need at least one ordering")
    out = orderings[0]
    for o in orderings[1:]:
        out = concat(out, o)
    return out


def subordering(o: EdgeOrdering, sub) -> EdgeOrdering:
    """Restriction of the ordering to ``sub``, preserving relative order."""
    sub = frozenset(sub)
    missing = sub - o.edge_set()
    if missing:
        raise EdgeNotInGraphError(f"edges {sorted(missing)} not in ordering")
    return EdgeOrdering(o.graph, tuple(e for e in o.seq if e in sub))


def rotate(o: EdgeOrdering, r: int) -> EdgeOrdering:
    """Relabel l(e) -> l(e) + r (mod m)."""
    m = o.m
    if m == 0:
        return o
    r %= m
    return EdgeOrdering(o.graph, o.seq[-r:] + o.seq[:-r] if r else o.seq)


def reflect(o: EdgeOrdering) -> EdgeOrdering:
    """Relabel l(e) -> -l(e) (mod m)."""
    if o.m == 0:
        return o
    return EdgeOrdering(o.graph, (o.seq[0],) + tuple(reversed(o.seq[1:])))
