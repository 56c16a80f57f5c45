"""Simple undirected graphs with stable positional edge identity.

Edges are indexed 0..m-1 in construction order; every other module refers
to edges by index, so orderings are permutations of indices and edge sets
are frozensets of indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from collections import deque

from .errors import (
    DuplicateEdgeError,
    LoopEdgeError,
    SearchCapExceededError,
    VertexOutOfRangeError,
)

EdgeSet = frozenset  # indices into Graph.edges


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  Construct through :func:`build_graph`."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    _incident: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        seen = {}
        normalized = []
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge {i} = {{{u},{v}}} outside 0..{n - 1}")
            if u == v:
                raise LoopEdgeError(f"edge {i} is a loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"edge {i} duplicates edge {seen[key]}: {key}")
            seen[key] = i
            normalized.append(key)
        incident = [[] for _ in range(n)]
        for i, (u, v) in enumerate(normalized):
            incident[u].append(i)
            incident[v].append(i)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_incident", tuple(tuple(es) for es in incident))
        object.__setattr__(self, "_index", seen)

    # basic queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.vertex_count)))

    def max_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return max(self.degree(v) for v in range(self.vertex_count))

    def index_of(self, u: int, v: int) -> int:
        """Edge index of pair {u, v}; KeyError if absent."""
        return self._index[(min(u, v), max(u, v))]

    def has_pair(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edges_adjacent(self, e: int, f: int) -> bool:
        """True when distinct edges e and f share a vertex."""
        if e == f:
            return False
        a, b = self.edges[e]
        c, d = self.edges[f]
        return a == c or a == d or b == c or b == d

    def regular_degree(self) -> int | None:
        """k if the graph is k-regular, else None."""
        if self.vertex_count == 0:
            return None
        k = self.degree(0)
        if all(self.degree(v) == k for v in range(self.vertex_count)):
            return k
        return None


def build_graph(n: int, pairs) -> Graph:
    """Build a simple graph on vertices 0..n-1 with the given edge pairs.

    Pair order fixes the edge indexing.  Raises LoopEdgeError,
    DuplicateEdgeError or VertexOutOfRangeError on bad input.
    """
    return Graph(n, tuple(tuple(p) for p in pairs))


def is_matching(g: Graph, s) -> bool:
    """True iff no two edges of ``s`` share a vertex."""
    used = set()
    for e in s:
        u, v = g.edges[e]
        if u in used or v in used:
            return False
        used.add(u)
        used.add(v)
    return True


def adjacent_edges(g: Graph, e: int) -> EdgeSet:
    """All edges sharing a vertex with e, excluding e itself."""
    u, v = g.edges[e]
    out = set(g.incident_edges(u)) | set(g.incident_edges(v))
    out.discard(e)
    return frozenset(out)


def covered_vertices(g: Graph, s) -> frozenset:
    """Vertices incident with at least one edge of ``s``."""
    out = set()
    for e in s:
        u, v = g.edges[e]
        out.add(u)
        out.add(v)
    return frozenset(out)


# -- maximum matching ----------------------------------------------------------
#
# Augmenting-path search with blossom contraction, O(n^3).  The brute-force
# version below doubles as an independent oracle for small instances.


def maximum_matching(g: Graph) -> EdgeSet:
    """One maximum matching, as a set of edge indices."""
    n = g.vertex_count
    adj = [[] for _ in range(n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)

    match = [-1] * n
    for u in range(n):  # cheap greedy start
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break

    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting(root):
        for i in range(n):
            used[i] = False
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom
                    cur = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the path ending at `to`
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)

    out = set()
    for u in range(n):
        v = match[u]
        if v > u:
            out.add(g.index_of(u, v))
    return frozenset(out)


def matching_number(g: Graph) -> int:
    """Size of a maximum matching (witness via :func:`maximum_matching`)."""
    return len(maximum_matching(g))


def matching_number_brute(g: Graph, cap: int = 16) -> int:
    """Exhaustive maximum-matching size for m <= cap edges.

    Independent of the augmenting-path code; used as a cross-check oracle.
    """
    m = g.m
    if m > cap:
        raise SearchCapExceededError(f"{m} edges exceeds brute-force cap {cap}")
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    best = 0

    def rec(i, used, count):
        nonlocal best
        if count > best:
            best = count
        if count + (m - i) <= best:
            return
        for j in range(i, m):
            if not masks[j] & used:
                rec(j + 1, used | masks[j], count + 1)

    rec(0, 0, 0)
    return best
