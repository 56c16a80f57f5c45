"""Proper edge colorings and equitable matching decompositions.

Three layers: a fan-recoloring algorithm that always succeeds with
max-degree-plus-one colors, an exact backtracking decision between Delta
and Delta+1 for desk-scale graphs, and an alternating-path rebalancer that
turns any proper coloring into an equitable one (class sizes within 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .errors import (
    NotMatchingError,
    SearchCapExceededError,
    TooFewClassesError,
)
from .graphs import Graph, is_matching


@dataclass(frozen=True)
class MatchingDecomposition:
    """Partition of E(G) into matchings H_0..H_{t-1}."""

    graph: Graph
    classes: tuple[frozenset, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in self.classes))
        seen = set()
        for i, cls in enumerate(self.classes):
            if not is_matching(self.graph, cls):
                raise NotMatchingError(f"class {i} is not a matching")
            if seen & cls:
                raise NotMatchingError(f"class {i} overlaps an earlier class")
            seen |= cls
        if seen != set(range(self.graph.m)):
            raise NotMatchingError("classes do not cover every edge exactly once")

    @property
    def t(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def is_equitable(self) -> bool:
        sizes = self.sizes()
        return not sizes or max(sizes) - min(sizes) <= 1

    def vertex_maps(self) -> list[dict]:
        """Per class: vertex -> its unique edge of that class (if any)."""
        maps = []
        for cls in self.classes:
            d = {}
            for e in cls:
                u, v = self.graph.endpoints(e)
                d[u] = e
                d[v] = e
            maps.append(d)
        return maps


def _classes_from_colors(g: Graph, color: list[int]) -> MatchingDecomposition:
    ncolors = max(color) + 1 if color else 0
    classes = [set() for _ in range(ncolors)]
    for e, c in enumerate(color):
        classes[c].add(e)
    return MatchingDecomposition(g, tuple(frozenset(c) for c in classes if c))


def edge_color_delta_plus_one(g: Graph) -> MatchingDecomposition:
    """Proper edge coloring with at most Delta+1 classes by fan recoloring.

    Maintains, for the current partial coloring, a maximal fan of the
    uncolored edge's endpoint; a single alternating-path inversion then
    frees a color for some fan prefix rotation.  Linear passes per edge.
    """
    m = g.m
    if m == 0:
        return MatchingDecomposition(g, ())
    delta = g.max_degree()
    ncolors = delta + 1
    color = [-1] * m
    # at[v][c] = edge of color c incident with v
    at = [dict() for _ in range(g.vertex_count)]

    def free_color(v: int) -> int:
        for c in range(ncolors):
            if c not in at[v]:
                return c
        raise AssertionError("no free color at vertex")

    def other(e: int, v: int) -> int:
        a, b = g.endpoints(e)
        return b if a == v else a

    def set_color(e: int, c: int):
        u, v = g.endpoints(e)
        old = color[e]
        if old != -1:
            del at[u][old]
            del at[v][old]
        color[e] = c
        if c != -1:
            at[u][c] = e
            at[v][c] = e

    for e0 in range(m):
        eu, ev = g.endpoints(e0)
        shared = next(
            (c for c in range(ncolors) if c not in at[eu] and c not in at[ev]), None
        )
        if shared is not None:
            set_color(e0, shared)
            continue
        u = eu
        # maximal fan of u starting at the uncolored edge e0
        fan = [other(e0, u)]
        fan_edges = [e0]
        seen = {fan[0]}
        while True:
            tip = fan[-1]
            nxt = None
            for c in range(ncolors):
                if c in at[tip]:
                    continue
                e = at[u].get(c)
                if e is not None and other(e, u) not in seen:
                    nxt = e
                    break
            if nxt is None:
                break
            w = other(nxt, u)
            fan.append(w)
            fan_edges.append(nxt)
            seen.add(w)

        c = free_color(u)
        d = free_color(fan[-1])
        if c != d:
            # invert the alternating (d, c) path starting at u
            path = []
            cur, col = u, d
            while True:
                e = at[cur].get(col)
                if e is None:
                    break
                path.append(e)
                cur = other(e, cur)
                col = c if col == d else d
            # recolor in two passes so intermediate states stay consistent
            newcols = [c if color[e] == d else d for e in path]
            for e in path:
                set_color(e, -1)
            for e, nc in zip(path, newcols):
                set_color(e, nc)

        # shortest fan prefix that is still a fan and whose tip misses d
        w_idx = None
        for j in range(len(fan)):
            if j > 0 and color[fan_edges[j]] in at[fan[j - 1]]:
                break  # prefix beyond j-1 is no longer a fan
            if d not in at[fan[j]]:
                w_idx = j
                break
        if w_idx is None:
            raise AssertionError("fan rotation target missing")

        # rotate: edge i takes edge i+1's color, tip edge takes d
        shifted = [color[fan_edges[i + 1]] for i in range(w_idx)]
        for i in range(w_idx + 1):
            if color[fan_edges[i]] != -1:
                set_color(fan_edges[i], -1)
        for i in range(w_idx):
            set_color(fan_edges[i], shifted[i])
        set_color(fan_edges[w_idx], d)

    assert all(c != -1 for c in color)
    return _classes_from_colors(g, color)


def _bfs_edge_order(g: Graph) -> list[int]:
    """Edges ordered so each one touches an earlier edge when possible."""
    order = []
    seen_edges = set()
    seen_vertices = set()
    for start in range(g.vertex_count):
        if start in seen_vertices or g.degree(start) == 0:
            continue
        queue = deque([start])
        seen_vertices.add(start)
        while queue:
            v = queue.popleft()
            for e in g.incident_edges(v):
                if e in seen_edges:
                    continue
                seen_edges.add(e)
                order.append(e)
                w = g.endpoints(e)[0] if g.endpoints(e)[1] == v else g.endpoints(e)[1]
                if w not in seen_vertices:
                    seen_vertices.add(w)
                    queue.append(w)
    return order


def _try_edge_coloring(g: Graph, k: int) -> list[int] | None:
    """Backtracking search for a proper k-edge-coloring; None if none exists.

    Symmetry breaking: a new color may be used only if all smaller colors
    have appeared already.
    """
    m = g.m
    order = _bfs_edge_order(g)
    color = [-1] * m
    used_at = [0] * g.vertex_count  # bitmask of colors at each vertex

    def rec(i: int, max_used: int) -> bool:
        if i == m:
            return True
        e = order[i]
        u, v = g.endpoints(e)
        forbidden = used_at[u] | used_at[v]
        limit = min(max_used + 1, k)
        for c in range(limit):
            bit = 1 << c
            if forbidden & bit:
                continue
            color[e] = c
            used_at[u] |= bit
            used_at[v] |= bit
            if rec(i + 1, max(max_used, c + 1)):
                return True
            used_at[u] &= ~bit
            used_at[v] &= ~bit
            color[e] = -1
        return False

    return color[:] if rec(0, 0) else None


def exact_chromatic_index(g: Graph, cap: int = 40) -> tuple[int, MatchingDecomposition]:
    """Chromatic index (Delta or Delta+1) with a witness coloring.

    Backtracks on whether Delta colors suffice; only for m <= cap edges.
    """
    if g.m == 0:
        return 0, MatchingDecomposition(g, ())
    if g.m > cap:
        raise SearchCapExceededError(f"{g.m} edges exceeds search cap {cap}")
    delta = g.max_degree()
    if is_matching(g, range(g.m)):
        return 1, MatchingDecomposition(g, (frozenset(range(g.m)),))
    witness = _try_edge_coloring(g, delta)
    if witness is not None:
        return delta, _classes_from_colors(g, witness)
    decomp = edge_color_delta_plus_one(g)
    assert decomp.t == delta + 1
    return delta + 1, decomp


def equitable_decomposition(g: Graph, t: int, cap: int = 40) -> MatchingDecomposition:
    """Equitable matching decomposition into exactly t classes.

    Starts from a proper coloring with at most t classes (exact search when
    t equals Delta, capped at ``cap`` edges; fan recoloring otherwise) and
    repeatedly swaps along one alternating component between the largest and
    smallest class until all sizes agree within 1.
    """
    if t < 0 or (t == 0 and g.m > 0):
        raise TooFewClassesError(f"cannot decompose {g.m} edges into {t} matchings")
    if g.m == 0:
        return MatchingDecomposition(g, tuple(frozenset() for _ in range(t)))
    delta = g.max_degree()
    if t < delta:
        raise TooFewClassesError(f"t={t} is below the maximum degree {delta}")
    if t == delta:
        c, start = exact_chromatic_index(g, cap=cap)
        if c > t:
            raise TooFewClassesError(f"graph needs {c} classes, requested {t}")
    else:
        start = edge_color_delta_plus_one(g)

    classes = [set(cls) for cls in start.classes]
    classes += [set() for _ in range(t - len(classes))]

    vmap = [dict() for _ in range(t)]  # class -> vertex -> edge
    for i, cls in enumerate(classes):
        for e in cls:
            u, v = g.endpoints(e)
            vmap[i][u] = e
            vmap[i][v] = e

    def swap_component(a: int, b: int):
        """Flip classes a/b along one alternating component with more
        a-edges than b-edges."""
        seen = set()
        for e_start in sorted(classes[a]):
            if e_start in seen:
                continue
            # walk the path/cycle through e_start in the union of a and b
            comp = set()
            stack = [e_start]
            while stack:
                e = stack.pop()
                if e in comp:
                    continue
                comp.add(e)
                for v in g.endpoints(e):
                    for cls_id in (a, b):
                        f = vmap[cls_id].get(v)
                        if f is not None and f not in comp:
                            stack.append(f)
            seen |= comp
            na = len(comp & classes[a])
            nb = len(comp) - na
            if na > nb:
                # flip in two passes; interleaving removals with insertions
                # would clobber map entries at shared vertices
                moves = [(e, (a, b) if e in classes[a] else (b, a)) for e in comp]
                for e, (src, _) in moves:
                    classes[src].discard(e)
                    for v in g.endpoints(e):
                        if vmap[src].get(v) == e:
                            del vmap[src][v]
                for e, (_, dst) in moves:
                    classes[dst].add(e)
                    for v in g.endpoints(e):
                        vmap[dst][v] = e
                return
        raise AssertionError("no rebalancing component found")

    while True:
        sizes = [len(c) for c in classes]
        hi = max(range(t), key=lambda i: (sizes[i], -i))
        lo = min(range(t), key=lambda i: (sizes[i], i))
        if sizes[hi] - sizes[lo] <= 1:
            break
        swap_component(hi, lo)

    return MatchingDecomposition(g, tuple(frozenset(c) for c in classes))
