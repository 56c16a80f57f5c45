"""Layered edge partitions of regular graphs.

Given an equitable matching decomposition {H_i} of a k-regular graph, a
semipartition selects x edges X_i from each class so that for every i at
least w vertices are "i-covered": incident with an X_i edge and either
incident with an X_{i+1} edge or missing class i+1 entirely.  A full
partition refines each class into X_i, Y_i, Z_i layers satisfying six
properties (P1-P6) that make the layer-by-layer ordering of the sequencer
work out.  The y layer size is always y = ceil(3x - 3w/2).

Three semipartition constructions are provided: a greedy vertex-set growth
for class 1 graphs (w = x + floor((x-1)/(k-1))), an edge-set growth for
class 2 decompositions (w = x + floor((x-1)/k)), and seeded random vertex
sampling with measured (x, w) and a retry loop.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .coloring import MatchingDecomposition
from .errors import (
    GrowthStuckError,
    P1ViolatedError,
    PreconditionViolatedError,
    RetriesExhaustedError,
)


@dataclass(frozen=True)
class Semipartition:
    decomposition: MatchingDecomposition
    x_sets: tuple[frozenset, ...]
    x: int
    w: int

    def __post_init__(self):
        object.__setattr__(self, "x_sets", tuple(frozenset(s) for s in self.x_sets))
        classes = self.decomposition.classes
        if len(self.x_sets) != len(classes):
            raise PreconditionViolatedError("one X set per class required")
        for i, (xs, cls) in enumerate(zip(self.x_sets, classes)):
            if not xs <= cls:
                raise PreconditionViolatedError(f"X_{i} not inside class {i}")
            if len(xs) != self.x:
                raise PreconditionViolatedError(f"|X_{i}| != x")


@dataclass(frozen=True)
class XyzPartition:
    decomposition: MatchingDecomposition
    x_sets: tuple[frozenset, ...]
    y_sets: tuple[frozenset, ...]
    z_sets: tuple[frozenset, ...]
    x: int
    y: int
    w: int

    @property
    def c(self) -> int:
        return len(self.decomposition.classes)


def required_y(x: int, w: int) -> int:
    """y = ceil(3x - 3w/2)."""
    return 3 * x - (3 * w) // 2


def _covered(graph, vertex_maps, x_sets, i):
    """Vertices i-covered for the given X selection."""
    c = len(x_sets)
    nxt = (i + 1) % c
    out = set()
    for e in x_sets[i]:
        for v in graph.endpoints(e):
            f = vertex_maps[nxt].get(v)
            if f is None or f in x_sets[nxt]:
                out.add(v)
    return out


def i_covered_vertices(semi: Semipartition, i: int) -> frozenset:
    """The i-covered vertices of a semipartition."""
    maps = semi.decomposition.vertex_maps()
    return frozenset(
        _covered(semi.decomposition.graph, maps, semi.x_sets, i % len(semi.x_sets))
    )


@dataclass(frozen=True)
class PropertyVerdict:
    name: str
    passed: bool
    witness: str | None = None


def verify_partition(p: XyzPartition) -> list[PropertyVerdict]:
    """Independently evaluate the six partition properties.

    Returns one verdict per property, with a counterexample witness for each
    failure.  Never raises.
    """
    g = p.decomposition.graph
    classes = p.decomposition.classes
    c = len(classes)
    maps = p.decomposition.vertex_maps()
    verdicts = []

    # P1: size arithmetic
    p1_fail = None
    if 2 * p.w > 3 * p.x:
        p1_fail = f"w={p.w} exceeds 3x/2={3 * p.x / 2}"
    elif p.y != required_y(p.x, p.w):
        p1_fail = f"y={p.y} != ceil(3x-3w/2)={required_y(p.x, p.w)}"
    elif c > 0 and p.x + 2 * p.y > g.m // c:
        p1_fail = f"x+2y={p.x + 2 * p.y} exceeds floor(m/c)={g.m // c}"
    verdicts.append(PropertyVerdict("P1", p1_fail is None, p1_fail))

    # P2: equitable matching decomposition assembled from the layers
    p2_fail = None
    if not p.decomposition.is_equitable():
        p2_fail = f"class sizes {p.decomposition.sizes()} not equitable"
    else:
        for i in range(c):
            union = p.x_sets[i] | p.y_sets[i] | p.z_sets[i]
            total = len(p.x_sets[i]) + len(p.y_sets[i]) + len(p.z_sets[i])
            if union != classes[i] or total != len(classes[i]):
                p2_fail = f"layers of class {i} do not partition it"
                break
    verdicts.append(PropertyVerdict("P2", p2_fail is None, p2_fail))

    # P3: layer sizes
    p3_fail = None
    for i in range(c):
        if len(p.x_sets[i]) != p.x or len(p.y_sets[i]) != p.y:
            p3_fail = f"class {i}: |X|={len(p.x_sets[i])}, |Y|={len(p.y_sets[i])}"
            break
    verdicts.append(PropertyVerdict("P3", p3_fail is None, p3_fail))

    # P4: no X_i edge adjacent to a Z_{i+1} edge
    p4_fail = None
    for i in range(c):
        nxt = (i + 1) % c
        for e in sorted(p.x_sets[i]):
            for v in g.endpoints(e):
                f = maps[nxt].get(v)
                if f is not None and f in p.z_sets[nxt]:
                    p4_fail = f"X_{i} edge {e} adjacent to Z_{nxt} edge {f}"
                    break
            if p4_fail:
                break
        if p4_fail:
            break
    verdicts.append(PropertyVerdict("P4", p4_fail is None, p4_fail))

    # P5: few doubly-blocked Y edges, each nearly clear of Z_{i+1}
    p5_fail = None
    for i in range(c):
        prev = (i - 1) % c
        nxt = (i + 1) % c
        y_prime = _doubly_adjacent(g, p.y_sets[i], p.x_sets[prev], maps[prev])
        if 3 * len(y_prime) > p.y:
            p5_fail = f"|Y'_{i}|={len(y_prime)} exceeds y/3={p.y / 3}"
            break
        for e in sorted(y_prime):
            hits = 0
            for v in g.endpoints(e):
                f = maps[nxt].get(v)
                if f is not None and f in p.z_sets[nxt]:
                    hits += 1
            if hits > 1:
                p5_fail = f"Y'_{i} edge {e} adjacent to {hits} edges of Z_{nxt}"
                break
        if p5_fail:
            break
    verdicts.append(PropertyVerdict("P5", p5_fail is None, p5_fail))

    # P6: coverage
    p6_fail = None
    for i in range(c):
        got = len(_covered(g, maps, p.x_sets, i))
        if got < p.w:
            p6_fail = f"only {got} vertices {i}-covered, need {p.w}"
            break
    verdicts.append(PropertyVerdict("P6", p6_fail is None, p6_fail))
    return verdicts


def partition_ok(p: XyzPartition) -> bool:
    return all(v.passed for v in verify_partition(p))


def _doubly_adjacent(g, edge_set, x_prev, map_prev):
    """Edges of ``edge_set`` adjacent to exactly two edges of ``x_prev``."""
    out = set()
    for e in edge_set:
        hits = 0
        for v in g.endpoints(e):
            f = map_prev.get(v)
            if f is not None and f != e and f in x_prev:
                hits += 1
        if hits == 2:
            out.add(e)
    return out


def _adjacent_count(g, e, target_set, target_map):
    hits = 0
    for v in g.endpoints(e):
        f = target_map.get(v)
        if f is not None and f != e and f in target_set:
            hits += 1
    return hits


def _pad_to(base: set, pool, size: int) -> frozenset:
    out = set(base)
    for e in sorted(pool):
        if len(out) >= size:
            break
        if e not in out:
            out.add(e)
    if len(out) != size:
        raise GrowthStuckError(f"cannot pad selection to size {size}")
    return frozenset(out)


def semipartition_class1(d: MatchingDecomposition, x: int) -> Semipartition:
    """Greedy semipartition for a class 1 k-regular graph (c = k classes,
    all perfect matchings) with w = x + floor((x-1)/(k-1)).

    Grows a vertex set one vertex at a time, always feeding the class with
    the fewest induced edges, so that after reaching size w every class has
    at least floor((w-1)/k) induced edges; the edges meeting the final set
    then fit inside x edges per class.
    """
    g = d.graph
    k = d.t
    n = g.vertex_count
    if g.regular_degree() != k:
        raise PreconditionViolatedError("decomposition classes must equal the degree")
    if any(len(cls) * 2 != n for cls in d.classes):
        raise PreconditionViolatedError("classes must be perfect matchings (class 1)")
    if not 1 <= x <= n // 2:
        raise PreconditionViolatedError(f"x must be in [1, n/2], got {x}")
    if k < 2:
        raise PreconditionViolatedError("need k >= 2")
    w = x + (x - 1) // (k - 1)
    maps = d.vertex_maps()

    if w == 1:
        chosen = {0}
    else:
        chosen = set(g.endpoints(0))
        counts = [
            sum(1 for e in cls if set(g.endpoints(e)) <= chosen) for cls in d.classes
        ]
        for h in range(2, w):
            a1, b1 = divmod(h - 1, k)
            assert min(counts) >= a1 and sum(1 for c in counts if c >= a1 + 1) >= b1
            j0 = min(range(k), key=lambda j: (counts[j], j))
            if counts[j0] >= a1 + 1:
                u = next(v for v in range(n) if v not in chosen)
            else:
                u = None
                for v in sorted(chosen):
                    e = maps[j0][v]
                    a, b = g.endpoints(e)
                    partner = b if a == v else a
                    if partner not in chosen and (u is None or partner < u):
                        u = partner
                if u is None:
                    raise GrowthStuckError("no growth vertex available")
            chosen.add(u)
            for j in range(k):
                e = maps[j][u]
                a, b = g.endpoints(e)
                if (b if a == u else a) in chosen:
                    counts[j] += 1

    x_sets = []
    for j in range(d.t):
        meets = {maps[j][v] for v in chosen}
        if len(meets) > x:
            raise GrowthStuckError(f"class {j} needs {len(meets)} > x edges")
        x_sets.append(_pad_to(meets, d.classes[j], x))
    return Semipartition(d, tuple(x_sets), x, w)


def semipartition_class2(d: MatchingDecomposition, x: int) -> Semipartition:
    """Edge-growth semipartition for a k-regular graph decomposed into
    c = k+1 classes, with w = x + floor((x-1)/k).

    Maintains a nested family of edge selections whose per-class sizes stay
    within one of each other while the number of j-covered vertices grows by
    one per round for every j; requires n >= 6(k+1).
    """
    g = d.graph
    c = d.t
    k = c - 1
    n = g.vertex_count
    if g.regular_degree() != k:
        raise PreconditionViolatedError("need a k-regular graph with k+1 classes")
    if k < 3:
        raise PreconditionViolatedError("need k >= 3")
    if n < 6 * (k + 1):
        raise PreconditionViolatedError(f"need n >= {6 * (k + 1)}")
    if not 1 <= x <= (n * k) // (2 * (k + 1)):
        raise PreconditionViolatedError(f"x out of range: {x}")
    w = x + (x - 1) // k
    maps = d.vertex_maps()
    missing = [
        sorted(set(range(n)) - set(maps[j])) for j in range(c)
    ]  # vertices with no class-j edge

    xs: list[set] = [set() for _ in range(c)]

    def coverage(j):
        return _covered(g, maps, [frozenset(s) for s in xs], j)

    # round 1: all edges at a vertex missing class 0, plus the class-0 edge
    # of a vertex missing class 1
    if not missing[0] or not missing[1]:
        raise GrowthStuckError("equitable decomposition left no uncovered vertex")
    u = missing[0][0]
    v = missing[1][0]
    for j in range(c):
        e = maps[j].get(u)
        if e is not None:
            xs[j].add(e)
    xs[0].add(maps[0][v])

    def check_invariants(h):
        upper = h - (h - 1) // (k + 1)
        at_upper = 0
        for j in range(c):
            size = len(xs[j])
            if size not in (upper - 1, upper):
                raise GrowthStuckError(f"round {h}: |X_{j}|={size}, expected ~{upper}")
            if size == upper:
                at_upper += 1
        i_mod = (h - 1) % (k + 1)
        if at_upper != k + 1 - i_mod:
            raise GrowthStuckError(f"round {h}: {at_upper} classes at the upper size")
        for j in range(c):
            if len(coverage(j)) < h:
                raise GrowthStuckError(f"round {h}: class {j} coverage below {h}")

    check_invariants(1)

    for h in range(1, w):
        upper = h - (h - 1) // (k + 1)
        s = next(j for j in range(c) if len(xs[j]) == upper)
        done = {s}
        cov_s = coverage(s)
        if len(cov_s) <= h:
            if len(cov_s) < h:
                raise GrowthStuckError("coverage invariant lost")
            cand = set()
            for e in xs[s]:
                cand.update(g.endpoints(e))
            cand -= cov_s
            if not cand:
                raise GrowthStuckError("no uncovered endpoint in the full class")
            vtx = min(cand)
            for j in range(c):
                if j == s:
                    continue
                e = maps[j].get(vtx)
                if e is not None and e not in xs[j]:
                    xs[j].add(e)
                    done.add(j)

        while len(done) < c:
            q = min(j for j in range(c) if j not in done and (j + 1) % c in done)
            cov_q = coverage(q)
            if len(cov_q) > h:
                e_q = min(d.classes[q] - xs[q])
            else:
                if len(cov_q) < h:
                    raise GrowthStuckError("coverage invariant lost")
                qn = (q + 1) % c
                e_q = None
                for vert in range(n):
                    eq = maps[q].get(vert)
                    if eq is None or eq in xs[q]:
                        continue
                    eq1 = maps[qn].get(vert)
                    if eq1 is not None and eq1 not in xs[qn]:
                        continue
                    e_q = eq
                    break
                if e_q is None:
                    raise GrowthStuckError(f"no coverage-increasing edge for class {q}")
            xs[q].add(e_q)
            done.add(q)
        check_invariants(h + 1)

    x_sets = []
    for j in range(c):
        if len(xs[j]) > x:
            raise GrowthStuckError(f"class {j} grew past x")
        x_sets.append(_pad_to(xs[j], d.classes[j], x))
    return Semipartition(d, tuple(x_sets), x, w)


def semipartition_random(
    d: MatchingDecomposition,
    alpha,
    seed: int,
    retries: int = 64,
) -> Semipartition:
    """Randomized semipartition by independent vertex sampling.

    Each attempt samples every vertex with probability ``alpha``; the X
    layers are the class edges meeting the sample, padded to a common size
    x, and (x, w) are measured from the realized sample rather than taken
    from any closed form.  For c = k+1 the sample is balanced across the
    classes' uncovered-vertex cells first.  Attempts are rejected until the
    measured pair satisfies the size arithmetic (and is nondegenerate);
    child seeds are derived deterministically from (seed, attempt).
    """
    g = d.graph
    c = d.t
    k = g.regular_degree()
    if k is None or c not in (k, k + 1):
        raise PreconditionViolatedError("need a k-regular graph with k or k+1 classes")
    a = float(alpha)
    if not 0 < a < k / c:
        raise PreconditionViolatedError(f"alpha must be in (0, k/c), got {alpha}")
    n = g.vertex_count
    maps = d.vertex_maps()
    missing = [set(range(n)) - set(maps[j]) for j in range(c)]

    best = (-1, 0, 0, None)
    for attempt in range(retries):
        rng = random.Random(f"{seed}:{attempt}")
        sample = [v for v in range(n) if rng.random() < a]
        if c == k:
            chosen = sample
            w = len(chosen)
        else:
            cells = [sorted(set(sample) & missing[j]) for j in range(c)]
            b = min(len(cell) for cell in cells)
            chosen = [v for cell in cells for v in cell[:b]]
            w = b * k
        meets = [
            {maps[j][v] for v in chosen if v in maps[j]} for j in range(c)
        ]
        x = max(len(s) for s in meets) if meets else 0
        y = required_y(x, w)
        feasible = (
            x >= 1
            and w >= 1
            and 2 * w <= 3 * x
            and x + 2 * y <= g.m // c
            and all(len(cls) >= x for cls in d.classes)
        )
        score = x + y - 1
        if score > best[0]:
            best = (score, x, w, attempt)
        if feasible:
            x_sets = tuple(_pad_to(meets[j], d.classes[j], x) for j in range(c))
            return Semipartition(d, x_sets, x, w)
    raise RetriesExhaustedError(
        f"no acceptable sample in {retries} attempts (best x={best[1]}, w={best[2]})",
        best_x=best[1],
        best_w=best[2],
    )


def extend_to_partition(semi: Semipartition) -> XyzPartition:
    """Extend a semipartition to a full X/Y/Z layering.

    Y_i collects the class-i edges adjacent to X_{i-1} edges (one or two),
    plus one chosen blocker in class i for each doubly-adjacent edge of the
    previous class, padded to exactly y edges; Z_i is the rest.  Requires
    the size arithmetic gate: w <= 3x/2 and x + 2y <= floor(m/c).
    """
    d = semi.decomposition
    g = d.graph
    c = d.t
    x, w = semi.x, semi.w
    y = required_y(x, w)
    if 2 * w > 3 * x or x + 2 * y > g.m // c:
        raise P1ViolatedError(
            f"(x={x}, w={w}) fails the size gate: y={y}, floor(m/c)={g.m // c}"
        )
    maps = d.vertex_maps()

    t_single: list[set] = []
    t_double: list[set] = []
    for i in range(c):
        prev = (i - 1) % c
        singles, doubles = set(), set()
        for e in d.classes[i] - semi.x_sets[i]:
            hits = _adjacent_count(g, e, semi.x_sets[prev], maps[prev])
            if hits == 1:
                singles.add(e)
            elif hits == 2:
                doubles.add(e)
        t_single.append(singles)
        t_double.append(doubles)
        assert w + len(singles) + 2 * len(doubles) <= 2 * x, (
            "coverage count contradicts the selection"
        )

    t_block: list[set] = [set() for _ in range(c)]
    for i in range(c):
        nxt = (i + 1) % c
        free_next = d.classes[nxt] - semi.x_sets[nxt] - t_single[nxt] - t_double[nxt]
        for e in sorted(t_double[i]):
            hits = [
                maps[nxt][v]
                for v in g.endpoints(e)
                if v in maps[nxt] and maps[nxt][v] in free_next
            ]
            if len(hits) == 2:
                t_block[nxt].add(min(hits))

    x_sets, y_sets, z_sets = [], [], []
    for i in range(c):
        core = t_single[i] | t_double[i] | t_block[i]
        assert len(core) <= y, "Y core exceeds its budget"
        pool = d.classes[i] - semi.x_sets[i] - core
        y_i = _pad_to(core, pool, y)
        z_i = frozenset(d.classes[i] - semi.x_sets[i] - y_i)
        x_sets.append(semi.x_sets[i])
        y_sets.append(y_i)
        z_sets.append(z_i)
    return XyzPartition(
        d, tuple(x_sets), tuple(y_sets), tuple(z_sets), x=x, y=y, w=w
    )
