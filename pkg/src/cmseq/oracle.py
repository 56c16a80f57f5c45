"""Ground-truth computations: exact cms by branch and bound, fractional
chromatic index by exact rational simplex, and subgraph-based upper bounds.

The cms search answers the decision question "is there a cyclic ordering in
which every pair of adjacent edges sits at cyclic distance >= s?" by placing
edges position by position, pruning any candidate adjacent to an edge within
distance s-1 (including the wrap-around against the first positions).
Rotations are quotiented by pinning edge 0 at position 0 and reflections by
requiring seq[1] < seq[m-1].  The outer loop raises s until the decision
fails; s never exceeds the matching number.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, InvalidHintError, SearchCapExceededError
from .graphs import Graph, adjacent_edges, is_matching, matching_number
from .orderings import EdgeOrdering, full_ordering


@dataclass(frozen=True)
class ExactCmsResult:
    value: int
    ordering: EdgeOrdering
    nodes: int


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n


def _decide(adj_masks: list[int], m: int, s: int, budget: _Budget) -> list[int] | None:
    """A cyclic sequence with all adjacent pairs at distance >= s, or None."""
    seq = [0] * m
    all_mask = (1 << m) - 1

    def rec(p: int, free: int) -> bool:
        if p == m:
            return True
        budget.left -= 1
        if budget.left < 0:
            raise BudgetExceededError("node budget exhausted", 0, 0)
        block = 0
        for q in range(max(p - s + 1, 0), p):
            block |= adj_masks[seq[q]]
        head = p + s - m
        if head > 0:
            for q in range(head):
                block |= adj_masks[seq[q]]
        avail = free & ~block
        last = p == m - 1
        floor_edge = seq[1] if last else -1
        while avail:
            bit = avail & -avail
            avail ^= bit
            e = bit.bit_length() - 1
            if last and e < floor_edge:
                continue  # reflection symmetry: force seq[1] < seq[m-1]
            seq[p] = e
            if rec(p + 1, free ^ bit):
                return True
        return False

    if rec(1, all_mask ^ 1):
        return seq
    return None


def exact_cms(g: Graph, node_budget: int = 30_000_000) -> ExactCmsResult:
    """Exact cyclic matching sequenceability with a witness ordering.

    Raises BudgetExceededError carrying the certified interval [lo, hi] and
    the best witness when the node budget runs out mid-decision.
    """
    m = g.m
    if m == 0:
        return ExactCmsResult(0, full_ordering(g), 0)
    identity = full_ordering(g)
    if is_matching(g, range(m)):
        return ExactCmsResult(m, identity, 0)
    if m <= 2:
        # two adjacent edges: every ordering realizes distance 1
        return ExactCmsResult(1, identity, 0)

    nu = matching_number(g)
    hi = min(nu, m // 2)
    adj_masks = [0] * m
    for e in range(m):
        mask = 0
        for f in adjacent_edges(g, e):
            mask |= 1 << f
        adj_masks[e] = mask

    budget = _Budget(node_budget)
    lo = 1
    witness = identity
    for s in range(2, hi + 1):
        try:
            seq = _decide(adj_masks, m, s, budget)
        except BudgetExceededError:
            raise BudgetExceededError(
                f"budget of {node_budget} nodes exhausted at s={s}",
                lo,
                hi,
                ordering=witness,
                nodes=node_budget,
            ) from None
        if seq is None:
            hi = s - 1
            break
        lo = s
        witness = EdgeOrdering(g, tuple(seq))
    assert lo == hi
    return ExactCmsResult(lo, witness, node_budget - budget.left)


# -- fractional chromatic index -----------------------------------------------


def _all_matchings(adj_masks: list[int], m: int) -> list[int]:
    """All matchings as edge bitmasks (including the empty one)."""
    out = []

    def rec(start: int, cur: int, blocked: int):
        out.append(cur)
        for e in range(start, m):
            bit = 1 << e
            if blocked & bit:
                continue
            rec(e + 1, cur | bit, blocked | adj_masks[e] | bit)

    rec(0, 0, 0)
    return out


def maximal_matchings(g: Graph) -> list[frozenset]:
    """All inclusion-maximal matchings of g."""
    m = g.m
    adj_masks = [0] * m
    for e in range(m):
        mask = 0
        for f in adjacent_edges(g, e):
            mask |= 1 << f
        adj_masks[e] = mask
    result = []
    for cur in _all_matchings(adj_masks, m):
        blocked = cur
        for e in range(m):
            if cur & (1 << e):
                blocked |= adj_masks[e]
        if blocked == (1 << m) - 1 and (cur or m == 0):
            result.append(frozenset(e for e in range(m) if cur & (1 << e)))
    return result


class _Simplex:
    """Two-phase primal simplex with exact fractions and Bland's rule.

    Solves min c.x subject to A x >= b (b > 0), x >= 0, which covers the
    fractional edge coloring LP over enumerated maximal matchings.
    """

    def __init__(self, a_rows: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
        self.nrows = len(a_rows)
        self.nvars = len(c)
        n, r = self.nvars, self.nrows
        # columns: structural | surplus | artificial | rhs
        self.width = n + 2 * r + 1
        self.tab = []
        for i in range(r):
            row = list(a_rows[i]) + [Fraction(0)] * (2 * r) + [b[i]]
            row[n + i] = Fraction(-1)
            row[n + r + i] = Fraction(1)
            self.tab.append(row)
        self.basis = [n + r + i for i in range(r)]
        self.cost = list(c)

    def _reduced_row(self, costs: list[Fraction]) -> list[Fraction]:
        red = list(costs) + [Fraction(0)]
        for i, bv in enumerate(self.basis):
            cb = costs[bv]
            if cb:
                row = self.tab[i]
                for j in range(self.width):
                    red[j] -= cb * row[j]
        return red

    def _pivot(self, row: int, col: int):
        piv = self.tab[row][col]
        inv = Fraction(1) / piv
        self.tab[row] = [x * inv for x in self.tab[row]]
        prow = self.tab[row]
        for i in range(self.nrows):
            if i == row:
                continue
            factor = self.tab[i][col]
            if factor:
                self.tab[i] = [x - factor * p for x, p in zip(self.tab[i], prow)]
        self.basis[row] = col

    def _run(self, costs: list[Fraction], allowed: int):
        red = self._reduced_row(costs)
        while True:
            enter = None
            for j in range(allowed):
                if red[j] < 0:
                    enter = j  # Bland: smallest index
                    break
            if enter is None:
                return red
            leave = None
            best = None
            for i in range(self.nrows):
                a = self.tab[i][enter]
                if a > 0:
                    ratio = self.tab[i][-1] / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave is None:
                raise ArithmeticError("LP unbounded")
            self._pivot(leave, enter)
            red = self._reduced_row(costs)

    def solve(self):
        n, r = self.nvars, self.nrows
        phase1 = [Fraction(0)] * (n + r) + [Fraction(1)] * r
        self._run(phase1, self.width - 1)
        infeas = sum(
            self.tab[i][-1] for i in range(r) if self.basis[i] >= n + r
        )
        if infeas != 0:
            raise ArithmeticError("LP infeasible")
        # drive zero-level artificials out of the basis; a row where no
        # structural or surplus pivot exists is redundant and gets dropped
        drop = []
        for i in range(r):
            if self.basis[i] >= n + r:
                for j in range(n + r):
                    if self.tab[i][j] != 0:
                        self._pivot(i, j)
                        break
                else:
                    drop.append(i)
        if drop:
            self.tab = [row for i, row in enumerate(self.tab) if i not in drop]
            self.basis = [bv for i, bv in enumerate(self.basis) if i not in drop]
            self.nrows = len(self.tab)
        phase2 = list(self.cost) + [Fraction(0)] * (2 * r)
        red = self._run(phase2, n + r)
        x = [Fraction(0)] * n
        for i, bv in enumerate(self.basis):
            if bv < n:
                x[bv] = self.tab[i][-1]
        value = sum(ci * xi for ci, xi in zip(self.cost, x))
        duals = [Fraction(0)] * r
        for i in range(r):
            duals[i] = red[n + i]
        for i in drop:
            duals[i] = Fraction(0)  # redundant constraint
        return value, x, duals, red


def fractional_chromatic_index(g: Graph, cap: int = 20) -> Fraction:
    """Exact optimum of the fractional edge coloring LP.

    min sum w(M) over maximal matchings M subject to every edge being
    covered with total weight >= 1, w >= 0.  The optimum is certified by
    checking primal and dual feasibility and equal objectives before
    returning.
    """
    m = g.m
    if m == 0:
        return Fraction(0)
    if m > cap:
        raise SearchCapExceededError(f"{m} edges exceeds matching-enumeration cap {cap}")
    mats = maximal_matchings(g)
    a_rows = [
        [Fraction(1) if e in mat else Fraction(0) for mat in mats]
        for e in range(m)
    ]
    sx = _Simplex(a_rows, [Fraction(1)] * m, [Fraction(1)] * len(mats))
    value, weights, duals, red = sx.solve()

    # optimality certificate: feasible primal, feasible dual, equal objectives
    for e in range(m):
        cover = sum(w for w, mat in zip(weights, mats) if e in mat)
        assert cover >= 1, "primal infeasible"
    assert all(w >= 0 for w in weights)
    assert all(y >= 0 for y in duals), "dual sign violated"
    for mat in mats:
        assert sum(duals[e] for e in mat) <= 1, "dual infeasible"
    assert sum(duals) == value, "duality gap"
    # complementary slackness on the final basis
    for j, w in enumerate(weights):
        assert w == 0 or red[j] == 0
    return value


def cms_upper_bound_fractional(g: Graph, cap: int = 20) -> Fraction:
    """|E(G)| divided by the fractional chromatic index; an upper bound on
    cms because uniform weights on the witness windows of an optimal
    ordering form a fractional edge coloring."""
    cf = fractional_chromatic_index(g, cap)
    if cf == 0:
        return Fraction(0)
    return Fraction(g.m) / cf


def cms_upper_bound_subgraph(
    m_host: int, sub: Graph, cms_sub_hint: int
) -> tuple[Fraction, Fraction]:
    """Upper bounds on cms of a host graph from one of its subgraphs.

    With nu the matching number of ``sub``:
      bound_i  = nu * m_host / |E(sub)|
      bound_ii = m_host / (floor((|E(sub)| - hint) / nu) + 1)
    ``cms_sub_hint`` must be at least 1 and at least cms(sub) for bound_ii
    to be valid (a larger hint only weakens it).
    """
    if cms_sub_hint < 1:
        raise InvalidHintError("cms hint must be >= 1")
    nu = matching_number(sub)
    me = sub.m
    if me == 0 or nu == 0:
        raise InvalidHintError("subgraph must have at least one edge")
    bound_i = Fraction(nu * m_host, me)
    denom = (me - cms_sub_hint) // nu + 1
    bound_ii = Fraction(m_host, denom)
    return bound_i, bound_ii
