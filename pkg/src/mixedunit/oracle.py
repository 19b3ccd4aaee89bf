"""Brute-force decision procedure for mixed unit realizability.

Searches directly over the definition: every vertex gets a unit interval
<l_v, l_v + 1> with one of the four boundary types, and two intervals must
intersect exactly when the vertices are adjacent.  For unit intervals that
rewrites to

    intersect(u, v)  <=>  |l_u - l_v| < 1, or
                          |l_u - l_v| = 1 and both touching ends are closed.

Per unordered pair the solver branches on the trichotomy {|d| < 1, |d| = 1,
|d| > 1} consistent with (non)adjacency; the rational layer is a strict /
non-strict difference-constraint system checked incrementally by a
difference-bound matrix with lexicographic (bound, strictness) weights, and
the boundary-type layer is a set of forced "closed" literals plus
at-most-one-closed clauses from touching non-adjacent pairs.

The search is deterministic for a fixed branch order; pass an
``random.Random`` to permute pair and branch order (witness variety only,
verdicts are unaffected).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .graphs import Graph
from .intervals import BoundaryType, Interval, is_unit, realizes

# A bound is a pair (c, s): value difference <= c, tightened by s strict
# steps.  Tighter = smaller c, then more strictness.
_Bound = tuple[int, int]


def _bound_le(a: _Bound, b: _Bound) -> bool:
    return a[0] < b[0] or (a[0] == b[0] and a[1] >= b[1])


class _Dbm:
    """All-pairs tightest difference bounds over vertices 0..n-1 plus a
    virtual source n anchoring the potentials."""

    def __init__(self, n: int):
        self.n = n
        size = n + 1
        self.d: list[list[Optional[_Bound]]] = [[None] * size for _ in range(size)]
        for i in range(size):
            self.d[i][i] = (0, 0)
        for v in range(n):
            self.d[n][v] = (0, 0)

    def copy(self) -> "_Dbm":
        out = _Dbm.__new__(_Dbm)
        out.n = self.n
        out.d = [row[:] for row in self.d]
        return out

    def add(self, u: int, v: int, c: int, strict: bool) -> bool:
        """Impose l_u - l_v <= c (strict if requested); False on infeasibility.

        Stored as a path weight from v to u; closure is restored
        incrementally in O(size^2).
        """
        w: _Bound = (c, 1 if strict else 0)
        d = self.d
        size = self.n + 1
        cur = d[v][u]
        if cur is not None and _bound_le(cur, w):
            return True
        for x in range(size):
            dxv = d[x][v]
            if dxv is None:
                continue
            head = (dxv[0] + w[0], dxv[1] + w[1])
            row_u = d[u]
            row_x = d[x]
            for y in range(size):
                duy = row_u[y]
                if duy is None:
                    continue
                cand = (head[0] + duy[0], head[1] + duy[1])
                old = row_x[y]
                if old is None or not _bound_le(old, cand):
                    row_x[y] = cand
        for x in range(size):
            dxx = self.d[x][x]
            if dxx[0] < 0 or (dxx[0] == 0 and dxx[1] > 0):
                return False
        return True

    def potentials(self) -> list[Fraction]:
        """Exact left endpoints satisfying every imposed constraint."""
        m = 4 * (self.n + 2)
        out = []
        for v in range(self.n):
            c, s = self.d[self.n][v]
            out.append(Fraction(c) - Fraction(s, m))
        return out


def solve_disjunctive_differences(
        n: int,
        adjacent: set[tuple[int, int]],
        nonadjacent: set[tuple[int, int]],
        rng: Optional[random.Random] = None,
        degree=None,
) -> Optional[tuple[list[Fraction], dict[tuple[str, int], bool]]]:
    """Left endpoints and end-closedness booleans for a unit placement, or
    None if the disjunctive system is unsatisfiable.

    ``adjacent``/``nonadjacent`` partition the unordered vertex pairs.
    Booleans are keyed ("L", v) / ("R", v): the left / right end of v's
    interval is closed.  Ends never involved in an exact touch default to
    closed.
    """
    deg = degree or (lambda v: 0)
    pairs = [(u, v, True) for (u, v) in sorted(adjacent)]
    pairs += [(u, v, False) for (u, v) in sorted(nonadjacent)]
    pairs.sort(key=lambda t: (not t[2], -(deg(t[0]) + deg(t[1])), t[0], t[1]))
    if rng is not None:
        adj_part = [p for p in pairs if p[2]]
        non_part = [p for p in pairs if not p[2]]
        rng.shuffle(adj_part)
        rng.shuffle(non_part)
        pairs = adj_part + non_part

    dbm = _Dbm(n)
    forced: set[tuple[str, int]] = set()
    clauses: list[tuple[tuple[str, int], tuple[str, int]]] = []

    def clause_conflict() -> bool:
        return any(a in forced and b in forced for a, b in clauses)

    def touch_literals(left: int, right: int):
        # right sits exactly one to the right of left: the touching ends are
        # left's right end and right's left end.
        return ("R", left), ("L", right)

    def search(idx: int) -> bool:
        nonlocal dbm
        if idx == len(pairs):
            return True
        u, v, adj = pairs[idx]
        if adj:
            branches = ["near", "touch_uv", "touch_vu"]
        else:
            branches = ["far_uv", "far_vu", "gap_uv", "gap_vu"]
        if rng is not None:
            rng.shuffle(branches)
        for br in branches:
            saved_dbm = dbm.copy()
            saved_forced = set(forced)
            saved_nclauses = len(clauses)
            ok = True
            if br == "near":
                ok = dbm.add(u, v, 1, True) and dbm.add(v, u, 1, True)
            elif br in ("touch_uv", "touch_vu"):
                # touch_uv: l_u - l_v = 1 (v left of u)
                a, b = (u, v) if br == "touch_uv" else (v, u)
                ok = dbm.add(a, b, 1, False) and dbm.add(b, a, -1, False)
                if ok:
                    la, lb = touch_literals(b, a)
                    for lit in (la, lb):
                        if any((lit == x and y in forced) or (lit == y and x in forced)
                               for x, y in clauses):
                            ok = False
                            break
                        forced.add(lit)
            elif br in ("far_uv", "far_vu"):
                a, b = (u, v) if br == "far_uv" else (v, u)
                ok = dbm.add(b, a, -1, True)  # l_b - l_a < -1, i.e. l_a - l_b > 1
            else:  # gap: exact distance 1 but not both touching ends closed
                a, b = (u, v) if br == "gap_uv" else (v, u)
                ok = dbm.add(a, b, 1, False) and dbm.add(b, a, -1, False)
                if ok:
                    la, lb = touch_literals(b, a)
                    if la in forced and lb in forced:
                        ok = False
                    else:
                        clauses.append((la, lb))
            if ok and not clause_conflict() and search(idx + 1):
                return True
            dbm = saved_dbm
            forced.clear()
            forced.update(saved_forced)
            del clauses[saved_nclauses:]
        return False

    if not search(0):
        return None
    lefts = dbm.potentials()
    bools: dict[tuple[str, int], bool] = {}
    in_clause = {lit for cl in clauses for lit in cl}
    for v in range(n):
        for side in ("L", "R"):
            lit = (side, v)
            if lit in forced:
                bools[lit] = True
            elif lit in in_clause:
                bools[lit] = False
            else:
                bools[lit] = True
    return lefts, bools


def _btype(left_closed: bool, right_closed: bool) -> BoundaryType:
    if left_closed:
        return BoundaryType.CLOSED if right_closed else BoundaryType.CLOSED_OPEN
    return BoundaryType.OPEN_CLOSED if right_closed else BoundaryType.OPEN


DEFAULT_BOUND = 10


def oracle_mixed_unit(g: Graph, bound: int = DEFAULT_BOUND,
                      rng: Optional[random.Random] = None) -> Optional[dict[int, Interval]]:
    """A verified unit placement for g, or None exactly when g has none.

    Complete search over the search space of unit-interval representations;
    any returned witness is re-checked against the graph before being
    returned.  Raises ValueError above the size bound.
    """
    if g.n > bound:
        raise ValueError(f"oracle size bound exceeded: n={g.n} > {bound}")
    adjacent = set()
    nonadjacent = set()
    for u in g.vertices:
        for v in range(u + 1, g.n):
            (adjacent if g.adjacent(u, v) else nonadjacent).add((u, v))
    sol = solve_disjunctive_differences(g.n, adjacent, nonadjacent, rng=rng,
                                        degree=g.degree)
    if sol is None:
        return None
    lefts, bools = sol
    rep = {
        v: Interval(lefts[v], lefts[v] + 1, _btype(bools[("L", v)], bools[("R", v)]))
        for v in g.vertices
    }
    check = realizes(g, rep)
    if not check.ok or not is_unit(rep):
        raise AssertionError(f"oracle produced an invalid witness: {check.mismatches}")
    return rep
