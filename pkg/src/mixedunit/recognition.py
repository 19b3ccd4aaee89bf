"""Interval-graph recognition and the bad-pair repair loop.

Recognition builds a clique path (maximal cliques in consecutive order) by
backtracking and reads off a closed-interval representation with pairwise
distinct rational endpoints.  ``repair_bad_pairs`` then applies the
containment-repair move until every remaining bad pair has left and right
witnesses; this is the constructive substitute for a globally bad-pair
minimal representation.

A brute-force chordality + asteroidal-triple check is provided as an
independent oracle for the recognizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .graphs import Graph
from .intervals import (BoundaryType, Interval, Representation, bad_pairs,
                        has_distinct_endpoints, is_closed_only,
                        min_endpoint_gap, realizes)

CliquePath = list[frozenset[int]]


# ---------------------------------------------------------------------------
# maximal cliques and clique paths

def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    out: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(g.neighbors(u) & p))
        for v in sorted(p - g.neighbors(pivot)):
            expand(r | {v}, p & g.neighbors(v), x & g.neighbors(v))
            p.remove(v)
            x.add(v)

    expand(set(), set(g.vertices), set())
    return sorted(out, key=sorted)


def find_clique_path(g: Graph) -> Optional[CliquePath]:
    """An ordering of the maximal cliques in which every vertex's cliques are
    consecutive, or None (exactly when g is not an interval graph)."""
    cliques = maximal_cliques(g)
    m = len(cliques)
    if m <= 1:
        return cliques
    in_cliques: dict[int, set[int]] = {v: set() for v in g.vertices}
    for idx, c in enumerate(cliques):
        for v in c:
            in_cliques[v].add(idx)

    dead: set[frozenset[int]] = set()  # used-sets that cannot be completed

    def extend(order: list[int], used: frozenset[int], active: set[int]) -> Optional[list[int]]:
        if len(order) == m:
            return order
        if used in dead:
            return None
        for idx in range(m):
            if idx in used:
                continue
            c = cliques[idx]
            # every vertex still open must continue into the next clique
            if active - c:
                continue
            new_used = used | {idx}
            new_active = {v for v in c if in_cliques[v] - new_used}
            res = extend(order + [idx], new_used, new_active)
            if res is not None:
                return res
        dead.add(used)
        return None

    order = extend([], frozenset(), set())
    if order is None:
        return None
    return [cliques[i] for i in order]


def clique_path_is_valid(g: Graph, path: CliquePath) -> bool:
    if sorted(path, key=sorted) != maximal_cliques(g):
        return False
    for v in g.vertices:
        idxs = [i for i, c in enumerate(path) if v in c]
        if not idxs or idxs != list(range(idxs[0], idxs[-1] + 1)):
            return False
    return True


def representation_from_clique_path(g: Graph, path: CliquePath) -> dict[int, Interval]:
    """Closed intervals over stretched clique indices.

    Clique index i occupies [2i, 2i+1]; vertex v spanning cliques f..l gets
    [2f - a_v, 2l + 1 + a_v] with per-vertex distinct rationals a_v < 1/2, so
    all 2n endpoints are pairwise distinct from the start.
    """
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for idx, c in enumerate(path):
        for v in c:
            first.setdefault(v, idx)
            last[v] = idx
    rep = {}
    for v in g.vertices:
        a = Fraction(v + 1, 2 * g.n + 4)
        rep[v] = Interval(2 * first[v] - a, 2 * last[v] + 1 + a, BoundaryType.CLOSED)
    return rep


def recognize_interval(g: Graph) -> Optional[tuple[CliquePath, dict[int, Interval]]]:
    """Clique path plus a realizing closed representation, or None if g is
    not an interval graph."""
    path = find_clique_path(g)
    if path is None:
        return None
    if g.n == 0:
        return path, {}
    rep = representation_from_clique_path(g, path)
    check = realizes(g, rep)
    if not check.ok:  # pragma: no cover - construction guarantees this
        raise AssertionError(f"clique-path representation failed: {check.mismatches}")
    return path, rep


# ---------------------------------------------------------------------------
# endpoint perturbation

def perturb_endpoints(rep: Representation) -> dict[int, Interval]:
    """Make all 2n endpoint values pairwise distinct.

    Moves, each by a fraction of the current minimum endpoint gap epsilon:
    r(a) = l(b) coincidences extend a's right end by epsilon/2 (the repair
    proof's tie-break); exactly-equal intervals, shared-left groups, and
    shared-right groups are separated in containment order.  Adjacency is
    preserved by every move and no move creates a containment.  The bad-pair
    count is exactly preserved when the only coincidences are right-left
    touches, the only kind a repair fixpoint can exhibit; other tie groups
    (equal intervals in particular) may lose containments that were only
    marginal under the tie.
    """
    rep = dict(rep)
    if not is_closed_only(rep):
        raise ValueError("perturb_endpoints expects a closed-only representation")

    def eps() -> Fraction:
        return min_endpoint_gap(rep)

    # exactly equal intervals: nest them
    while True:
        groups: dict[tuple[Fraction, Fraction], list[int]] = {}
        for v, iv in rep.items():
            groups.setdefault((iv.lo, iv.hi), []).append(v)
        group = next((vs for vs in groups.values() if len(vs) > 1), None)
        if group is None:
            break
        d = eps() / (2 * len(group))
        for rank, v in enumerate(sorted(group)[1:], start=1):
            iv = rep[v]
            rep[v] = Interval(iv.lo - rank * d, iv.hi + rank * d, iv.btype)

    # r(a) = l(b): extend a to the right
    while True:
        lefts = {iv.lo for iv in rep.values()}
        hit = next((v for v, iv in sorted(rep.items()) if iv.hi in lefts), None)
        if hit is None:
            break
        iv = rep[hit]
        rep[hit] = Interval(iv.lo, iv.hi + eps() / 2, iv.btype)

    # shared left endpoints: shift rightward, most-contained interval first
    while True:
        groups = {}
        for v, iv in rep.items():
            groups.setdefault(iv.lo, []).append(v)
        group = next((vs for vs in groups.values() if len(vs) > 1), None)
        if group is None:
            break
        d = eps() / (2 * len(group))
        group.sort(key=lambda v: rep[v].hi)  # smallest (innermost) first
        for rank, v in enumerate(reversed(group[:-1]), start=1):
            iv = rep[v]
            rep[v] = Interval(iv.lo + rank * d, iv.hi, iv.btype)

    # shared right endpoints: extend, outermost interval furthest
    while True:
        groups = {}
        for v, iv in rep.items():
            groups.setdefault(iv.hi, []).append(v)
        group = next((vs for vs in groups.values() if len(vs) > 1), None)
        if group is None:
            break
        d = eps() / (2 * len(group))
        group.sort(key=lambda v: rep[v].lo)  # outermost first
        for rank, v in enumerate(reversed(group[:-1]), start=1):
            iv = rep[v]
            rep[v] = Interval(iv.lo, iv.hi + rank * d, iv.btype)

    assert has_distinct_endpoints(rep)
    return rep


# ---------------------------------------------------------------------------
# bad-pair repair (the Claim-1 move)

def claim1_witnesses(rep: Representation, u: int, v: int) -> tuple[Optional[int], Optional[int]]:
    """Witnesses (x, y) for the bad pair (u, v): l(v) <= r(x) < l(u) and
    r(u) < l(y) <= r(v).  Either side may be None if no witness exists."""
    x = y = None
    for z, iv in rep.items():
        if z in (u, v):
            continue
        if rep[v].lo <= iv.hi < rep[u].lo:
            x = z if x is None else min(x, z)
        if rep[u].hi < iv.lo <= rep[v].hi:
            y = z if y is None else min(y, z)
    return x, y


@dataclass(frozen=True)
class RepairOutcome:
    representation: dict[int, Interval]
    moves: int


def repair_bad_pairs(g: Graph, rep: Representation) -> RepairOutcome:
    """Apply the containment-repair move until every bad pair has witnesses.

    Move for a pair (w, v) without a left witness: take u containd in v with
    l(u) minimal, set u = [l(v) - eps/2, r(u)] and v = [l(v), r(v) + eps/2].
    The right-witness move is the mirror image.  Each move removes at least
    one bad pair and creates none, so at most (initial bad-pair count) moves
    are applied; the final representation realizes g and keeps endpoint
    distinctness if the input had it.
    """
    rep = dict(rep)
    check = realizes(g, rep)
    if not check.ok:
        raise ValueError(f"input representation does not realize g: {check.mismatches}")
    if not is_closed_only(rep):
        raise ValueError("repair_bad_pairs expects a closed-only representation")

    moves = 0
    count = len(bad_pairs(rep))
    initial = count
    while True:
        pairs = bad_pairs(rep)
        todo = None
        for (u, v) in pairs:
            x, y = claim1_witnesses(rep, u, v)
            if x is None or y is None:
                todo = (u, v, x is None)
                break
        if todo is None:
            break
        _, v, left_missing = todo
        e2 = min_endpoint_gap(rep) / 2
        contained = [z for (z, w) in pairs if w == v]
        if left_missing:
            u = min(contained, key=lambda z: (rep[z].lo, z))
            rep[u] = Interval(rep[v].lo - e2, rep[u].hi)
            rep[v] = Interval(rep[v].lo, rep[v].hi + e2)
        else:
            u = max(contained, key=lambda z: (rep[z].hi, -z))
            rep[u] = Interval(rep[u].lo, rep[v].hi + e2)
            rep[v] = Interval(rep[v].lo - e2, rep[v].hi)
        moves += 1
        new_count = len(bad_pairs(rep))
        if new_count >= count:
            raise AssertionError(
                f"repair move did not decrease the bad-pair count ({count} -> {new_count})")
        count = new_count
        after = realizes(g, rep)
        if not after.ok:
            raise AssertionError(f"repair move broke the representation: {after.mismatches}")
        if moves > initial:
            raise AssertionError("repair exceeded its termination bound")
    return RepairOutcome(rep, moves)


# ---------------------------------------------------------------------------
# brute-force interval recognition (independent oracle for tests)

def is_chordal(g: Graph) -> bool:
    """Greedy simplicial elimination; complete for chordality."""
    alive = set(g.vertices)
    nbrs = {v: set(g.neighbors(v)) for v in g.vertices}
    while alive:
        for v in sorted(alive):
            live = nbrs[v] & alive
            if all(b in nbrs[a] for a, b in combinations(sorted(live), 2)):
                alive.remove(v)
                break
        else:
            return False
    return True


def _connected_avoiding(g: Graph, s: int, t: int, banned: frozenset[int]) -> bool:
    if s in banned or t in banned:
        return False
    seen = {s}
    stack = [s]
    while stack:
        cur = stack.pop()
        if cur == t:
            return True
        for w in g.neighbors(cur):
            if w not in banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def find_asteroidal_triple(g: Graph) -> Optional[tuple[int, int, int]]:
    """Three vertices, pairwise connected outside the closed neighborhood of
    the third, or None."""
    for a, b, c in combinations(g.vertices, 3):
        if (_connected_avoiding(g, a, b, g.closed_neighborhood(c))
                and _connected_avoiding(g, a, c, g.closed_neighborhood(b))
                and _connected_avoiding(g, b, c, g.closed_neighborhood(a))):
            return (a, b, c)
    return None


def is_interval_bruteforce(g: Graph) -> bool:
    """Interval exactly when chordal with no asteroidal triple."""
    return is_chordal(g) and find_asteroidal_triple(g) is None


def is_claw_free(g: Graph) -> bool:
    """No induced K_{1,3}; for interval graphs this characterizes the unit
    interval graphs (Roberts), used as a sanity predicate in tests."""
    for c in g.vertices:
        nbrs = sorted(g.neighbors(c))
        for trio in combinations(nbrs, 3):
            if all(not g.adjacent(a, b) for a, b in combinations(trio, 2)):
                return False
    return True
