"""Exact-rational intervals with four boundary types, and representations.

Everything here is exact: endpoints are ``fractions.Fraction`` and floats
are rejected outright, because the certification pipeline manipulates
epsilon/2 margins and endpoint equalities that floats would corrupt.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .graphs import Graph


class BoundaryType(enum.Enum):
    CLOSED = "closed"            # [x, y]
    OPEN = "open"                # (x, y)
    OPEN_CLOSED = "open_closed"  # (x, y]
    CLOSED_OPEN = "closed_open"  # [x, y)

    @property
    def left_closed(self) -> bool:
        return self in (BoundaryType.CLOSED, BoundaryType.CLOSED_OPEN)

    @property
    def right_closed(self) -> bool:
        return self in (BoundaryType.CLOSED, BoundaryType.OPEN_CLOSED)


def _rat(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact interval arithmetic")
    return Fraction(x)


@dataclass(frozen=True)
class Interval:
    """Nondegenerate interval of the real line (lo < hi strictly).

    Degenerate point intervals are rejected at construction: no
    representation built here ever needs them, and the one-point
    intersection arguments rely on nondegeneracy.
    """

    lo: Fraction
    hi: Fraction
    btype: BoundaryType = BoundaryType.CLOSED

    def __post_init__(self):
        object.__setattr__(self, "lo", _rat(self.lo))
        object.__setattr__(self, "hi", _rat(self.hi))
        if not isinstance(self.btype, BoundaryType):
            object.__setattr__(self, "btype", BoundaryType(self.btype))
        if self.lo >= self.hi:
            raise ValueError(f"degenerate or inverted interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains_point(self, p) -> bool:
        p = _rat(p)
        if self.lo < p < self.hi:
            return True
        if p == self.lo:
            return self.btype.left_closed
        if p == self.hi:
            return self.btype.right_closed
        return False

    def intersects(self, other: "Interval") -> bool:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo < hi:
            return True
        if lo > hi:
            return False
        return self.contains_point(lo) and other.contains_point(lo)

    def contains(self, other: "Interval") -> bool:
        """Point-set containment: other is a subset of self."""
        if other.lo < self.lo:
            return False
        if other.lo == self.lo and other.btype.left_closed and not self.btype.left_closed:
            return False
        if other.hi > self.hi:
            return False
        if other.hi == self.hi and other.btype.right_closed and not self.btype.right_closed:
            return False
        return True

    def __repr__(self) -> str:
        lb = "[" if self.btype.left_closed else "("
        rb = "]" if self.btype.right_closed else ")"
        return f"{lb}{self.lo}, {self.hi}{rb}"


Representation = Mapping[int, Interval]


@dataclass(frozen=True)
class RealizeResult:
    ok: bool
    mismatches: tuple[tuple[int, int, str], ...]  # (u, v, "missing-edge" | "extra-edge")


def realizes(g: Graph, rep: Representation) -> RealizeResult:
    """Check adjacency(u,v) <=> rep[u] intersects rep[v] for all pairs.

    "missing-edge": the graph has the edge but the intervals are disjoint.
    "extra-edge": the graph lacks the edge but the intervals intersect.
    """
    missing = [v for v in g.vertices if v not in rep]
    if missing:
        raise ValueError(f"representation not total on V(G), missing {missing}")
    bad = []
    for u in g.vertices:
        for v in range(u + 1, g.n):
            meets = rep[u].intersects(rep[v])
            if g.adjacent(u, v) and not meets:
                bad.append((u, v, "missing-edge"))
            elif not g.adjacent(u, v) and meets:
                bad.append((u, v, "extra-edge"))
    return RealizeResult(not bad, tuple(bad))


def is_unit(rep: Representation) -> bool:
    return all(iv.length == 1 for iv in rep.values())


def is_closed_only(rep: Representation) -> bool:
    return all(iv.btype is BoundaryType.CLOSED for iv in rep.values())


def endpoint_values(rep: Representation) -> list[Fraction]:
    """Sorted list of all 2n endpoint values (with multiplicity)."""
    vals = []
    for iv in rep.values():
        vals.append(iv.lo)
        vals.append(iv.hi)
    return sorted(vals)


def has_distinct_endpoints(rep: Representation) -> bool:
    vals = endpoint_values(rep)
    return all(a != b for a, b in zip(vals, vals[1:]))


def min_endpoint_gap(rep: Representation) -> Fraction:
    """Smallest distance between two distinct endpoint values (the proof's epsilon)."""
    vals = sorted(set(endpoint_values(rep)))
    if len(vals) < 2:
        raise ValueError("representation has fewer than two distinct endpoint values")
    return min(b - a for a, b in zip(vals, vals[1:]))


def is_mixed_proper(rep: Representation) -> bool:
    """Mixed proper: (1) no proper containment between distinct closed
    intervals, and (2) every non-closed interval shares both endpoints with
    some closed interval."""
    items = list(rep.items())
    closed = [(v, iv) for v, iv in items if iv.btype is BoundaryType.CLOSED]
    for u, a in closed:
        for v, b in closed:
            if u != v and b.contains(a) and (a.lo, a.hi) != (b.lo, b.hi):
                return False
    closed_ends = {(iv.lo, iv.hi) for _, iv in closed}
    for v, iv in items:
        if iv.btype is not BoundaryType.CLOSED and (iv.lo, iv.hi) not in closed_ends:
            return False
    return True


def bad_pairs(rep: Representation) -> list[tuple[int, int]]:
    """All ordered pairs (u, v), u != v, with rep[u] a subset of rep[v].

    Defined for closed-only representations, matching the proof context.
    """
    if not is_closed_only(rep):
        raise ValueError("bad_pairs requires a closed-only representation")
    out = []
    for u, a in rep.items():
        for v, b in rep.items():
            if u != v and b.contains(a):
                out.append((u, v))
    return sorted(out)


# ---------------------------------------------------------------------------
# serialization: vertex id -> {lo, hi, type} with exact rational strings

def representation_to_json(rep: Representation) -> str:
    doc = {
        str(v): {"lo": str(iv.lo), "hi": str(iv.hi), "type": iv.btype.value}
        for v, iv in sorted(rep.items())
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def representation_from_json(text: str) -> dict[int, Interval]:
    doc = json.loads(text)
    rep = {}
    for key, spec in doc.items():
        rep[int(key)] = Interval(Fraction(spec["lo"]), Fraction(spec["hi"]),
                                 BoundaryType(spec["type"]))
    return rep
