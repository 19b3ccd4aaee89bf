"""Simple undirected graphs: data model, graph6/edge-list IO, twins.

Vertex ids are dense integers 0..n-1.  Graphs are immutable after
construction; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ParseError


class Graph:
    """Adjacency-set based simple graph with optional per-vertex labels."""

    __slots__ = ("n", "_adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex id out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self.labels = tuple(labels) if labels is not None else None

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by the vertex set ``s`` plus the old->new id map."""
    sel = sorted(set(s))
    for v in sel:
        if not (0 <= v < g.n):
            raise ValueError(f"unknown vertex id {v}")
    mapping = {old: new for new, old in enumerate(sel)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges() if u in mapping and v in mapping]
    labels = [g.labels[v] for v in sel] if g.labels is not None else None
    return Graph(len(sel), edges, labels), mapping


# ---------------------------------------------------------------------------
# twins

@dataclass(frozen=True)
class TwinPartition:
    """Equivalence classes of closed-neighborhood equality (N[u] = N[v])."""

    classes: tuple[frozenset[int], ...]
    representatives: tuple[int, ...]

    def class_of(self) -> dict[int, int]:
        out = {}
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out


def twin_partition(g: Graph) -> TwinPartition:
    # Hash each closed neighborhood once; two vertices are twins exactly when
    # the frozensets coincide.
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_neighborhood(v), []).append(v)
    classes = sorted((frozenset(vs) for vs in groups.values()), key=min)
    return TwinPartition(tuple(classes), tuple(min(c) for c in classes))


def is_twin_free(g: Graph) -> bool:
    return all(len(c) == 1 for c in twin_partition(g).classes)


def twin_quotient(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Quotient by the twin relation; returns (quotient, vertex -> class id).

    The quotient keeps one representative per class; it is twin-free, and the
    original graph is recoverable from the mapping up to twin multiplicities.
    """
    part = twin_partition(g)
    class_of = part.class_of()
    edges = set()
    for u, v in g.edges():
        cu, cv = class_of[u], class_of[v]
        if cu != cv:
            edges.add((min(cu, cv), max(cu, cv)))
    labels = None
    if g.labels is not None:
        labels = [g.labels[r] for r in part.representatives]
    return Graph(len(part.classes), edges, labels), class_of


# ---------------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def _g6_read_n(data: str) -> tuple[int, int]:
    """Decode the leading vertex count; returns (n, chars consumed)."""
    if not data:
        raise ParseError("empty graph6 code", offset=0)
    c0 = ord(data[0]) - 63
    if c0 < 0 or c0 > 63:
        raise ParseError(f"invalid graph6 byte {data[0]!r}", offset=0)
    if c0 < 63:
        return c0, 1
    if len(data) >= 2 and data[1] == "~":
        if len(data) < 8:
            raise ParseError("truncated graph6 vertex count", offset=1)
        vals = [ord(c) - 63 for c in data[2:8]]
        if any(x < 0 or x > 63 for x in vals):
            raise ParseError("invalid graph6 vertex count", offset=2)
        n = 0
        for x in vals:
            n = (n << 6) | x
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated graph6 vertex count", offset=1)
    vals = [ord(c) - 63 for c in data[1:4]]
    if any(x < 0 or x > 63 for x in vals):
        raise ParseError("invalid graph6 vertex count", offset=1)
    n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
    return n, 4


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, pos = _g6_read_n(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}",
            offset=pos)
    bits = []
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise ParseError(f"invalid graph6 byte {ch!r}", offset=pos + i)
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 code", offset=pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.adjacent(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(b << (5 - s) for s, b in enumerate(bits[i:i + 6])) + 63)
        for i in range(0, len(bits), 6))
    return head + body


# ---------------------------------------------------------------------------
# edge-list text format
#
#   n <count>        optional header fixing the vertex count
#   u v              one edge per line

def parse_edge_list(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    offset = 0
    header_allowed = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            parts = line.split()
            if header_allowed and parts[0] == "n":
                if len(parts) != 2:
                    raise ParseError("malformed header, expected 'n <count>'",
                                     line=lineno, offset=offset)
                try:
                    n = int(parts[1])
                except ValueError:
                    raise ParseError(f"malformed vertex count {parts[1]!r}",
                                     line=lineno, offset=offset) from None
                if n < 0:
                    raise ParseError("vertex count must be nonnegative",
                                     line=lineno, offset=offset)
                header_allowed = False
            else:
                header_allowed = False
                if len(parts) != 2:
                    raise ParseError(f"expected 'u v', got {line!r}",
                                     line=lineno, offset=offset)
                try:
                    u, v = int(parts[0]), int(parts[1])
                except ValueError:
                    raise ParseError(f"non-integer vertex id in {line!r}",
                                     line=lineno, offset=offset) from None
                if u < 0 or v < 0:
                    raise ParseError(f"negative vertex id in {line!r}",
                                     line=lineno, offset=offset)
                if u == v:
                    raise ParseError(f"self-loop at vertex {u}",
                                     line=lineno, offset=offset)
                if n is not None and (u >= n or v >= n):
                    raise ParseError(f"vertex id out of range in {line!r} (n={n})",
                                     line=lineno, offset=offset)
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise ParseError(f"duplicate edge {key}", line=lineno, offset=offset)
                seen.add(key)
                edges.append(key)
        offset += len(raw) + 1
    if n is None:
        n = 1 + max((max(u, v) for u, v in edges), default=-1)
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


FORMATS = ("graph6", "edge-list")


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edge-list":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g)
    if fmt == "edge-list":
        return emit_edge_list(g)
    raise ValueError(f"unknown graph format {fmt!r}")
