"""Generators for the named graph families and the induced-subgraph detector.

The families (R_i, S_i, S_i', S_i'', T_{i,j}, Q_k and the small named
graphs) are transcribed from explicit constructive rules; golden edge-list
files in the test corpus freeze the transcription.

Vertex layout conventions (stable, relied on by the golden files):
bottom-path vertices come first, then top vertices left to right, then any
apex/extra vertex last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, induced_subgraph

_TAGS = ("K13", "K14", "K14star", "K23star", "K24star",
         "R", "S", "Sprime", "Sdoubleprime", "T", "Q", "G1", "Fig2")

_PRETTY = {
    "K13": "K_{1,3}", "K14": "K_{1,4}", "K14star": "K_{1,4}*",
    "K23star": "K_{2,3}*", "K24star": "K_{2,4}*", "G1": "G_1", "Fig2": "Fig2",
}


@dataclass(frozen=True)
class FamilyId:
    tag: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        _validate_params(self.tag, self.params)

    def display(self) -> str:
        if self.tag in _PRETTY:
            return _PRETTY[self.tag]
        if self.tag == "R":
            return f"R_{self.params[0]}"
        if self.tag == "S":
            return f"S_{self.params[0]}"
        if self.tag == "Sprime":
            return f"S_{self.params[0]}'"
        if self.tag == "Sdoubleprime":
            return f"S_{self.params[0]}''"
        if self.tag == "Q":
            return f"Q_{self.params[0]}"
        return "T_{%d,%d}" % self.params


def _validate_params(tag: str, params: tuple[int, ...]):
    def need(k):
        if len(params) != k:
            raise ValueError(f"{tag} takes {k} parameter(s), got {params}")
    if tag in ("K13", "K14", "K14star", "K23star", "K24star", "G1", "Fig2"):
        need(0)
    elif tag == "R":
        need(1)
        if params[0] < 0:
            raise ValueError("R_i needs i >= 0")
    elif tag in ("S", "Sprime"):
        need(1)
        if params[0] < 1:
            raise ValueError(f"{tag} needs i >= 1")
    elif tag == "Sdoubleprime":
        need(1)
        if params[0] < 2:
            raise ValueError("S_i'' needs i >= 2")
    elif tag == "Q":
        need(1)
        if params[0] < 1:
            raise ValueError("Q_k needs k >= 1")
    elif tag == "T":
        need(2)
        if not (params[0] >= params[1] >= 0):
            raise ValueError("T_{i,j} needs i >= j >= 0")


def family_vertex_count(fid: FamilyId) -> int:
    tag, p = fid.tag, fid.params
    if tag in ("K13",):
        return 4
    if tag in ("K14", "K14star", "K23star"):
        return 5
    if tag in ("K24star", "G1", "Fig2"):
        return 6
    if tag == "R":
        return 2 * p[0] + 5
    if tag in ("S", "Sprime", "Sdoubleprime"):
        return 2 * p[0] + 4
    if tag == "Q":
        return 2 * p[0] + 3
    return 2 * p[0] + 2 * p[1] + 6  # T


# ---------------------------------------------------------------------------
# generators

def _gen_r(i: int) -> Graph:
    # Bottom path b_0..b_{i+2}; pendant tops on b_1 and b_{i+1}; triangle top
    # t_k over each consecutive pair (b_k, b_{k+1}), k = 1..i.
    nb = i + 3
    edges = [(k, k + 1) for k in range(nb - 1)]
    labels = [f"b{k}" for k in range(nb)]
    nid = nb
    edges.append((nid, 1))
    labels.append("t0")
    nid += 1
    for k in range(1, i + 1):
        edges += [(nid, k), (nid, k + 1)]
        labels.append(f"t{k}")
        nid += 1
    edges.append((nid, i + 1))
    labels.append(f"t{i + 1}")
    return Graph(nid + 1, edges, labels)


def _gen_q(k: int) -> Graph:
    # R_k minus a pendant bottom and a pendant top sharing a neighbor.
    # Bottom path p_0..p_{k+1}; triangle top q_m over (p_{m-1}, p_m); pendant
    # top on p_k.  Special vertices: v = p_0 and its degree-2 neighbor w = q_1.
    nb = k + 2
    edges = [(m, m + 1) for m in range(nb - 1)]
    labels = [f"p{m}" for m in range(nb)]
    labels[0] = "p0(v)"
    nid = nb
    for m in range(1, k + 1):
        edges += [(nid, m - 1), (nid, m)]
        labels.append(f"q{m}(w)" if m == 1 else f"q{m}")
        nid += 1
    edges.append((nid, k))
    labels.append(f"q{k + 1}")
    return Graph(nid + 1, edges, labels)


def _q_specials(k: int) -> tuple[int, int]:
    """(v, w) vertex ids of Q_k as produced by _gen_q."""
    return 0, k + 2


def _gen_s(i: int) -> Graph:
    # Bottom path b_0..b_{i+1}; top m_0 over (b_0, b_1); triangle top m_k over
    # (b_k, b_{k+1}) for k < i; pendant top m_i on b_i; apex adjacent to
    # m_0, m_1 and b_1.
    nb = i + 2
    edges = [(k, k + 1) for k in range(nb - 1)]
    labels = [f"b{k}" for k in range(nb)]
    nid = nb
    tops = []
    for k in range(i + 1):
        if k == i:
            edges.append((nid, i))
        else:
            edges += [(nid, k), (nid, k + 1)]
        tops.append(nid)
        labels.append(f"m{k}")
        nid += 1
    apex = nid
    edges += [(apex, tops[0]), (apex, tops[1]), (apex, 1)]
    labels.append("apex")
    return Graph(apex + 1, edges, labels)


def _gen_sprime(i: int) -> Graph:
    # Q_i plus a vertex z joined to both special vertices and their unique
    # common neighbor.
    q = _gen_q(i)
    v, w = _q_specials(i)
    common = 1  # p_1, the only common neighbor of p_0 and q_1
    z = q.n
    edges = q.edges() + [(z, v), (z, w), (z, common)]
    labels = list(q.labels) + ["z"]
    return Graph(q.n + 1, edges, labels)


def _gen_sdoubleprime(i: int) -> Graph:
    # S_i plus the arc from the apex to b_2.
    s = _gen_s(i)
    apex = s.n - 1
    return Graph(s.n, s.edges() + [(apex, 2)], list(s.labels))


def _gen_t(i: int, j: int) -> Graph:
    if i == 0 and j == 0:
        edges = [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2), (5, 1), (5, 2)]
        return Graph(6, edges, ["b0", "b1", "b2", "b3", "tL", "tR"])
    nb = i + j + 4
    edges = [(k, k + 1) for k in range(nb - 1)]
    labels = [f"b{k}" for k in range(nb)]
    nid = nb
    edges.append((nid, 1))
    labels.append("tL")
    nid += 1
    for k in range(1, i + 1):
        edges += [(nid, k), (nid, k + 1)]
        if k == i:
            edges.append((nid, i + 2))  # w_i joined across to v_j's side
            labels.append(f"l{k}(w)")
        else:
            labels.append(f"l{k}")
        nid += 1
    if j == 0:
        # Right side degenerates to a claw centered at b_{i+2}: one extra top
        # adjacent to b_{i+1} and b_{i+2}.
        edges += [(nid, i + 1), (nid, i + 2)]
        labels.append("a2")
        nid += 1
    else:
        for k in range(i + 2, i + j + 2):
            edges += [(nid, k), (nid, k + 1)]
            if k == i + 2:
                edges.append((nid, i + 1))  # w_j joined across to v_i
                labels.append(f"r{k}(w)")
            else:
                labels.append(f"r{k}")
            nid += 1
        edges.append((nid, i + j + 2))
        labels.append("tR")
        nid += 1
    return Graph(nid, edges, labels)


def _gen_star(leaves: int, extra: list[tuple[int, int]] = ()) -> Graph:
    edges = [(0, k) for k in range(1, leaves + 1)] + list(extra)
    labels = ["c"] + [f"a{k}" for k in range(1, leaves + 1)]
    return Graph(leaves + 1, edges, labels)


def _gen_k23star() -> Graph:
    edges = [(0, 1)] + [(t, b) for t in (0, 1) for b in (2, 3, 4)]
    return Graph(5, edges, ["s", "t", "p", "q", "r"])


def _gen_k24star() -> Graph:
    # As drawn: two adjacent tops, two bottoms adjacent to both, and one
    # pendant bottom on each top.
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 5)]
    return Graph(6, edges, ["s", "t", "p", "q", "ps", "pt"])


def _gen_g1() -> Graph:
    k = _gen_k23star()
    z = k.n
    return Graph(k.n + 1, k.edges() + [(z, 0), (z, 2)], list(k.labels) + ["z"])


def _gen_fig2() -> Graph:
    star = _gen_star(4, extra=[(1, 2)])  # K_{1,4}*; triangle c-a1-a2
    z = star.n
    return Graph(star.n + 1, star.edges() + [(z, 1)], list(star.labels) + ["z"])


def generate(fid: FamilyId) -> Graph:
    tag, p = fid.tag, fid.params
    if tag == "K13":
        return _gen_star(3)
    if tag == "K14":
        return _gen_star(4)
    if tag == "K14star":
        return _gen_star(4, extra=[(1, 2)])
    if tag == "K23star":
        return _gen_k23star()
    if tag == "K24star":
        return _gen_k24star()
    if tag == "R":
        return _gen_r(p[0])
    if tag == "S":
        return _gen_s(p[0])
    if tag == "Sprime":
        return _gen_sprime(p[0])
    if tag == "Sdoubleprime":
        return _gen_sdoubleprime(p[0])
    if tag == "Q":
        return _gen_q(p[0])
    if tag == "T":
        return _gen_t(*p)
    if tag == "G1":
        return _gen_g1()
    return _gen_fig2()


def q_special_vertices(k: int) -> tuple[int, int]:
    """Ids of the special vertices (v, w) in generate(FamilyId("Q", (k,)))."""
    _validate_params("Q", (k,))
    return _q_specials(k)


# ---------------------------------------------------------------------------
# induced-subgraph detection

@dataclass(frozen=True)
class Embedding:
    """Injective edge-and-nonedge-preserving map of a family member into a host."""

    family: FamilyId
    mapping: tuple[tuple[int, int], ...]  # (member vertex, host vertex), sorted

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def verify(self, host: Graph) -> bool:
        member = generate(self.family)
        m = self.as_dict()
        if len(m) != member.n or len(set(m.values())) != member.n:
            return False
        if any(not (0 <= h < host.n) for h in m.values()):
            return False
        return all(member.adjacent(a, b) == host.adjacent(m[a], m[b])
                   for a in range(member.n) for b in range(a + 1, member.n))


def find_induced(host: Graph, pattern: Graph) -> Optional[dict[int, int]]:
    """First induced embedding of ``pattern`` into ``host``, or None.

    Backtracking in VF2 style: pattern vertices are matched most-constrained
    first, host candidates are pruned by degree and by adjacency consistency
    with everything already mapped.
    """
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return {}

    order: list[int] = []
    placed: set[int] = set()
    for _ in range(pattern.n):
        best = max(
            (p for p in pattern.vertices if p not in placed),
            key=lambda p: (len(pattern.neighbors(p) & placed), pattern.degree(p), -p))
        order.append(best)
        placed.add(best)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(depth: int) -> bool:
        if depth == pattern.n:
            return True
        p = order[depth]
        p_nbrs = pattern.neighbors(p)
        for c in host.vertices:
            if c in used or host.degree(c) < pattern.degree(p):
                continue
            ok = True
            for q, h in mapping.items():
                if (q in p_nbrs) != host.adjacent(c, h):
                    ok = False
                    break
            if ok:
                mapping[p] = c
                used.add(c)
                if extend(depth + 1):
                    return True
                del mapping[p]
                used.discard(c)
        return False

    return dict(mapping) if extend(0) else None


def forbidden_members(which: str, max_n: int) -> list[FamilyId]:
    """Members of the chosen forbidden list with at most max_n vertices,
    smallest first.

    "mainthm": {K_{2,3}*} + R + S + S' + T   (twin-free characterization)
    "maincoro": {G_1} + R + S + S'' + T      (general characterization)
    """
    if which not in ("mainthm", "maincoro"):
        raise ValueError(f"unknown forbidden list {which!r}")
    out = []
    if which == "mainthm":
        out.append(FamilyId("K23star"))
    else:
        out.append(FamilyId("G1"))
    i = 0
    while 2 * i + 5 <= max_n:
        out.append(FamilyId("R", (i,)))
        i += 1
    i = 1
    while 2 * i + 4 <= max_n:
        out.append(FamilyId("S", (i,)))
        i += 1
    if which == "mainthm":
        i = 1
        while 2 * i + 4 <= max_n:
            out.append(FamilyId("Sprime", (i,)))
            i += 1
    else:
        i = 2
        while 2 * i + 4 <= max_n:
            out.append(FamilyId("Sdoubleprime", (i,)))
            i += 1
    i = 0
    while 2 * i + 6 <= max_n:
        for j in range(0, i + 1):
            if 2 * i + 2 * j + 6 <= max_n:
                out.append(FamilyId("T", (i, j)))
        i += 1
    order = {t: k for k, t in enumerate(_TAGS)}
    out.sort(key=lambda f: (family_vertex_count(f), order[f.tag], f.params))
    return [f for f in out if family_vertex_count(f) <= max_n]


def find_forbidden(g: Graph, which: str) -> Optional[Embedding]:
    """Smallest member of the chosen forbidden list induced in g, or None."""
    for fid in forbidden_members(which, g.n):
        hit = find_induced(g, generate(fid))
        if hit is not None:
            return Embedding(fid, tuple(sorted(hit.items())))
    return None
