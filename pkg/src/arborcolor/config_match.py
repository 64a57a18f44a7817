"""Reducible-configuration catalog and the containment test.

A configuration is a small plane graph C with a degree constraint per vertex.
G contains C when an injective map sends edges to edges, every internal face
of C to a face of G, and every vertex to a vertex whose degree in G satisfies
its constraint.  Faces are compared as undirected cyclic walks, so a match is
accepted up to reflection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import permutations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .graph_core import EmbeddedGraph, edge_key, is_triangulation


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class DeltaBelowDegree(ValueError):
    pass


class NotATriangulation(ValueError):
    pass


class NoConfigurationFound(RuntimeError):
    """Raised with the offending graph serialized, for investigation."""

    def __init__(self, graph_text: str):
        super().__init__("no catalog configuration matches this triangulation:\n" + graph_text)
        self.graph_text = graph_text


KINDS = ("exact", "pair", "atleast", "atmost")


@dataclass(frozen=True)
class DegreeConstraint:
    """Admissible degrees: exact k, pair k = {k-1, k}, atleast k, atmost k."""

    kind: str
    value: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown degree constraint kind {self.kind!r}")

    def satisfied(self, d: int) -> bool:
        k = self.value
        if self.kind == "exact":
            return d == k
        if self.kind == "pair":
            return d == k or d == k - 1
        if self.kind == "atleast":
            return d >= k
        return d <= k

    @property
    def lowest(self) -> int:
        return {"exact": self.value, "pair": self.value - 1}.get(self.kind, self.value)

    @property
    def highest(self) -> float:
        if self.kind == "atleast":
            return math.inf
        return self.value

    @property
    def width(self) -> float:
        return {"exact": 1, "pair": 2}.get(self.kind, math.inf)

    def __str__(self) -> str:
        return f"{self.kind} {self.value}"


def face_key(walk: Sequence[int]) -> Tuple[int, ...]:
    """Canonical form of a closed walk up to rotation and reversal."""
    k = len(walk)
    rots = [tuple(walk[i:]) + tuple(walk[:i]) for i in range(k)]
    rev = list(reversed(walk))
    rots += [tuple(rev[i:]) + tuple(rev[:i]) for i in range(k)]
    return min(rots)


@dataclass(frozen=True)
class Configuration:
    id: str
    vertices: Tuple[str, ...]
    edges: FrozenSet[Tuple[str, str]]
    internal_faces: Tuple[Tuple[str, ...], ...]
    delta: Dict[str, DegreeConstraint] = field(hash=False)
    keep: FrozenSet[str] = frozenset()
    role: str = "unavoidable"

    @property
    def family(self) -> str:
        """Catalog family, e.g. ``Q15`` for the variants ``Q15a``/``Q15b``."""
        return self.id.rstrip("abcdefgh") if self.id != "Q23prime" else self.id

    @property
    def removed(self) -> Tuple[str, ...]:
        """Vertices deleted when the configuration is reduced."""
        return tuple(v for v in self.vertices if v not in self.keep)

    def degree_in_c(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors_in_c(self, v: str) -> List[str]:
        return [b if a == v else a for a, b in self.edges if v in (a, b)]

    @property
    def search_order(self) -> Tuple[str, ...]:
        return _search_order(self)


def _search_order(C: Configuration) -> Tuple[str, ...]:
    # anchor: tightest degree constraint, then largest C-degree, then name
    def tightness(v):
        return (C.delta[v].width, -C.degree_in_c(v), C.vertices.index(v))

    order = [min(C.vertices, key=tightness)]
    placed = set(order)
    while len(order) < len(C.vertices):
        frontier = [v for v in C.vertices if v not in placed
                    and any(u in placed for u in C.neighbors_in_c(v))]
        if not frontier:
            frontier = [v for v in C.vertices if v not in placed]
        nxt = min(frontier, key=lambda v: (-sum(u in placed for u in C.neighbors_in_c(v)),)
                  + tightness(v))
        order.append(nxt)
        placed.add(nxt)
    return tuple(order)


def _check_plane(C: Configuration, lineno: int) -> None:
    for face in C.internal_faces:
        if len(face) < 3:
            raise ParseError(lineno, f"{C.id}: face {' '.join(face)} is shorter than 3")
        for i in range(len(face)):
            if edge_key(face[i], face[(i + 1) % len(face)]) not in C.edges:
                raise ParseError(lineno, f"{C.id}: face {' '.join(face)} uses a non-edge")
    uses: Dict[Tuple[str, str], int] = {}
    for face in C.internal_faces:
        for i in range(len(face)):
            e = edge_key(face[i], face[(i + 1) % len(face)])
            uses[e] = uses.get(e, 0) + 1
    if any(c > 2 for c in uses.values()):
        raise ParseError(lineno, f"{C.id}: an edge lies on more than two internal faces")
    # plane Euler relation with the unbounded face added back
    comps = _count_components(C)
    if len(C.vertices) - len(C.edges) + len(C.internal_faces) != comps:
        raise ParseError(lineno, f"{C.id}: internal faces do not form a plane embedding")


def _count_components(C: Configuration) -> int:
    parent = {v: v for v in C.vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in C.edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in C.vertices})


def parse_catalog(text: str) -> List[Configuration]:
    """Parse the line-oriented catalog format (see README)."""
    out: List[Configuration] = []
    cur = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0]
        if head == "config":
            if cur is not None:
                raise ParseError(lineno, "nested config (missing 'end')")
            if len(tok) not in (2, 3) or (len(tok) == 3 and tok[2] != "reduction"):
                raise ParseError(lineno, "expected 'config <id> [reduction]'")
            cur = {"id": tok[1], "vertices": [], "delta": {}, "keep": set(), "edges": set(),
                   "faces": [], "role": "reduction" if len(tok) == 3 else "unavoidable",
                   "line": lineno}
            continue
        if cur is None:
            raise ParseError(lineno, f"'{head}' outside a config block")
        if head == "vertex":
            if len(tok) not in (5, 6) or tok[2] != "deg" or tok[3] not in KINDS:
                raise ParseError(lineno, "expected 'vertex <name> deg <exact|pair|atleast|atmost> <k> [keep]'")
            if len(tok) == 6 and tok[5] != "keep":
                raise ParseError(lineno, f"unknown vertex flag {tok[5]!r}")
            name = tok[1]
            if name in cur["delta"]:
                raise ParseError(lineno, f"duplicate vertex {name}")
            try:
                k = int(tok[4])
            except ValueError:
                raise ParseError(lineno, f"degree bound {tok[4]!r} is not an integer") from None
            cur["vertices"].append(name)
            cur["delta"][name] = DegreeConstraint(tok[3], k)
            if len(tok) == 6:
                cur["keep"].add(name)
        elif head == "edge":
            if len(tok) != 3:
                raise ParseError(lineno, "expected 'edge <a> <b>'")
            a, b = tok[1], tok[2]
            for v in (a, b):
                if v not in cur["delta"]:
                    raise ParseError(lineno, f"unknown vertex {v}")
            if a == b:
                raise ParseError(lineno, "loop edge")
            cur["edges"].add(edge_key(a, b))
        elif head == "face":
            walk = tuple(tok[1:])
            for v in walk:
                if v not in cur["delta"]:
                    raise ParseError(lineno, f"unknown vertex {v}")
            cur["faces"].append(walk)
            for i in range(len(walk)):
                a, b = walk[i], walk[(i + 1) % len(walk)]
                if a != b:
                    cur["edges"].add(edge_key(a, b))
        elif head == "end":
            C = Configuration(
                id=cur["id"], vertices=tuple(cur["vertices"]), edges=frozenset(cur["edges"]),
                internal_faces=tuple(cur["faces"]), delta=dict(cur["delta"]),
                keep=frozenset(cur["keep"]), role=cur["role"],
            )
            if not C.vertices:
                raise ParseError(lineno, f"{C.id}: no vertices")
            for v in C.vertices:
                dc, dv = C.delta[v], C.degree_in_c(v)
                if dc.highest < dv or (dc.kind in ("exact", "pair") and dc.lowest < dv):
                    raise DeltaBelowDegree(
                        f"line {lineno}: {C.id}: delta({v}) = {dc} admits degrees below deg_C = {dv}"
                    )
            _check_plane(C, lineno)
            if any(c.id == C.id for c in out):
                raise ParseError(lineno, f"duplicate config id {C.id}")
            out.append(C)
            cur = None
        else:
            raise ParseError(lineno, f"unknown record {head!r}")
    if cur is not None:
        raise ParseError(cur["line"], f"config {cur['id']} is missing 'end'")
    return out


def serialize_catalog(catalog: Iterable[Configuration]) -> str:
    lines = []
    for C in catalog:
        lines.append(f"config {C.id}" + (" reduction" if C.role == "reduction" else ""))
        for v in C.vertices:
            lines.append(f"vertex {v} deg {C.delta[v]}" + (" keep" if v in C.keep else ""))
        in_faces = set()
        for f in C.internal_faces:
            lines.append("face " + " ".join(f))
            in_faces.update(edge_key(f[i], f[(i + 1) % len(f)]) for i in range(len(f)))
        for a, b in sorted(C.edges - in_faces):
            lines.append(f"edge {a} {b}")
        lines.append("end")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def default_catalog_text() -> str:
    return resources.files("arborcolor").joinpath("data/catalog.txt").read_text()


def load_catalog(path: Optional[str] = None) -> List[Configuration]:
    if path is None:
        return list(_default_catalog())
    with open(path) as fh:
        return parse_catalog(fh.read())


@lru_cache(maxsize=None)
def _default_catalog() -> Tuple[Configuration, ...]:
    return tuple(parse_catalog(default_catalog_text()))


# matching -------------------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    config_id: str
    h: Dict[str, int]

    def image(self, names: Optional[Iterable[str]] = None) -> FrozenSet[int]:
        if names is None:
            return frozenset(self.h.values())
        return frozenset(self.h[a] for a in names)


class _FaceIndex:
    """Face keys of G, cached per graph object."""

    _cache: Dict[int, Tuple[EmbeddedGraph, FrozenSet[Tuple[int, ...]]]] = {}

    @classmethod
    def of(cls, G: EmbeddedGraph) -> FrozenSet[Tuple[int, ...]]:
        hit = cls._cache.get(id(G))
        if hit is not None and hit[0] is G:
            return hit[1]
        keys = frozenset(face_key(f) for f in G.faces)
        if len(cls._cache) > 64:
            cls._cache.clear()
        cls._cache[id(G)] = (G, keys)
        return keys


def match_config(
    G: EmbeddedGraph,
    C: Configuration,
    within: Optional[Iterable[int]] = None,
    check_triangulation: bool = True,
) -> Optional[Matching]:
    """Return the first match of C in G, or None.

    Images are tried in increasing vertex id, one configuration vertex at a
    time in ``C.search_order``; the result is therefore the lexicographically
    smallest image tuple in that order.  ``within`` restricts images to a
    vertex subset.
    """
    if check_triangulation and not is_triangulation(G):
        raise NotATriangulation("match_config expects a triangulation")
    order = C.search_order
    faces_of_G = _FaceIndex.of(G)
    allowed = set(G.vertices) if within is None else set(within)
    pos = {a: i for i, a in enumerate(order)}
    back_nbrs = [[b for b in C.neighbors_in_c(a) if pos[b] < pos[a]] for a in order]
    faces_done = [[] for _ in order]
    for f in C.internal_faces:
        faces_done[max(pos[a] for a in f)].append(f)
    deg = {v: G.degree(v) for v in allowed}
    h: Dict[str, int] = {}
    used = set()

    def candidates(i: int):
        a = order[i]
        dc = C.delta[a]
        if back_nbrs[i]:
            pool = G.adjacency[h[back_nbrs[i][0]]]
        else:
            pool = allowed
        for x in sorted(pool):
            if x in used or x not in allowed or not dc.satisfied(deg[x]):
                continue
            if all(G.has_edge(x, h[b]) for b in back_nbrs[i][1:]):
                yield x

    def faces_ok(i: int) -> bool:
        return all(face_key([h[a] for a in f]) in faces_of_G for f in faces_done[i])

    def search(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for x in candidates(i):
            h[a] = x
            used.add(x)
            if faces_ok(i) and search(i + 1):
                return True
            used.discard(x)
            del h[a]
        return False

    if search(0):
        return Matching(C.id, {a: h[a] for a in C.vertices})
    return None


def verify_matching(G: EmbeddedGraph, C: Configuration, M: Matching) -> bool:
    """Independent check of conditions (i)-(iii) for a claimed match."""
    h = M.h
    if set(h) != set(C.vertices) or len(set(h.values())) != len(h):
        return False
    if any(x not in G for x in h.values()):
        return False
    if not all(G.has_edge(h[a], h[b]) for a, b in C.edges):
        return False
    walks = [list(f) for f in G.faces]
    for f in C.internal_faces:
        img = [h[a] for a in f]
        if not any(_same_cyclic(img, w) for w in walks):
            return False
    return all(C.delta[a].satisfied(G.degree(h[a])) for a in C.vertices)


def _same_cyclic(a: List[int], b: List[int]) -> bool:
    if len(a) != len(b):
        return False
    k = len(a)
    for rev in (a, a[::-1]):
        for s in range(k):
            if all(rev[(s + i) % k] == b[i] for i in range(k)):
                return True
    return False


def brute_force_match(G: EmbeddedGraph, C: Configuration) -> Optional[Matching]:
    """All-injections oracle; returns the lexicographically least match in search order."""
    order = C.search_order
    for img in permutations(sorted(G.vertices), len(order)):
        M = Matching(C.id, dict(zip(order, img)))
        if verify_matching(G, C, M):
            return Matching(C.id, {a: M.h[a] for a in C.vertices})
    return None


def find_configuration(
    G: EmbeddedGraph, catalog: Sequence[Configuration]
) -> Tuple[str, Matching]:
    """First unavoidable catalog entry (in catalog order) contained in G."""
    if not is_triangulation(G):
        raise NotATriangulation("find_configuration expects a triangulation")
    for C in catalog:
        if C.role != "unavoidable":
            continue
        M = match_config(G, C, check_triangulation=False)
        if M is not None:
            return C.id, M
    from .io import format_graph

    raise NoConfigurationFound(format_graph(G))
