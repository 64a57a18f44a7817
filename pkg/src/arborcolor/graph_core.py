"""Embedded graphs on the sphere and the projective plane.

An embedding is a rotation system (clockwise neighbour order at every vertex)
plus an edge signature: edges with signature -1 reverse the local orientation
when crossed.  Faces are traced on the orientation double cover, which treats
plane and projective inputs uniformly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

PLANE = "plane"
PROJECTIVE = "projective"
SURFACES = (PLANE, PROJECTIVE)
EULER_CHAR = {PLANE: 2, PROJECTIVE: 1}


class GraphError(ValueError):
    pass


class InconsistentRotation(GraphError):
    pass


class NonSimple(GraphError):
    pass


class EulerMismatch(GraphError):
    pass


class CannotTriangulateSimply(GraphError):
    pass


class ProjectiveNotTriangulable(GraphError):
    """A projective embedding has a face whose corners are pairwise adjacent."""


Corner = Tuple[int, int]  # (vertex, sheet of the double cover: +1 or -1)


def edge_key(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _trace_faces(
    rotation: Mapping[int, Sequence[int]], negative: frozenset
) -> List[List[Corner]]:
    """Trace the faces of a signed rotation system.

    Each face of the surface lifts to two mirror faces of the double cover; one
    representative is kept per pair.  A face is returned as its list of
    corners; the previous corner's vertex is the walk predecessor.
    """
    index = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()}

    def sign(u: int, v: int) -> int:
        return -1 if edge_key(u, v) in negative else 1

    def step(u: int, s: int, v: int) -> Tuple[int, int, int]:
        t = s * sign(u, v)
        nbrs = rotation[v]
        i = index[v][u]
        w = nbrs[(i + t) % len(nbrs)]
        return v, t, w

    used = set()
    faces = []
    for v0 in sorted(rotation):
        for s0 in (1, -1):
            for w0 in rotation[v0]:
                start = (v0, s0, w0)
                if start in used:
                    continue
                corners = []
                dart = start
                while True:
                    u, s, v = dart
                    used.add(dart)
                    t = s * sign(u, v)
                    # the mirror image of dart (u,s)->(v,t) is (v,-t)->(u,-s)
                    used.add((v, -t, u))
                    corners.append((u, s))
                    dart = step(u, s, v)
                    if dart == start:
                        break
                faces.append(corners)
    return faces


def _components(rotation: Mapping[int, Sequence[int]]) -> List[List[int]]:
    seen = set()
    comps = []
    for r in sorted(rotation):
        if r in seen:
            continue
        seen.add(r)
        comp = [r]
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for y in rotation[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def _switching(
    rotation: Mapping[int, Sequence[int]], negative: frozenset
) -> Optional[Dict[int, int]]:
    """Return a vertex switching making every signature +1, or None."""
    side: Dict[int, int] = {}
    for comp in _components(rotation):
        side[comp[0]] = 1
        queue = deque([comp[0]])
        while queue:
            x = queue.popleft()
            for y in rotation[x]:
                want = side[x] * (-1 if edge_key(x, y) in negative else 1)
                if y not in side:
                    side[y] = want
                    queue.append(y)
                elif side[y] != want:
                    return None
    return side


class EmbeddedGraph:
    """A simple graph with a fixed cellular embedding.

    Instances are treated as immutable; every operation returns a new graph.
    Vertex ids are kept as given so that deletions can be replayed.
    """

    __slots__ = ("rotation", "negative", "surface", "_faces", "_corners", "_adj")

    def __init__(
        self,
        rotation: Mapping[int, Sequence[int]],
        negative: Iterable[Tuple[int, int]] = (),
        surface: str = PLANE,
        check: bool = True,
    ):
        if surface not in SURFACES:
            raise GraphError(f"unknown surface {surface!r}")
        self.rotation: Dict[int, Tuple[int, ...]] = {
            v: tuple(nbrs) for v, nbrs in sorted(rotation.items())
        }
        self.negative = frozenset(edge_key(u, v) for u, v in negative)
        self.surface = surface
        self._adj = {v: frozenset(n) for v, n in self.rotation.items()}
        if check:
            self._validate_rotation()
        self._corners = _trace_faces(self.rotation, self.negative)
        self._faces = tuple(tuple(v for v, _ in f) for f in self._corners)
        if check:
            self._validate_euler()

    def _validate_rotation(self) -> None:
        for v, nbrs in self.rotation.items():
            if v in nbrs:
                raise NonSimple(f"loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise NonSimple(f"parallel edges at vertex {v}")
            for u in nbrs:
                if u not in self.rotation or v not in self._adj[u]:
                    raise InconsistentRotation(f"{v} lists {u} but {u} does not list {v}")
        for u, v in self.negative:
            if v not in self._adj.get(u, ()):
                raise InconsistentRotation(f"signature given for non-edge {u} {v}")
        if self.surface == PLANE and self.negative:
            raise GraphError("negative signatures are only allowed on the projective plane")

    def _validate_euler(self) -> None:
        comps = _components(self.rotation)
        chi = self.n - self.m + self.num_faces + sum(1 for c in comps if len(c) == 1)
        want = 2 * len(comps) - (1 if self.surface == PROJECTIVE else 0)
        if chi != want:
            raise EulerMismatch(
                f"n - m + f = {chi} with {len(comps)} component(s); "
                f"expected {want} on the {self.surface}"
            )

    # basic accessors -----------------------------------------------------

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(self.rotation)

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation.values()) // 2

    def __len__(self) -> int:
        return len(self.rotation)

    def __contains__(self, v: object) -> bool:
        return v in self.rotation

    @property
    def faces(self) -> Tuple[Tuple[int, ...], ...]:
        return self._faces

    @property
    def num_faces(self) -> int:
        return len(self._faces)

    @property
    def adjacency(self) -> Dict[int, frozenset]:
        return self._adj

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> List[Tuple[int, int]]:
        return sorted({edge_key(u, v) for u in self.rotation for v in self.rotation[u]})

    def sign(self, u: int, v: int) -> int:
        return -1 if edge_key(u, v) in self.negative else 1

    def is_connected(self) -> bool:
        return len(_components(self.rotation)) <= 1

    def euler_characteristic(self) -> int:
        return self.n - self.m + self.num_faces

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return (
            self.rotation == other.rotation
            and self.negative == other.negative
            and self.surface == other.surface
        )

    def __hash__(self) -> int:
        return hash((tuple(self.rotation.items()), self.negative, self.surface))

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.n}, m={self.m}, f={self.num_faces}, {self.surface})"

    def relabel(self, mapping: Mapping[int, int]) -> "EmbeddedGraph":
        rot = {mapping[v]: [mapping[u] for u in nbrs] for v, nbrs in self.rotation.items()}
        neg = [(mapping[u], mapping[v]) for u, v in self.negative]
        return EmbeddedGraph(rot, neg, self.surface)

    def mirror(self) -> "EmbeddedGraph":
        """The reflected embedding (every rotation reversed)."""
        rot = {v: list(reversed(nbrs)) for v, nbrs in self.rotation.items()}
        return EmbeddedGraph(rot, self.negative, self.surface)


def build_embedded(
    rotations: Mapping[int, Sequence[int]],
    signatures: Optional[Mapping[Tuple[int, int], int]] = None,
    surface: str = PLANE,
) -> EmbeddedGraph:
    """Build an embedded graph from clockwise rotations and edge signs."""
    negative = []
    for (u, v), s in (signatures or {}).items():
        if s not in (1, -1):
            raise GraphError(f"signature of {u} {v} must be +1 or -1, got {s}")
        if s == -1:
            negative.append((u, v))
    return EmbeddedGraph(rotations, negative, surface)


def is_triangulation(G: EmbeddedGraph) -> bool:
    return G.n >= 3 and G.is_connected() and all(len(f) == 3 for f in G.faces)


def delete_vertices(G: EmbeddedGraph, S: Iterable[int]) -> EmbeddedGraph:
    S = set(S)
    if not S:
        return G
    rot = {v: [u for u in nbrs if u not in S] for v, nbrs in G.rotation.items() if v not in S}
    neg = frozenset(e for e in G.negative if e[0] not in S and e[1] not in S)
    if G.surface == PROJECTIVE:
        side = _switching(rot, neg)
        if side is not None:
            # orientable after deletion: switch to an all-positive plane embedding
            rot = {v: (nbrs if side[v] == 1 else nbrs[::-1]) for v, nbrs in rot.items()}
            return EmbeddedGraph(rot, (), PLANE)
    return EmbeddedGraph(rot, neg, G.surface)


@dataclass(frozen=True)
class DegeneracyOrder:
    order: Tuple[int, ...]
    back_degree: Dict[int, int]

    @property
    def max_back_degree(self) -> int:
        return max(self.back_degree.values(), default=0)


def degeneracy_order(G) -> DegeneracyOrder:
    """Peel minimum-degree vertices (smallest id on ties).

    back_degree[v] is the number of neighbours of v that come later in the
    order, i.e. the degree of v at the moment it is removed.
    """
    adj = adjacency_of(G)
    deg = {v: len(adj[v]) for v in adj}
    buckets: Dict[int, set] = {}
    for v, d in deg.items():
        buckets.setdefault(d, set()).add(v)
    removed = set()
    order = []
    back = {}
    for _ in range(len(adj)):
        d = min(k for k, b in buckets.items() if b)
        v = min(buckets[d])
        buckets[d].discard(v)
        removed.add(v)
        order.append(v)
        back[v] = d
        for u in adj[v]:
            if u not in removed:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets.setdefault(deg[u], set()).add(u)
    return DegeneracyOrder(tuple(order), back)


def adjacency_of(G) -> Mapping[int, Iterable[int]]:
    """Adjacency view of an EmbeddedGraph or of a plain ``{v: neighbours}`` map."""
    if isinstance(G, EmbeddedGraph):
        return G.adjacency
    return G


# triangulation ---------------------------------------------------------------


def _insert_after(nbrs: List[int], anchor: int, new: int, sheet: int) -> None:
    # on the negative sheet the cover rotation runs backwards
    i = nbrs.index(anchor)
    nbrs.insert(i + 1 if sheet == 1 else i, new)


def triangulate(G: EmbeddedGraph) -> EmbeddedGraph:
    """Add edges inside faces until every face is a triangle.

    Components are first joined by single edges.  Each face is then split by
    a fan of diagonals from a corner whose fan creates no parallel edge, or
    else ear by ear, or else by any legal chord.  The input is returned
    unchanged when it already is a triangulation.
    """
    if is_triangulation(G):
        return G
    if G.n < 3:
        raise CannotTriangulateSimply(f"cannot triangulate a graph on {G.n} vertices")
    rot = {v: list(nbrs) for v, nbrs in G.rotation.items()}
    adj = {v: set(nbrs) for v, nbrs in rot.items()}
    negative = set(G.negative)

    comps = _components(rot)
    for comp in comps[1:]:
        a, b = comps[0][0], comp[0]
        rot[a].append(b)
        rot[b].append(a)
        adj[a].add(b)
        adj[b].add(a)

    def add_chord(face: List[Corner], i: int, j: int) -> None:
        (a, sa), (b, sb) = face[i], face[j]
        _insert_after(rot[a], face[i - 1][0], b, sa)
        _insert_after(rot[b], face[j - 1][0], a, sb)
        adj[a].add(b)
        adj[b].add(a)
        if sa * sb == -1:
            negative.add(edge_key(a, b))

    def legal(a: int, b: int) -> bool:
        return a != b and b not in adj[a]

    def fan_apex(face: List[Corner]) -> Optional[int]:
        k = len(face)
        for i in range(k):
            a = face[i][0]
            targets = [face[(i + d) % k][0] for d in range(2, k - 1)]
            if len(set(targets)) == len(targets) and all(legal(a, t) for t in targets):
                return i
        return None

    def split(face: List[Corner]) -> None:
        while len(face) > 3:
            k = len(face)
            i = fan_apex(face)
            if i is not None:
                face[:] = face[i:] + face[:i]
                while len(face) > 3:
                    add_chord(face, 0, 2)
                    del face[1]
                return
            for i in range(k):
                if legal(face[i][0], face[(i + 2) % k][0]):
                    j = (i + 2) % k
                    add_chord(face, i, j)
                    del face[(i + 1) % k]
                    break
            else:
                for i in range(k):
                    for j in range(i + 2, k if i else k - 1):
                        if legal(face[i][0], face[j][0]):
                            add_chord(face, i, j)
                            split(face[i : j + 1])
                            face[:] = face[j:] + face[: i + 1]
                            break
                    else:
                        continue
                    break
                else:
                    if G.surface == PROJECTIVE:
                        raise ProjectiveNotTriangulable(
                            "face " + " ".join(str(v) for v, _ in face)
                            + " has pairwise adjacent corners"
                        )
                    raise CannotTriangulateSimply(
                        "no legal chord in face " + " ".join(str(v) for v, _ in face)
                    )

    for face in _trace_faces(rot, frozenset(negative)):
        if len(face) > 3:
            split(face)

    T = EmbeddedGraph(rot, negative, G.surface)
    if not is_triangulation(T):
        raise CannotTriangulateSimply("triangulation post-check failed")
    return T
