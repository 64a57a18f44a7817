"""Random and exhaustive plane triangulations.

Random ones start as a stacked triangulation (each new vertex goes into a
random face) and are then mixed by diagonal flips.  The exhaustive corpus
closes one triangulation per vertex count under flips, deduplicated by a
canonical code; the flip graph on n-vertex triangulations is connected, so
this reaches all of them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .graph_core import EmbeddedGraph, build_embedded, is_triangulation

Rotation = Dict[int, List[int]]


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    seed: int = 0
    flips: Optional[int] = None  # default 10 * n
    balanced: bool = False

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("a triangulation needs at least 3 vertices")

    @property
    def flip_count(self) -> int:
        return 10 * self.n if self.flips is None else self.flips


def _succ(nbrs: List[int], x: int) -> int:
    return nbrs[(nbrs.index(x) + 1) % len(nbrs)]


def _insert_after(nbrs: List[int], anchor: int, new: int) -> None:
    nbrs.insert(nbrs.index(anchor) + 1, new)


def stacked(n: int, rng: random.Random) -> Rotation:
    rot: Rotation = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    # faces as walks a -> b -> c, where c follows a in rot[b]
    faces: List[Tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    for x in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        _insert_after(rot[b], a, x)
        _insert_after(rot[c], b, x)
        _insert_after(rot[a], c, x)
        rot[x] = [a, c, b]
        faces[i] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
    return rot


def flip_targets(rot: Rotation, u: int, v: int) -> Tuple[int, int]:
    """The apexes ``(w, z)`` of the two triangles on edge ``uv``."""
    return _succ(rot[v], u), _succ(rot[u], v)


def flip_is_legal(rot: Rotation, u: int, v: int) -> bool:
    w, z = flip_targets(rot, u, v)
    return w != z and z not in rot[w] and len(rot[u]) > 3 and len(rot[v]) > 3


def flip_in_place(rot: Rotation, u: int, v: int) -> Tuple[int, int]:
    """Replace edge ``uv`` by the other diagonal ``wz``; caller checks legality."""
    w, z = flip_targets(rot, u, v)
    rot[u].remove(v)
    rot[v].remove(u)
    _insert_after(rot[w], v, z)
    _insert_after(rot[z], u, w)
    return w, z


def random_flips(rot: Rotation, count: int, rng: random.Random, balanced: bool = False) -> int:
    """Attempt ``count`` flips of uniformly chosen edges; returns how many happened.

    Illegal picks are skipped, not retried.  With ``balanced`` a flip is also
    skipped when it pushes the four endpoint degrees further from 6.
    """
    edges = [(u, v) for u in sorted(rot) for v in rot[u] if u < v]
    done = 0
    for _ in range(count):
        i = rng.randrange(len(edges))
        u, v = edges[i]
        if not flip_is_legal(rot, u, v):
            continue
        w, z = flip_targets(rot, u, v)
        if balanced:
            d = [len(rot[x]) for x in (u, v, w, z)]
            before = sum((k - 6) ** 2 for k in d)
            after = (d[0] - 7) ** 2 + (d[1] - 7) ** 2 + (d[2] - 5) ** 2 + (d[3] - 5) ** 2
            if after > before:
                continue
        flip_in_place(rot, u, v)
        edges[i] = (min(w, z), max(w, z))
        done += 1
    return done


def gen_triangulation(params: GeneratorParams | int, seed: int = 0, flips: Optional[int] = None,
                      balanced: bool = False) -> EmbeddedGraph:
    if not isinstance(params, GeneratorParams):
        params = GeneratorParams(params, seed, flips, balanced)
    rng = random.Random(params.seed)
    rot = stacked(params.n, rng)
    if params.n >= 5:
        random_flips(rot, params.flip_count, rng, params.balanced)
    return build_embedded(rot)


def flip(G: EmbeddedGraph, u: int, v: int) -> Optional[EmbeddedGraph]:
    """G with edge uv flipped, or None when the flip is illegal."""
    rot = {x: list(ns) for x, ns in G.rotation.items()}
    if not G.has_edge(u, v) or not flip_is_legal(rot, u, v):
        return None
    flip_in_place(rot, u, v)
    H = build_embedded(rot)
    assert is_triangulation(H)
    return H


# canonical form --------------------------------------------------------------------


def _code_from(rot: Rotation, root: int, ref: int, reverse: bool) -> Tuple[int, ...]:
    label = {root: 0}
    parent = {root: ref}
    queue = [root]
    code: List[int] = []
    for x in queue:
        nbrs = rot[x]
        i = nbrs.index(parent[x])
        seq = nbrs[i:] + nbrs[:i]
        if reverse:
            seq = seq[:1] + seq[:0:-1]
        for y in seq:
            if y not in label:
                label[y] = len(label)
                parent[y] = x
                queue.append(y)
            code.append(label[y])
        code.append(-1)
    return tuple(code)


def canonical_code(G: EmbeddedGraph | Rotation) -> Tuple[int, ...]:
    """Code identifying a connected plane embedding up to relabeling and reflection."""
    rot = G.rotation if isinstance(G, EmbeddedGraph) else G
    deg = {v: len(ns) for v, ns in rot.items()}
    best_pair = min((deg[u], deg[v]) for u in rot for v in rot[u])
    best = None
    for u in rot:
        if deg[u] != best_pair[0]:
            continue
        for v in rot[u]:
            if deg[v] != best_pair[1]:
                continue
            for rev in (False, True):
                c = _code_from(rot, u, v, rev)
                if best is None or c < best:
                    best = c
    return (len(rot),) + best


def all_triangulations(n: int) -> List[EmbeddedGraph]:
    """Every plane triangulation on n vertices (up to isomorphism), n <= ~11."""
    if n < 3:
        raise ValueError("n must be at least 3")
    start = stacked(n, random.Random(0))
    seen = {canonical_code(start): start}
    stack = [start]
    while stack:
        rot = stack.pop()
        for u in sorted(rot):
            for v in rot[u]:
                if u > v or not flip_is_legal(rot, u, v):
                    continue
                nxt = {x: list(ns) for x, ns in rot.items()}
                flip_in_place(nxt, u, v)
                key = canonical_code(nxt)
                if key not in seen:
                    seen[key] = nxt
                    stack.append(nxt)
    return [build_embedded(seen[k]) for k in sorted(seen)]


def exhaustive_corpus(max_n: int = 11, min_n: int = 4) -> Iterator[EmbeddedGraph]:
    for n in range(min_n, max_n + 1):
        yield from all_triangulations(n)
