"""Digraph colorings whose classes induce acyclic subdigraphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .graph_core import GraphError, adjacency_of


class DigonPresent(GraphError):
    pass


class TooLarge(GraphError):
    pass


DIGRAPH_CAP = 12


@dataclass(frozen=True)
class Digraph:
    vertices: Tuple[int, ...]
    arcs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        vs = set(self.vertices)
        for u, v in self.arcs:
            if u == v:
                raise GraphError(f"loop at {u}")
            if u not in vs or v not in vs:
                raise GraphError(f"arc ({u}, {v}) leaves the vertex set")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Tuple[int, int]], vertices: Optional[Iterable[int]] = None) -> "Digraph":
        arcs = tuple(sorted(set(map(tuple, arcs))))
        vs = set(vertices) if vertices is not None else set()
        for u, v in arcs:
            vs.update((u, v))
        return cls(tuple(sorted(vs)), arcs)

    def has_digon(self) -> bool:
        s = set(self.arcs)
        return any((v, u) in s for u, v in self.arcs)


def random_orientation(G, rng: random.Random) -> Digraph:
    """Orient every edge of G independently; the result never has digons."""
    adj = adjacency_of(G)
    arcs = []
    for u in sorted(adj):
        for v in sorted(adj[u]):
            if u < v:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph.from_arcs(arcs, adj)


def is_acyclic(vertices: Iterable[int], arcs: Iterable[Tuple[int, int]]) -> bool:
    ts: TopologicalSorter = TopologicalSorter()
    for v in vertices:
        ts.add(v)
    for u, v in arcs:
        ts.add(v, u)
    try:
        ts.prepare()
    except CycleError:
        return False
    return True


def digraph_classes_acyclic(D: Digraph, f: Mapping[int, int]) -> bool:
    classes: Dict[int, List[int]] = {}
    for v in D.vertices:
        classes.setdefault(f[v], []).append(v)
    for members in classes.values():
        inside = set(members)
        arcs = [(u, v) for u, v in D.arcs if u in inside and v in inside]
        if not is_acyclic(members, arcs):
            return False
    return True


def digraph_chromatic_brute(D: Digraph, k: int, cap: int = DIGRAPH_CAP) -> bool:
    """Whether D has a k-coloring with acyclic classes, by trying all k^n."""
    if D.has_digon():
        raise DigonPresent("digraph contains a directed 2-cycle")
    if len(D.vertices) > cap:
        raise TooLarge(f"{len(D.vertices)} vertices exceed the cap {cap}")
    if not D.vertices:
        return True
    if k < 1:
        return False
    first, rest = D.vertices[0], D.vertices[1:]
    # color 0 on the first vertex loses no generality
    for combo in product(range(k), repeat=len(rest)):
        f = {first: 0, **dict(zip(rest, combo))}
        if digraph_classes_acyclic(D, f):
            return True
    return False


def dichromatic_number(D: Digraph, cap: int = DIGRAPH_CAP) -> int:
    k = 0 if not D.vertices else 1
    while not digraph_chromatic_brute(D, k, cap):
        k += 1
    return k
