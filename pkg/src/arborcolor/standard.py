"""Small named embedded graphs used by tests, docs and the CLI."""

from __future__ import annotations

from typing import Dict, List

from .graph_core import PLANE, PROJECTIVE, EmbeddedGraph, build_embedded


def triangle() -> EmbeddedGraph:
    return build_embedded({0: [1, 2], 1: [2, 0], 2: [0, 1]})


def tetrahedron() -> EmbeddedGraph:
    return build_embedded({0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]})


def octahedron() -> EmbeddedGraph:
    return build_embedded(
        {0: [3, 4, 2, 5], 1: [3, 5, 2, 4], 2: [1, 5, 0, 4],
         3: [1, 4, 0, 5], 4: [1, 2, 0, 3], 5: [1, 3, 0, 2]}
    )


def icosahedron() -> EmbeddedGraph:
    return build_embedded(
        {0: [5, 7, 1, 2, 6], 1: [8, 2, 0, 7, 3], 2: [4, 6, 0, 1, 8],
         3: [9, 8, 1, 7, 11], 4: [10, 6, 2, 8, 9], 5: [11, 7, 0, 6, 10],
         6: [10, 5, 0, 2, 4], 7: [3, 1, 0, 5, 11], 8: [4, 2, 1, 3, 9],
         9: [4, 8, 3, 11, 10], 10: [5, 6, 4, 9, 11], 11: [10, 9, 3, 7, 5]}
    )


def k6_projective() -> EmbeddedGraph:
    """K6 triangulating the projective plane (antipodal quotient of the icosahedron)."""
    rot = {0: [5, 4, 1, 2, 3], 1: [5, 2, 0, 4, 3], 2: [4, 3, 0, 1, 5],
           3: [0, 5, 1, 4, 2], 4: [1, 3, 2, 5, 0], 5: [2, 4, 0, 3, 1]}
    neg = [(0, 3), (0, 4), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]
    return build_embedded(rot, {e: -1 for e in neg}, PROJECTIVE)


def cycle(k: int) -> EmbeddedGraph:
    return build_embedded({i: [(i + 1) % k, (i - 1) % k] for i in range(k)})


def path(k: int) -> EmbeddedGraph:
    rot: Dict[int, List[int]] = {i: [] for i in range(k)}
    for i in range(k - 1):
        rot[i].append(i + 1)
        rot[i + 1].append(i)
    return build_embedded(rot)


def complete_graph(k: int) -> Dict[int, frozenset]:
    """Abstract K_k as an adjacency map (K_7 embeds in neither surface)."""
    return {i: frozenset(j for j in range(k) if j != i) for i in range(k)}


NAMED = {
    "triangle": triangle,
    "tetrahedron": tetrahedron,
    "k4": tetrahedron,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "k6-projective": k6_projective,
}

__all__ = [
    "NAMED", "PLANE", "triangle", "tetrahedron", "octahedron", "icosahedron",
    "k6_projective", "cycle", "path", "complete_graph",
]
