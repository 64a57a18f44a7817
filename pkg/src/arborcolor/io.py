"""Line-oriented text formats for graphs, list assignments, arcs and colorings.

Graph file::

    n 4 surface plane
    rot 0: 1 2 3
    rot 1: 0 3 2
    ...
    sign 0 3 -1          # projective only; negative-signature edges
    list 0: 1 2 3        # optional list assignment
    arc 0 1              # optional digraph arcs

``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from .graph_core import PLANE, PROJECTIVE, EmbeddedGraph, build_embedded


class FormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


_SURFACE_NAMES = {"plane": PLANE, "projective": PROJECTIVE, "projective_plane": PROJECTIVE}


@dataclass
class GraphFile:
    graph: EmbeddedGraph
    lists: Dict[int, FrozenSet[int]] = field(default_factory=dict)
    arcs: List[Tuple[int, int]] = field(default_factory=list)


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(lineno, "expected integers") from None


def parse_graph_file(text: str) -> GraphFile:
    header = None
    rot: Dict[int, List[int]] = {}
    signs: Dict[Tuple[int, int], int] = {}
    lists: Dict[int, FrozenSet[int]] = {}
    arcs: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0]
        if head == "n":
            if len(tok) != 4 or tok[2] != "surface" or tok[3] not in _SURFACE_NAMES:
                raise FormatError(lineno, "expected 'n <count> surface <plane|projective>'")
            header = (_ints(tok[1:2], lineno)[0], _SURFACE_NAMES[tok[3]])
        elif head in ("rot", "list"):
            if len(tok) < 2 or not tok[1].endswith(":"):
                raise FormatError(lineno, f"expected '{head} <v>: ...'")
            v = _ints([tok[1][:-1]], lineno)[0]
            vals = _ints(tok[2:], lineno)
            if head == "rot":
                if v in rot:
                    raise FormatError(lineno, f"duplicate rotation for vertex {v}")
                rot[v] = vals
            else:
                lists[v] = frozenset(vals)
        elif head == "sign":
            if len(tok) != 4:
                raise FormatError(lineno, "expected 'sign <u> <v> -1'")
            u, v, s = _ints(tok[1:], lineno)
            signs[(u, v)] = s
        elif head == "arc":
            if len(tok) != 3:
                raise FormatError(lineno, "expected 'arc <u> <v>'")
            u, v = _ints(tok[1:], lineno)
            arcs.append((u, v))
        else:
            raise FormatError(lineno, f"unknown record {head!r}")
    if header is None:
        raise FormatError(1, "missing header line 'n <count> surface <...>'")
    count, surface = header
    if count != len(rot):
        raise FormatError(1, f"header declares {count} vertices but {len(rot)} rotations given")
    graph = build_embedded(rot, signs, surface)
    return GraphFile(graph, lists, arcs)


def parse_graph(text: str) -> EmbeddedGraph:
    return parse_graph_file(text).graph


def format_graph(G: EmbeddedGraph, lists: Optional[Mapping[int, FrozenSet[int]]] = None,
                 arcs=()) -> str:
    surface = "plane" if G.surface == PLANE else "projective"
    lines = [f"n {G.n} surface {surface}"]
    for v, nbrs in G.rotation.items():
        lines.append(f"rot {v}: " + " ".join(map(str, nbrs)))
    for u, v in sorted(G.negative):
        lines.append(f"sign {u} {v} -1")
    for v in sorted(lists or {}):
        lines.append(f"list {v}: " + " ".join(map(str, sorted(lists[v]))))
    for u, v in arcs:
        lines.append(f"arc {u} {v}")
    return "\n".join(lines) + "\n"


def format_coloring(f: Mapping[int, int]) -> str:
    return "".join(f"{v} {f[v]}\n" for v in sorted(f))


def parse_coloring(text: str) -> Dict[int, int]:
    f: Dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) != 2:
            raise FormatError(lineno, "expected '<v> <color>'")
        v, c = _ints(tok, lineno)
        if v in f:
            raise FormatError(lineno, f"vertex {v} colored twice")
        f[v] = c
    return f


def format_colorings(fs) -> str:
    """Blocks of ``<v> <color>`` lines separated by blank lines."""
    return "\n".join(format_coloring(f) for f in fs)


def parse_colorings(text: str) -> List[Dict[int, int]]:
    blocks, cur = [], []
    for raw in text.splitlines() + [""]:
        if raw.split("#", 1)[0].strip():
            cur.append(raw)
        elif cur and not raw.strip():
            blocks.append(parse_coloring("\n".join(cur)))
            cur = []
    return blocks
