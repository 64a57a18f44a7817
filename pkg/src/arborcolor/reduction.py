"""Reduction traces, coloring enumeration and the 2^(n/9) certificate.

``reduce`` repeatedly triangulates the current graph, finds a reducible
configuration and deletes its vertices until at most nine remain.  Replaying
the trace backwards with :func:`~arborcolor.coloring.iter_extensions` turns
each base coloring into many colorings of the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

from .coloring import Coloring, Lists, brute_force_colorings, count_extensions, greedy_color
from .coloring import is_arboreal, iter_extensions
from .config_match import Configuration, Matching, find_configuration, load_catalog
from .graph_core import EmbeddedGraph, GraphError, delete_vertices, is_triangulation, triangulate

BASE_THRESHOLD = 9


class ExhaustedBeforeK(GraphError):
    def __init__(self, found: int, k: int):
        super().__init__(f"only {found} colorings exist along this trace, {k} requested")
        self.found = found
        self.k = k


class UnverifiedStep(GraphError):
    pass


def _by_id(catalog: Sequence[Configuration]) -> Dict[str, Configuration]:
    return {C.id: C for C in catalog}


def find_reducible(G: EmbeddedGraph, catalog: Optional[Sequence[Configuration]] = None
                   ) -> Tuple[str, Matching]:
    """A reducible configuration in G, restricted to the vertices it deletes.

    A Q23 match is reported as Q23prime (pendant dropped).  Vertices marked
    ``keep`` are dropped from the matching in the same way.
    """
    catalog = load_catalog() if catalog is None else catalog
    cid, M = find_configuration(G, catalog)
    C = _by_id(catalog)[cid]
    if cid == "Q23" and "Q23prime" in _by_id(catalog):
        cid = "Q23prime"
    return cid, Matching(cid, {a: M.h[a] for a in C.removed})


@dataclass(frozen=True)
class ReductionStep:
    triangulation: EmbeddedGraph
    config_id: str
    matching: Matching
    removed: FrozenSet[int]


@dataclass
class ReductionTrace:
    source: EmbeddedGraph
    steps: List[ReductionStep]
    base: EmbeddedGraph
    base_colorings: List[Coloring]
    base_source: str  # "brute" or "greedy"

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def final_triangulation(self) -> EmbeddedGraph:
        return self.steps[0].triangulation if self.steps else self.base


def reduce(G: EmbeddedGraph, L: Optional[Lists] = None,
           catalog: Optional[Sequence[Configuration]] = None,
           threshold: int = BASE_THRESHOLD, base: str = "brute") -> ReductionTrace:
    catalog = load_catalog() if catalog is None else catalog
    steps: List[ReductionStep] = []
    current = G
    while current.n > threshold:
        T = current if is_triangulation(current) else triangulate(current)
        cid, M = find_reducible(T, catalog)
        removed = M.image()
        steps.append(ReductionStep(T, cid, M, removed))
        current = delete_vertices(T, removed)
    if base == "brute":
        colorings = brute_force_colorings(current, L, listing=True)
    elif base == "greedy":
        colorings = [greedy_color(current, L)]
    else:
        raise ValueError(f"unknown base source {base!r}")
    return ReductionTrace(G, steps, current, colorings, base)


def _expand(trace: ReductionTrace, L: Optional[Lists], level: int, f: Coloring) -> Iterator[Coloring]:
    # steps are undone from the last recorded one back to the first
    if level < 0:
        yield f
        return
    step = trace.steps[level]
    for g in iter_extensions(step.triangulation, step.removed, f, L):
        yield from _expand(trace, L, level - 1, g)


def iter_trace_colorings(trace: ReductionTrace, L: Optional[Lists] = None) -> Iterator[Coloring]:
    for f in trace.base_colorings:
        yield from _expand(trace, L, len(trace.steps) - 1, f)


def enumerate_colorings(G: EmbeddedGraph, L: Optional[Lists], k: int,
                        trace: Optional[ReductionTrace] = None,
                        catalog: Optional[Sequence[Configuration]] = None) -> Iterator[Coloring]:
    """Yield ``k`` distinct arboreal colorings of G, checking each one."""
    trace = reduce(G, L, catalog) if trace is None else trace
    check_on = trace.final_triangulation
    found = 0
    for f in islice(iter_trace_colorings(trace, L), k):
        if not is_arboreal(check_on, f):  # would mean an extension bug
            raise GraphError("enumerated coloring is not arboreal")
        found += 1
        yield f
    if found < k:
        raise ExhaustedBeforeK(found, k)


# certificate ---------------------------------------------------------------------


@dataclass
class StepCheck:
    index: int
    bases_tested: int
    min_extensions: int
    exhaustive: bool


def verify_trace(trace: ReductionTrace, L: Optional[Lists] = None,
                 samples: Optional[int] = 64) -> List[StepCheck]:
    """Minimum number of extensions at every step over the colorings reaching it.

    The colorings offered to step ``i`` are those produced by undoing the
    later steps.  With ``samples=None`` every one of them is tried.
    """
    checks = []
    for i, step in enumerate(trace.steps):
        sub = ReductionTrace(trace.source, trace.steps[i + 1:], trace.base,
                             trace.base_colorings, trace.base_source)
        pool = iter_trace_colorings(sub, L)
        exhaustive = True
        if samples is not None:
            pool = islice(pool, samples + 1)
        tested, least = 0, None
        for f in pool:
            if samples is not None and tested == samples:
                exhaustive = False
                break
            c = count_extensions(step.triangulation, step.removed, f, L)
            least = c if least is None else min(least, c)
            tested += 1
        checks.append(StepCheck(i, tested, least if least is not None else 0, exhaustive))
    return checks


@dataclass(frozen=True)
class Certificate:
    steps: int
    base_count: int
    n: int
    exhaustive: bool

    @property
    def exponent(self) -> float:
        """log2 of the certified lower bound, ``steps + log2(base_count)``."""
        return self.steps + math.log2(self.base_count) if self.base_count else float("-inf")

    @property
    def bound(self) -> int:
        return (1 << self.steps) * self.base_count

    def meets_target(self) -> bool:
        """Exact test of ``2^steps * base_count >= 2^(n/9)``."""
        return self.bound ** 9 >= 2 ** self.n


def certificate_exponent(trace: ReductionTrace, per_step_min_extensions: Mapping[int, int] | Sequence[StepCheck],
                         exhaustive: Optional[bool] = None) -> Certificate:
    if isinstance(per_step_min_extensions, Mapping):
        mins = dict(per_step_min_extensions)
        exh = bool(exhaustive)
    else:
        mins = {c.index: c.min_extensions for c in per_step_min_extensions}
        exh = all(c.exhaustive for c in per_step_min_extensions) if exhaustive is None else exhaustive
    for i in range(len(trace.steps)):
        if mins.get(i, 0) < 2:
            raise UnverifiedStep(f"step {i} ({trace.steps[i].config_id}) has "
                                 f"{mins.get(i, 'no')} verified extensions")
    exact_base = trace.base_source == "brute"
    cert = Certificate(len(trace.steps), len(trace.base_colorings), trace.n, exh and exact_base)
    if cert.exhaustive and not cert.meets_target():
        raise GraphError(f"certificate 2^{cert.steps} * {cert.base_count} misses 2^({cert.n}/9)")
    return cert


def target_count(n: int) -> int:
    """Smallest integer >= 2^(n/9), computed exactly."""
    k = 1
    while k ** 9 < 2 ** n:
        k += 1
    return k


# static Basic Lemma orders ---------------------------------------------------------


def basic_lemma_order(C: Configuration) -> Optional[Tuple[str, ...]]:
    """An order v1..vk of the deleted vertices meeting both Basic Lemma conditions.

    Degrees are taken at the largest value each constraint admits.  Vertex
    ``vi`` loses one degree for each configuration neighbour that comes later
    in the order; it must end at most 5, and some vertex at most 3.  Returns
    None when no order exists.
    """
    names = C.removed
    idx = {a: i for i, a in enumerate(names)}
    top = [C.delta[a].highest for a in names]
    nbr_mask = [0] * len(names)
    for a, b in C.edges:
        if a in idx and b in idx:
            nbr_mask[idx[a]] |= 1 << idx[b]
            nbr_mask[idx[b]] |= 1 << idx[a]
    full = (1 << len(names)) - 1

    # Build from the end: `later` holds the vertices already placed after.
    @lru_cache(maxsize=None)
    def place(later: int, have_small: bool) -> Optional[Tuple[int, ...]]:
        if later == full:
            return () if have_small else None
        for i in range(len(names)):
            if later >> i & 1:
                continue
            d = top[i] - bin(nbr_mask[i] & later).count("1")
            if d <= 5:
                rest = place(later | 1 << i, have_small or d <= 3)
                if rest is not None:
                    return rest + (i,)
        return None

    got = place(0, False)
    return None if got is None else tuple(names[i] for i in got)
