"""Arboreal list colorings: validity, safe colors, greedy and exhaustive extension.

A coloring is arboreal when every color class induces a forest.  Colors are
ints; a list assignment maps each vertex to a set of allowed colors.  When no
lists are given every vertex gets ``{1, 2, 3}``.

``G`` may be an :class:`EmbeddedGraph` or a plain ``{v: neighbours}`` map
throughout, so the abstract ``K_7`` can be handled by the same code.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from .graph_core import GraphError, adjacency_of, degeneracy_order

Coloring = Dict[int, int]
Lists = Mapping[int, Iterable[int]]

DEFAULT_PALETTE = (1, 2, 3)
BRUTE_FORCE_CAP = 16


class PartialInput(GraphError):
    pass


class DegeneracyTooHigh(GraphError):
    pass


class TooLarge(GraphError):
    pass


class NotArboreal(GraphError):
    pass


def uniform_lists(vertices: Iterable[int], palette: Sequence[int] = DEFAULT_PALETTE) -> Dict[int, Tuple[int, ...]]:
    return {v: tuple(palette) for v in vertices}


def _lists_for(adj, L: Optional[Lists]) -> Dict[int, Tuple[int, ...]]:
    if L is None:
        return uniform_lists(adj)
    return {v: tuple(sorted(L[v])) for v in adj}


class _DSU:
    __slots__ = ("parent",)

    def __init__(self):
        self.parent: Dict[int, int] = {}

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p.get(root, root) != root:
            root = p[root]
        while x != root:
            nxt = p.get(x, x)
            p[x] = root
            x = nxt
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _class_forest(adj, f: Mapping[int, int]) -> Optional[_DSU]:
    """Union monochromatic edges among colored vertices; None if a class has a cycle."""
    dsu = _DSU()
    for u, c in f.items():
        for w in adj[u]:
            if w > u and f.get(w) == c and not dsu.union(u, w):
                return None
    return dsu


def is_arboreal(G, f: Mapping[int, int]) -> bool:
    adj = adjacency_of(G)
    missing = [v for v in adj if v not in f]
    if missing:
        raise PartialInput(f"coloring misses vertices {missing[:5]}")
    return _class_forest(adj, f) is not None


def is_partial_arboreal(G, f: Mapping[int, int]) -> bool:
    return _class_forest(adjacency_of(G), f) is not None


def respects_lists(f: Mapping[int, int], L: Optional[Lists]) -> bool:
    if L is None:
        return all(c in DEFAULT_PALETTE for c in f.values())
    return all(c in set(L[v]) for v, c in f.items())


def safe_colors(G, f: Mapping[int, int], v: int, L: Optional[Lists] = None) -> Tuple[Set[int], Set[int]]:
    """Return ``(lemma_safe, exact_safe)`` for the uncolored vertex ``v``.

    ``lemma_safe`` holds list colors used at most once around ``v``;
    ``exact_safe`` holds list colors whose neighbours of that color sit in
    pairwise different trees of the class, so coloring ``v`` closes no cycle.
    """
    adj = adjacency_of(G)
    if v in f:
        raise GraphError(f"vertex {v} is already colored")
    allowed = DEFAULT_PALETTE if L is None else L[v]
    dsu = _class_forest(adj, f)
    if dsu is None:
        raise NotArboreal("partial coloring already has a monochromatic cycle")
    lemma, exact = set(), set()
    for c in allowed:
        around = [w for w in adj[v] if f.get(w) == c]
        if len(around) <= 1:
            lemma.add(c)
        roots = [dsu.find(w) for w in around]
        if len(set(roots)) == len(roots):
            exact.add(c)
    return lemma, exact


def greedy_color(G, L: Optional[Lists] = None, rng=None) -> Coloring:
    """Color in reverse degeneracy order, taking the smallest lemma-safe color.

    Each vertex meets at most five colored neighbours, so with 3-lists some
    color appears at most once around it.  Passing a ``random.Random`` picks
    a random lemma-safe color instead.
    """
    adj = adjacency_of(G)
    order = degeneracy_order(adj)
    if order.max_back_degree > 5:
        raise DegeneracyTooHigh(f"degeneracy {order.max_back_degree} exceeds 5")
    lists = _lists_for(adj, L)
    f: Coloring = {}
    for v in reversed(order.order):
        counts: Dict[int, int] = {}
        for w in adj[v]:
            if w in f:
                counts[f[w]] = counts.get(f[w], 0) + 1
        options = list(lists[v])
        if rng is not None:
            rng.shuffle(options)
        choice = next((c for c in options if counts.get(c, 0) <= 1), None)
        if choice is None:  # only reachable with lists shorter than 3
            raise GraphError(f"no lemma-safe color at vertex {v}")
        f[v] = choice
    return f


# exhaustive extension -----------------------------------------------------------


def iter_extensions(G, S: Iterable[int], f: Mapping[int, int], L: Optional[Lists] = None) -> Iterator[Coloring]:
    """Yield every arboreal extension of ``f`` to ``S`` in lexicographic order.

    The order is over color tuples listed by ascending vertex id in ``S``.
    Equivalent to filtering the full product of the lists of ``S`` with
    :func:`is_arboreal`, but prunes as soon as a class closes a cycle.
    """
    adj = adjacency_of(G)
    S = sorted(set(S))
    lists = _lists_for(adj, L) if L is None else {v: tuple(sorted(L[v])) for v in S}
    base = {v: c for v, c in f.items() if v not in S}
    dsu = _class_forest(adj, base)
    if dsu is None:
        raise NotArboreal("base coloring is not arboreal")
    in_s = set(S)
    # colored-base roots around each S-vertex, per color
    base_roots: Dict[int, Dict[int, List[int]]] = {}
    s_nbrs: Dict[int, List[int]] = {}
    for x in S:
        per: Dict[int, List[int]] = {}
        for w in adj[x]:
            if w in base:
                per.setdefault(base[w], []).append(dsu.find(w))
        base_roots[x] = per
        s_nbrs[x] = [w for w in adj[x] if w in in_s]
    cur: Dict[int, int] = {}

    def fits(x: int, c: int) -> bool:
        labels = list(base_roots[x].get(c, ()))
        same = [y for y in s_nbrs[x] if cur.get(y) == c]
        # components of class c: base trees glued together by assigned S-vertices
        local = _DSU()
        for y, cy in cur.items():
            if cy != c:
                continue
            for r in base_roots[y].get(c, ()):
                local.union(y, r)
            for z in s_nbrs[y]:
                if cur.get(z) == c:
                    local.union(y, z)
        found = [local.find(r) for r in labels] + [local.find(y) for y in same]
        return len(set(found)) == len(found)

    def rec(i: int) -> Iterator[Coloring]:
        if i == len(S):
            out = dict(base)
            out.update(cur)
            yield out
            return
        x = S[i]
        for c in lists[x]:
            if fits(x, c):
                cur[x] = c
                yield from rec(i + 1)
                del cur[x]

    yield from rec(0)


def extend_all(G, S: Iterable[int], f: Mapping[int, int], L: Optional[Lists] = None) -> List[Coloring]:
    return list(iter_extensions(G, S, f, L))


def count_extensions(G, S, f, L=None, limit: Optional[int] = None) -> int:
    n = 0
    for _ in iter_extensions(G, S, f, L):
        n += 1
        if limit is not None and n >= limit:
            break
    return n


def brute_force_colorings(G, L: Optional[Lists] = None, cap: int = BRUTE_FORCE_CAP,
                          limit: Optional[int] = None, listing: bool = False):
    """Exact number of arboreal L-colorings (or the colorings themselves).

    With ``limit`` the search stops once that many colorings were found, so
    the returned count is ``min(true count, limit)``.
    """
    adj = adjacency_of(G)
    if len(adj) > cap:
        raise TooLarge(f"{len(adj)} vertices exceed the brute-force cap {cap}")
    found = []
    count = 0
    for g in iter_extensions(adj, adj.keys(), {}, L):
        count += 1
        if listing:
            found.append(g)
        if limit is not None and count >= limit:
            break
    return found if listing else count


def product_filter_count(G, L: Optional[Lists] = None) -> int:
    """Reference count: filter the full product of lists with is_arboreal."""
    from itertools import product

    adj = adjacency_of(G)
    vs = sorted(adj)
    lists = _lists_for(adj, L)
    total = 0
    for combo in product(*(lists[v] for v in vs)):
        if is_arboreal(adj, dict(zip(vs, combo))):
            total += 1
    return total
