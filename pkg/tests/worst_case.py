"""Conservative reducibility model for a catalog configuration.

Every deleted vertex x gets ``degree(x) - (neighbours among deleted)``
outside neighbours with colors drawn at random.  All outside vertices of one
color are treated as a single tree (the worst case: any cycle in a real
graph is still a cycle after contracting those trees).  Two outside
neighbours of the same color therefore forbid that color at x, and a single
one ties x to that color's hub.
"""

import random

from arborcolor.coloring import count_extensions

HUB = -1  # hub of color c gets vertex id HUB - c


def model_instance(C, rng: random.Random, palette=(1, 2, 3), list_size=3):
    names = list(C.removed)
    vid = {a: i for i, a in enumerate(names)}
    removed = set(names)
    adj = {i: set() for i in vid.values()}
    for a, b in C.edges:
        if a in removed and b in removed:
            adj[vid[a]].add(vid[b])
            adj[vid[b]].add(vid[a])
    hubs = {c: HUB - c for c in palette}
    for h in hubs.values():
        adj[h] = set()
    lists = {}
    for a in names:
        x = vid[a]
        dc = C.delta[a]
        lo = max(dc.lowest, C.degree_in_c(a))
        hi = dc.highest if dc.highest != float("inf") else lo + 3
        degree = rng.randint(int(lo), int(hi))
        outside = degree - len(adj[x])
        lst = tuple(sorted(rng.sample(palette, list_size)))
        seen = {}
        for _ in range(outside):
            c = rng.choice(palette)
            seen[c] = seen.get(c, 0) + 1
        lists[x] = tuple(c for c in lst if seen.get(c, 0) <= 1)
        for c, k in seen.items():
            if k == 1:
                adj[x].add(hubs[c])
                adj[hubs[c]].add(x)
    base = {h: c for c, h in hubs.items()}
    return adj, list(vid.values()), base, lists


def model_count(C, rng, **kw):
    adj, S, base, lists = model_instance(C, rng, **kw)
    full = dict(lists)
    full.update({h: (c,) for h, c in base.items()})
    return count_extensions(adj, S, base, full, limit=2)
