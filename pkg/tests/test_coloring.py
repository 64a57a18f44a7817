import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from arborcolor import standard
from arborcolor.coloring import (
    DegeneracyTooHigh,
    PartialInput,
    TooLarge,
    brute_force_colorings,
    count_extensions,
    extend_all,
    greedy_color,
    is_arboreal,
    product_filter_count,
    respects_lists,
    safe_colors,
)
from arborcolor.config_match import load_catalog

from strategies import triangulations
from worst_case import model_count

TRIANGLE = standard.triangle()


def test_is_arboreal_examples():
    assert not is_arboreal(TRIANGLE, {0: 1, 1: 1, 2: 1})
    assert is_arboreal(TRIANGLE, {0: 1, 1: 1, 2: 2})
    K7 = standard.complete_graph(7)
    rng = random.Random(5)
    for _ in range(200):
        assert not is_arboreal(K7, {v: rng.choice((1, 2, 3)) for v in K7})


def test_partial_input():
    with pytest.raises(PartialInput):
        is_arboreal(TRIANGLE, {0: 1, 1: 2})


def star(k):
    adj = {0: set(range(1, k + 1))}
    for i in range(1, k + 1):
        adj[i] = {0}
    return adj


def test_safe_colors_five_neighbours():
    lemma, exact = safe_colors(star(5), {1: 1, 2: 1, 3: 2, 4: 2, 5: 3}, 0)
    assert 3 in lemma and lemma <= exact


def test_safe_colors_no_neighbours():
    lemma, exact = safe_colors(star(3), {}, 0, {0: {4, 5, 6}})
    assert lemma == exact == {4, 5, 6}


def test_exact_beats_lemma_on_a_path():
    # path 1 - 0 - 2 - 3: both color-1 neighbours of 0 lie in different trees
    adj = {0: {1, 2}, 1: {0}, 2: {0, 3}, 3: {2}}
    lemma, exact = safe_colors(adj, {1: 1, 2: 1, 3: 2}, 0)
    assert 1 in exact and 1 not in lemma
    # closing the triangle 0-1-2 instead makes color 1 unsafe
    adj = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    assert 1 not in safe_colors(adj, {1: 1, 2: 1}, 0)[1]


def test_greedy_examples():
    f = greedy_color(standard.icosahedron())
    assert is_arboreal(standard.icosahedron(), f)
    assert greedy_color({0: set()})[0] in (1, 2, 3)
    with pytest.raises(DegeneracyTooHigh):
        greedy_color(standard.complete_graph(7))


@pytest.mark.parametrize("k,count", [(3, 24), (4, 54), (5, 90), (7, 0)])
def test_golden_counts(k, count):
    assert brute_force_colorings(standard.complete_graph(k)) == count


def test_oracle_matches_product_filter():
    for G in (standard.triangle(), standard.tetrahedron(), standard.octahedron(),
              standard.complete_graph(5), standard.cycle(6)):
        assert brute_force_colorings(G) == product_filter_count(G)


def test_brute_force_cap_and_listing():
    with pytest.raises(TooLarge):
        brute_force_colorings(standard.cycle(17))
    fs = brute_force_colorings(TRIANGLE, listing=True)
    assert len(fs) == 24 and len({tuple(sorted(f.items())) for f in fs}) == 24
    assert brute_force_colorings(standard.octahedron(), limit=5) == 5


def test_extend_examples():
    # a degree-3 vertex with neighbours colored 1, 2, 3 has two extensions
    G = standard.tetrahedron()
    ext = extend_all(G, {3}, {0: 1, 1: 2, 2: 3})
    assert len(ext) >= 2  # in fact 3: each color appears once around it
    assert extend_all(G, set(), {0: 1, 1: 1, 2: 2, 3: 3}) == [{0: 1, 1: 1, 2: 2, 3: 3}]


@given(triangulations(max_n=9), st.integers(0, 2**32), st.integers(1, 4))
def test_extend_all_matches_product_filter(T, seed, k):
    rng = random.Random(seed)
    S = sorted(rng.sample(sorted(T.vertices), k))
    rest = {v: [u for u in T.neighbors(v) if u not in S] for v in T.vertices if v not in S}
    lists = {v: tuple(sorted(rng.sample(range(1, 6), 3))) for v in T.vertices}
    f = greedy_color(rest, lists, rng)
    got = extend_all(T, S, f, lists)
    want = []
    for combo in product(*(lists[v] for v in S)):
        g = dict(f)
        g.update(zip(S, combo))
        if is_arboreal(T, g):
            want.append(g)
    assert got == want
    assert all(respects_lists(g, lists) for g in got)


@given(triangulations(max_n=60), st.integers(0, 2**32))
def test_greedy_is_arboreal_with_random_lists(T, seed):
    rng = random.Random(seed)
    lists = {v: rng.sample(range(1, 7), 3) for v in T.vertices}
    f = greedy_color(T, lists, rng)
    assert is_arboreal(T, f) and respects_lists(f, lists)


@given(st.integers(0, 2**32), st.integers(0, 5), st.integers(0, 6))
def test_basic_lemma_bounds(seed, k, extra):
    # v has k colored neighbours; extra vertices make the class structure richer
    rng = random.Random(seed)
    nbrs = list(range(1, k + 1))
    others = list(range(k + 1, k + 1 + extra))
    adj = {0: set(nbrs)}
    for x in nbrs + others:
        adj[x] = set()
    for x in nbrs:
        adj[x].add(0)
    pool = nbrs + others
    for a in pool:
        for b in pool:
            if a < b and rng.random() < 0.3:
                adj[a].add(b)
                adj[b].add(a)
    palette = range(1, 6)
    lists = {v: rng.sample(palette, 3) for v in adj}
    f = greedy_color({x: adj[x] - {0} for x in pool}, lists, rng) if pool else {}
    lemma, exact = safe_colors(adj, f, 0, lists)
    assert lemma <= exact
    assert lemma
    if k <= 3:
        assert len(lemma) >= 2


@pytest.mark.parametrize("C", load_catalog(), ids=lambda C: C.id)
def test_worst_case_reducibility_model(C):
    rng = random.Random(C.id)
    for palette in ((1, 2, 3), (1, 2, 3, 4, 5)):
        for _ in range(300):
            assert model_count(C, rng, palette=palette) >= 2


def test_count_extensions_limit():
    G = standard.octahedron()
    assert count_extensions(G, G.vertices, {}, limit=3) == 3
