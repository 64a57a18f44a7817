import random

import pytest
from hypothesis import given, strategies as st

from arborcolor import standard
from arborcolor.coloring import greedy_color
from arborcolor.digraph import (
    DigonPresent,
    Digraph,
    TooLarge,
    dichromatic_number,
    digraph_chromatic_brute,
    digraph_classes_acyclic,
    is_acyclic,
    random_orientation,
)

from strategies import triangulations

C3 = Digraph.from_arcs([(0, 1), (1, 2), (2, 0)])
TT3 = Digraph.from_arcs([(0, 1), (1, 2), (0, 2)])


def test_examples():
    assert not digraph_classes_acyclic(C3, {0: 1, 1: 1, 2: 1})
    assert digraph_classes_acyclic(TT3, {0: 1, 1: 1, 2: 1})
    assert not digraph_chromatic_brute(C3, 1)
    assert digraph_chromatic_brute(C3, 2)
    assert digraph_chromatic_brute(TT3, 1)
    assert dichromatic_number(C3) == 2


def test_errors():
    with pytest.raises(DigonPresent):
        digraph_chromatic_brute(Digraph.from_arcs([(0, 1), (1, 0)]), 2)
    big = Digraph.from_arcs([(i, i + 1) for i in range(13)])
    with pytest.raises(TooLarge):
        digraph_chromatic_brute(big, 2)


def test_k7_orientation_within_three():
    D = random_orientation(standard.complete_graph(7), random.Random(0))
    assert not D.has_digon()
    assert digraph_chromatic_brute(D, 3)


def test_is_acyclic():
    assert is_acyclic([0, 1, 2], TT3.arcs)
    assert not is_acyclic([0, 1, 2], C3.arcs)


@given(triangulations(max_n=40), st.integers(0, 2**32))
def test_arboreal_coloring_gives_acyclic_classes(T, seed):
    rng = random.Random(seed)
    f = greedy_color(T, rng=rng)
    D = random_orientation(T, rng)
    assert digraph_classes_acyclic(D, f)
