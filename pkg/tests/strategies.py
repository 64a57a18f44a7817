"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from arborcolor.generator import GeneratorParams, gen_triangulation


@st.composite
def triangulations(draw, min_n=4, max_n=30, balanced=None):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32))
    flips = draw(st.sampled_from([0, n, 10 * n, 40 * n]))
    bal = draw(st.booleans()) if balanced is None else balanced
    return gen_triangulation(GeneratorParams(n, seed, flips, bal))
