import random

import pytest
from hypothesis import given, strategies as st

from arborcolor import standard
from arborcolor.config_match import (
    DegreeConstraint,
    DeltaBelowDegree,
    NotATriangulation,
    ParseError,
    brute_force_match,
    face_key,
    find_configuration,
    load_catalog,
    match_config,
    parse_catalog,
    serialize_catalog,
    verify_matching,
)

from strategies import triangulations

CATALOG = load_catalog()
BY_ID = {C.id: C for C in CATALOG}


def test_catalog_ids_in_order():
    ids = [C.id for C in CATALOG]
    expected = [f"Q{i}" for i in range(1, 15)] + ["Q15a", "Q15b"] + [f"Q{i}" for i in range(16, 24)]
    assert ids == expected + ["Q23prime"]
    assert {C.family for C in CATALOG if C.role == "unavoidable"} == {f"Q{i}" for i in range(1, 24)}


def test_reduction_sets_have_at_most_nine_vertices():
    for C in CATALOG:
        assert len(C.removed) <= 9, C.id


def test_q1_and_q7_shapes():
    q1 = BY_ID["Q1"]
    assert len(q1.vertices) == 1 and not q1.edges
    assert [d for d in range(8) if q1.delta["u"].satisfied(d)] == [0, 1, 2, 3]
    q7 = BY_ID["Q7"]
    assert len(q7.vertices) == 5 and q7.keep == frozenset({"u4"})
    assert len(q7.removed) == 4


def test_q23prime_is_q23_without_pendant():
    q23, q23p = BY_ID["Q23"], BY_ID["Q23prime"]
    assert set(q23.vertices) - set(q23p.vertices) == {"w"}
    assert q23p.role == "reduction"
    assert q23.removed == q23p.vertices


def test_degree_constraints():
    assert DegreeConstraint("pair", 5).satisfied(4)
    assert DegreeConstraint("pair", 5).satisfied(5)
    assert not DegreeConstraint("pair", 5).satisfied(6)
    assert DegreeConstraint("atleast", 8).satisfied(100)
    assert not DegreeConstraint("exact", 7).satisfied(8)


def test_delta_below_degree():
    text = "config X\nvertex a deg exact 2\nvertex b deg exact 4\nvertex c deg exact 4\n" \
           "vertex d deg exact 4\nedge a b\nedge a c\nedge a d\nend\n"
    with pytest.raises(DeltaBelowDegree):
        parse_catalog(text)


@pytest.mark.parametrize("text,line", [
    ("config X\nvertex a deg weird 3\nend\n", 2),
    ("config X\nvertex a deg exact 3\nedge a b\nend\n", 3),
    ("config X\nvertex a deg exact 3\n", 1),  # unterminated: points at its header
    ("vertex a deg exact 3\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as ei:
        parse_catalog(text)
    assert ei.value.lineno == line


def test_catalog_round_trip():
    again = parse_catalog(serialize_catalog(CATALOG))
    assert [(C.id, C.vertices, C.edges, C.internal_faces, C.keep, C.role) for C in again] == \
           [(C.id, C.vertices, C.edges, C.internal_faces, C.keep, C.role) for C in CATALOG]


def test_examples():
    cid, M = find_configuration(standard.tetrahedron(), CATALOG)
    assert (cid, M.h) == ("Q1", {"u": 0})
    assert match_config(standard.icosahedron(), BY_ID["Q1"]) is None
    assert match_config(standard.octahedron(), BY_ID["Q2"]) is not None
    assert find_configuration(standard.octahedron(), CATALOG)[0] == "Q2"
    assert find_configuration(standard.icosahedron(), CATALOG)[0] == "Q4"
    assert find_configuration(standard.k6_projective(), CATALOG)[0] == "Q4"


def test_not_a_triangulation():
    with pytest.raises(NotATriangulation):
        match_config(standard.cycle(4), BY_ID["Q1"])
    with pytest.raises(NotATriangulation):
        find_configuration(standard.cycle(5), CATALOG)


def test_face_key_is_reflection_and_rotation_invariant():
    assert face_key([3, 1, 2]) == face_key([1, 2, 3]) == face_key([2, 1, 3])


def test_within_restricts_images():
    ico = standard.icosahedron()
    M = match_config(ico, BY_ID["Q4"], within={5, 6, 7, 10, 11})
    assert M is not None and M.image() <= {5, 6, 7, 10, 11}
    assert match_config(ico, BY_ID["Q4"], within={0, 3}) is None


SMALL = [C for C in CATALOG if len(C.vertices) <= 5]


@given(triangulations(max_n=10), st.sampled_from(SMALL))
def test_matcher_agrees_with_brute_force(T, C):
    fast = match_config(T, C)
    slow = brute_force_match(T, C)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert verify_matching(T, C, fast)
        assert fast.h == slow.h  # both return the least image in search order


@given(triangulations(max_n=40, balanced=True), st.integers(0, 2**32))
def test_matching_invariant_under_relabel(T, seed):
    rng = random.Random(seed)
    perm = list(T.vertices)
    rng.shuffle(perm)
    phi = dict(zip(T.vertices, perm))
    U = T.relabel(phi)
    for C in CATALOG[:10]:
        a, b = match_config(T, C), match_config(U, C)
        assert (a is None) == (b is None)
        if b is not None:
            assert verify_matching(U, C, b)


@given(triangulations(max_n=40))
def test_matching_accepts_mirror_image(T):
    M = T.mirror()
    for C in CATALOG:
        a = match_config(T, C)
        b = match_config(M, C)
        assert (a is None) == (b is None)
        if a is not None:
            # the same vertex map works in the mirror image
            assert verify_matching(M, C, a)


@given(triangulations(max_n=40))
def test_find_configuration_returns_verified_match(T):
    cid, M = find_configuration(T, CATALOG)
    assert verify_matching(T, BY_ID[cid], M)
