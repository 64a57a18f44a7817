import io

import pytest
from hypothesis import given

from arborcolor import standard
from arborcolor.cli import main
from arborcolor.io import (
    FormatError,
    format_coloring,
    format_colorings,
    format_graph,
    parse_coloring,
    parse_colorings,
    parse_graph,
    parse_graph_file,
)

from strategies import triangulations


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.mark.parametrize("name", sorted(standard.NAMED))
def test_graph_round_trip(name):
    G = standard.NAMED[name]()
    text = format_graph(G)
    assert parse_graph(text) == G
    assert format_graph(parse_graph(text)) == text


@given(triangulations(max_n=30))
def test_round_trip_random(T):
    text = format_graph(T)
    assert format_graph(parse_graph("# header comment\n" + text.replace("\n", "  \n"))) == text


def test_lists_and_arcs():
    text = "n 3 surface plane\nrot 0: 1 2\nrot 1: 2 0\nrot 2: 0 1\nlist 0: 4 5 6\narc 0 1\n"
    gf = parse_graph_file(text)
    assert gf.lists == {0: frozenset({4, 5, 6})} and gf.arcs == [(0, 1)]
    assert parse_graph_file(format_graph(gf.graph, gf.lists, gf.arcs)).lists == gf.lists


@pytest.mark.parametrize("text", [
    "rot 0: 1\n",
    "n 2 surface torus\n",
    "n 3 surface plane\nrot 0: 1 2\nrot 1: 2 0\n",
    "n 1 surface plane\nrot x: 1\n",
    "n 1 surface plane\nfoo\n",
])
def test_format_errors(text):
    with pytest.raises(FormatError):
        parse_graph_file(text)


def test_coloring_blocks():
    fs = [{0: 1, 1: 2}, {0: 3, 1: 3}]
    assert parse_colorings(format_colorings(fs)) == fs
    assert parse_coloring(format_coloring(fs[0])) == fs[0]
    with pytest.raises(FormatError):
        parse_coloring("0 1\n0 2\n")


def test_cli_count_triangle(tmp_path):
    path = write(tmp_path, "t.txt", format_graph(standard.triangle()))
    assert run(["count", "--brute", path]) == (0, "24\n")


def test_cli_enumerate_then_check(tmp_path):
    code, text = run(["enumerate", "@icosahedron", "--count", "3"])
    assert code == 0 and len(parse_colorings(text)) == 3
    cpath = write(tmp_path, "c.txt", text)
    code, out = run(["check", "@icosahedron", cpath])
    assert code == 0 and out.splitlines() == ["0 arboreal", "1 arboreal", "2 arboreal"]
    bad = write(tmp_path, "bad.txt", "".join(f"{v} 1\n" for v in range(12)))
    assert run(["check", "@icosahedron", bad])[0] == 1


def test_cli_audit_corpus():
    code, out = run(["audit-corpus", "--samples", "50", "--n", "40", "--seed", "7"])
    assert code == 0 and out == "50/50 configurations found; conservation exact\n"


def test_cli_discharge_and_find(tmp_path):
    code, out = run(["discharge", "@icosahedron"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0 initial -1 final -1"
    assert "total initial -12 final -12" in lines and lines[-1] == "config Q4"
    code, out = run(["find-config", "@tetrahedron"])
    assert (code, out) == (0, "Q1 u=0\n")


def test_cli_gen_triangulate_color(tmp_path):
    code, out = run(["gen", "--n", "12", "--seed", "1"])
    assert code == 0 and parse_graph(out).m == 30
    path = write(tmp_path, "c4.txt", format_graph(standard.cycle(4)))
    code, out = run(["triangulate", path])
    assert code == 0 and parse_graph(out).m == 6
    code, out = run(["color", "@octahedron"])
    assert code == 0 and len(parse_coloring(out)) == 6


def test_cli_digraph_chi(tmp_path):
    text = format_graph(standard.triangle(), arcs=[(0, 1), (1, 2), (2, 0)])
    path = write(tmp_path, "d.txt", text)
    assert run(["digraph-chi", path, "--k", "1"]) == (0, "false\n")
    assert run(["digraph-chi", path, "--k", "2"]) == (0, "true\n")


def test_cli_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad.txt", "n 3 surface plane\nrot 0: 1\n")
    assert run(["count", "--brute", bad])[0] == 2
    assert "FormatError" in capsys.readouterr().err
    assert run(["find-config", "@nope"])[0] == 2
    c4 = write(tmp_path, "c4.txt", format_graph(standard.cycle(4)))
    assert run(["find-config", c4])[0] == 2
    path = write(tmp_path, "t.txt", format_graph(standard.triangle()))
    assert run(["digraph-chi", path, "--k", "2"])[0] == 2
