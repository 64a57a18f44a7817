"""Command-line front end: ``arborcolor <command> ...``.

Graph arguments are file paths in the format of :mod:`arborcolor.io`, ``-``
for stdin, or ``@name`` for a built-in graph (``@icosahedron``,
``@k6-projective``, ...).  Exit status is 0 on success, 1 when a check fails
and 2 on usage, format or precondition errors.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from typing import Optional, Sequence

from . import standard
from .coloring import brute_force_colorings, greedy_color, is_arboreal, respects_lists
from .config_match import load_catalog
from .digraph import Digraph, digraph_chromatic_brute
from .discharging import audit, format_discharge_report
from .generator import GeneratorParams, gen_triangulation
from .graph_core import triangulate
from .io import GraphFile, format_coloring, format_colorings, format_graph, parse_colorings
from .io import parse_graph_file
from .reduction import enumerate_colorings


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_graph_arg(arg: str) -> GraphFile:
    if arg.startswith("@"):
        name = arg[1:]
        if name not in standard.NAMED:
            raise ValueError(f"unknown built-in graph {name!r}; choose from {sorted(standard.NAMED)}")
        return GraphFile(standard.NAMED[name]())
    return parse_graph_file(_read(arg))


def _lists(gf: GraphFile):
    return gf.lists or None


def cmd_triangulate(a, out) -> int:
    gf = load_graph_arg(a.graph)
    out.write(format_graph(triangulate(gf.graph), gf.lists))
    return 0


def cmd_discharge(a, out) -> int:
    G = load_graph_arg(a.graph).graph
    out.write(format_discharge_report(G, load_catalog(a.catalog)))
    return 0


def cmd_find_config(a, out) -> int:
    from .config_match import find_configuration

    G = load_graph_arg(a.graph).graph
    cid, M = find_configuration(G, load_catalog(a.catalog))
    out.write(cid + " " + " ".join(f"{k}={v}" for k, v in M.h.items()) + "\n")
    return 0


def cmd_color(a, out) -> int:
    gf = load_graph_arg(a.graph)
    out.write(format_coloring(greedy_color(gf.graph, _lists(gf))))
    return 0


def cmd_enumerate(a, out) -> int:
    gf = load_graph_arg(a.graph)
    fs = enumerate_colorings(gf.graph, _lists(gf), a.count, catalog=load_catalog(a.catalog))
    out.write(format_colorings(list(fs)))
    return 0


def cmd_count(a, out) -> int:
    gf = load_graph_arg(a.graph)
    out.write(f"{brute_force_colorings(gf.graph, _lists(gf), cap=a.cap)}\n")
    return 0


def cmd_check(a, out) -> int:
    gf = load_graph_arg(a.graph)
    blocks = parse_colorings(_read(a.coloring))
    if not blocks:
        raise ValueError("coloring file is empty")
    bad = 0
    for i, f in enumerate(blocks):
        ok = is_arboreal(gf.graph, f) and respects_lists(f, _lists(gf))
        bad += not ok
        out.write(f"{i} {'arboreal' if ok else 'NOT arboreal'}\n")
    return 1 if bad else 0


def cmd_digraph_chi(a, out) -> int:
    gf = load_graph_arg(a.graph)
    if not gf.arcs:
        raise ValueError("graph file has no 'arc' records")
    D = Digraph.from_arcs(gf.arcs, gf.graph.vertices)
    out.write(("true" if digraph_chromatic_brute(D, a.k, cap=a.cap) else "false") + "\n")
    return 0


def cmd_gen(a, out) -> int:
    G = gen_triangulation(GeneratorParams(a.n, a.seed, a.flips, a.balanced))
    out.write(format_graph(G))
    return 0


def cmd_audit_corpus(a, out) -> int:
    catalog = load_catalog(a.catalog)
    found = conserved = 0
    hist: Counter = Counter()
    for i in range(a.samples):
        G = gen_triangulation(GeneratorParams(a.n, a.seed + i, a.flips, a.balanced))
        rep = audit(G, catalog)
        found += rep.config_id is not None
        conserved += rep.conserved
        hist[rep.config_id or "NONE"] += 1
    cons = "exact" if conserved == a.samples else f"violated in {a.samples - conserved}"
    out.write(f"{found}/{a.samples} configurations found; conservation {cons}\n")
    if a.histogram:
        for cid, k in sorted(hist.items()):
            out.write(f"{cid} {k}\n")
    return 0 if found == conserved == a.samples else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arborcolor", description=__doc__.splitlines()[0])
    p.add_argument("--catalog", default=None, help="configuration catalog (default: shipped one)")
    p.add_argument("--cap", type=int, default=16, help="vertex cap for brute-force oracles")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph")
        sp.set_defaults(fn=fn)
        return sp

    graph_cmd("triangulate", cmd_triangulate, "add edges until every face is a triangle")
    graph_cmd("discharge", cmd_discharge, "charges, rule transfers and matched configuration")
    graph_cmd("find-config", cmd_find_config, "first catalog configuration contained in a triangulation")
    graph_cmd("color", cmd_color, "greedy arboreal coloring")
    sp = graph_cmd("enumerate", cmd_enumerate, "distinct arboreal colorings via reduction")
    sp.add_argument("--count", type=int, required=True)
    sp = graph_cmd("count", cmd_count, "exact number of arboreal colorings")
    sp.add_argument("--brute", action="store_true", required=True)
    sp = graph_cmd("check", cmd_check, "validate coloring blocks against a graph")
    sp.add_argument("coloring")
    sp = graph_cmd("digraph-chi", cmd_digraph_chi, "is there a k-coloring with acyclic classes")
    sp.add_argument("--k", type=int, required=True)

    for name, fn, help_ in (("gen", cmd_gen, "random plane triangulation"),
                            ("audit-corpus", cmd_audit_corpus, "audit many random triangulations")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--flips", type=int, default=None)
        sp.add_argument("--balanced", action="store_true", help="only flips that even out degrees")
        sp.set_defaults(fn=fn)
        if name == "audit-corpus":
            sp.add_argument("--samples", type=int, required=True)
            sp.add_argument("--histogram", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, out)
    except (ValueError, RuntimeError, OSError) as exc:
        sys.stderr.write(f"arborcolor {args.command}: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
