"""Command-line surface and the JSON / DOT file formats.

Exit codes: 0 pass, 1 semantic failure (axiom violations, not isomorphic),
2 input error (bad flags, malformed files, failed preconditions),
3 budget exceeded.  The vertex budget honors the CRYSTAL_BUDGET
environment variable.

Graph document schema (JSON):
  {
    "index_set": [1, 2],
    "cartan":    [[2, -2], [-1, 2]],
    "vertices":  [{"id": 0, "a": [...], "x": [...],
                   "wt": {"1": 0, ...}, "eps": {...}, "phi": {...}}, ...],
    "edges":     [{"from": 0, "to": 1, "color": 1}, ...],
    "max":       0
  }
where a/x/wt/eps/phi are optional per vertex and "max" is optional.
"""

import argparse
import json
import os
import sys

from . import __version__
from .axioms import check_all
from .builder import build_isomorphism, synthesize
from .cartan import GCM, b2_gcm, b3_gcm
from .errors import BudgetExceeded, NotIsomorphic, PrereqFailed
from .graph import ColoredGraph
from .oracle import run_verification
from .pbw import PbwElement, generate

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


# -- document format ----------------------------------------------------------

def graph_to_doc(g, stats=None):
    """Serialize a graph; stats may map vertex -> (wt, eps, phi) dicts."""
    doc = {
        "index_set": list(g.colors),
        "cartan": [list(r) for r in g.cartan.rows] if g.cartan else None,
        "vertices": [],
        "edges": [],
    }
    for v in g.vertices():
        entry = {"id": v}
        label = g.label(v)
        if isinstance(label, PbwElement):
            entry["a"] = list(label.a)
            entry["x"] = list(label.x)
        if stats and v in stats:
            wt, eps, phi = stats[v]
            entry["wt"] = {str(c): n for c, n in sorted(wt.items())}
            entry["eps"] = {str(c): n for c, n in sorted(eps.items())}
            entry["phi"] = {str(c): n for c, n in sorted(phi.items())}
        doc["vertices"].append(entry)
    for s, d, c in g.edges():
        doc["edges"].append({"from": s, "to": d, "color": c})
    maxes = g.maximum_elements()
    if len(maxes) == 1:
        doc["max"] = maxes[0]
    return doc


def doc_to_graph(doc):
    """Rebuild a graph from a document, preserving ids and labels.

    Arrows are loaded without the degree guard so that deliberately broken
    documents can still be checked.
    """
    colors = [int(c) for c in doc["index_set"]]
    cartan = GCM(doc["cartan"], index_set=colors) if doc.get("cartan") else None
    g = ColoredGraph(colors, cartan=cartan)
    for entry in doc["vertices"]:
        label = None
        if "a" in entry and "x" in entry:
            label = PbwElement(tuple(entry["a"]), tuple(entry["x"]))
        g.add_vertex(vid=int(entry["id"]), label=label)
    for e in doc["edges"]:
        g.add_edge_unchecked(int(e["from"]), int(e["to"]), int(e["color"]))
    return g.freeze()


def dump_doc(doc, path):
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_doc(path):
    with open(path) as fh:
        return json.load(fh)


def graph_to_dot(g):
    """Deterministic DOT text; color-1 arrows are drawn heavy, the other
    colors carry numeric labels."""
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for v in g.vertices():
        lines.append(f'  {v} [label="{v}"];')
    for s, d, c in g.edges():
        if c == 1:
            lines.append(f"  {s} -> {d} [penwidth=2.4];")
        else:
            lines.append(f'  {s} -> {d} [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- subcommands ---------------------------------------------------------------

_GCMS = {"b2": b2_gcm, "b3": b3_gcm}


def _load_gcm(name):
    if name in _GCMS:
        return _GCMS[name]()
    if name.startswith("custom:"):
        spec = load_doc(name[len("custom:"):])
        return GCM(spec["cartan"], index_set=spec.get("index_set"))
    raise ValueError(f"unknown matrix {name!r} (use b2, b3 or custom:<path>)")


def _budget():
    return int(os.environ.get("CRYSTAL_BUDGET", 10**6))


def cmd_gen(args):
    A = _load_gcm(args.gcm)
    hw = [int(t) for t in args.hw.split(",")]
    if len(hw) != len(A.colors):
        print(f"error: --hw needs {len(A.colors)} entries", file=sys.stderr)
        return EXIT_INPUT
    if any(v < 0 for v in hw):
        print("error: --hw entries must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    if args.method == "pbw":
        if args.gcm != "b2":
            print("error: the pbw method exists only for the b2 matrix", file=sys.stderr)
            return EXIT_INPUT
        g = generate(tuple(hw), budget=_budget())
        doc = graph_to_doc(g)
    else:
        g = synthesize(A, hw, budget_vertices=_budget())
        doc = graph_to_doc(g, stats=g.synthesis_stats)
    dump_doc(doc, args.out)
    print(f"wrote {args.out}: {len(g)} vertices, {len(g.edges())} edges")
    return EXIT_PASS


def cmd_check(args):
    g = doc_to_graph(load_doc(args.infile))
    if g.cartan is None:
        print("error: document has no cartan matrix", file=sys.stderr)
        return EXIT_INPUT
    report = check_all(g, g.cartan)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report.to_dict(), fh, indent=1)
            fh.write("\n")
    print(report.summary())
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_iso(args):
    ga = doc_to_graph(load_doc(args.a))
    gb = doc_to_graph(load_doc(args.b))
    A = ga.cartan or gb.cartan
    if A is None:
        print("error: neither document has a cartan matrix", file=sys.stderr)
        return EXIT_INPUT
    for name, g in (("first", ga), ("second", gb)):
        rep = check_all(g, A)
        if not rep.passed:
            print(f"error: {name} graph fails certification: {rep.summary()}", file=sys.stderr)
            return EXIT_INPUT
    try:
        iso = build_isomorphism(ga, gb, gcm=A)
    except (PrereqFailed, NotIsomorphic) as exc:
        print(f"not isomorphic: {exc}")
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(iso.pairs(), fh, indent=None)
            fh.write("\n")
    print(f"isomorphic on {len(iso)} vertices")
    return EXIT_PASS


def cmd_export_dot(args):
    g = doc_to_graph(load_doc(args.infile))
    with open(args.out, "w") as fh:
        fh.write(graph_to_dot(g))
    print(f"wrote {args.out}")
    return EXIT_PASS


def cmd_verify_paper(args):
    reports = run_verification(max_hw=args.max_hw, max_box=args.max_box)
    print(f"{'claim':<44} {'domain':>8}  status")
    for r in reports:
        print(r.row())
        for note in r.counterexamples[:5]:
            print(f"    {note}")
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} suites pass")
    return EXIT_PASS if not failed else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="b2crystal",
                                description="rank-2 crystal graphs: generate, check, compare")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a crystal graph document")
    g.add_argument("--gcm", default="b2", help="b2, b3 or custom:<path>")
    g.add_argument("--hw", required=True, help="comma-separated top statistics")
    g.add_argument("--method", choices=["pbw", "axioms"], default="pbw")
    g.add_argument("--out", required=True)
    g.set_defaults(fn=cmd_gen)

    c = sub.add_parser("check", help="run the axiom checker on a document")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--report", help="write the JSON report here")
    c.set_defaults(fn=cmd_check)

    i = sub.add_parser("iso", help="construct the unique isomorphism between two documents")
    i.add_argument("a")
    i.add_argument("b")
    i.add_argument("--out", help="write the vertex mapping here")
    i.set_defaults(fn=cmd_iso)

    d = sub.add_parser("export-dot", help="render a document as DOT")
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--out", required=True)
    d.set_defaults(fn=cmd_export_dot)

    v = sub.add_parser("verify-paper", help="run the brute-force verification battery")
    v.add_argument("--max-hw", type=int, default=3)
    v.add_argument("--max-box", type=int, default=8)
    v.set_defaults(fn=cmd_verify_paper)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"input error: {exc!r}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
