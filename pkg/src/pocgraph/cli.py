"""Command-line surface: batch analysis, classification, gadget
construction, reductions, and theorem scans.

Exit codes: 0 success/pass, 1 violation or negative recognition,
2 usage or parse error.  Exact fractions are always printed; decimal
approximations are display-only.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import gadgets, kernels, recognizers, solver
from .graph import Graph, max_vertices
from .io import (FormatError, GraphDocument, emit_dot, emit_graph6,
                 parse_edge_list, read_graph6_document)
from .verify import CHECKS

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class CliConfig:
    input_format: str        # graph6 | edgelist | auto
    json_output: bool
    max_n: int               # per-graph solver cap
    seed: int


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _looks_like_graph6(text: str) -> bool:
    for raw in text.splitlines():
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if s.startswith(">>graph6<<"):
            return True
        return all(63 <= ord(ch) <= 126 for ch in s)
    return True


def read_document(path: str, fmt: str) -> GraphDocument:
    text = _read_text(path)
    if fmt == "auto":
        if path.endswith(".g6"):
            fmt = "graph6"
        else:
            fmt = "graph6" if _looks_like_graph6(text) else "edgelist"
    if fmt == "graph6":
        return read_graph6_document(text)
    graph = parse_edge_list(text)
    return GraphDocument((graph,), (1,))


def _read_single(path: str, fmt: str) -> Graph:
    doc = read_document(path, fmt)
    if len(doc) != 1:
        raise FormatError(f"expected exactly one graph in {path}, found {len(doc)}")
    return doc.graphs[0]


def _vertices(vs) -> list[int]:
    return sorted(vs)


def _poc_strings(ratio: Fraction) -> tuple[str, str]:
    return f"{ratio.numerator}/{ratio.denominator}", f"{float(ratio):.4f}"


def _emit(records, as_json: bool) -> None:
    if as_json:
        print(json.dumps(records, indent=2))
    else:
        for line in records:
            print(line)


# -- analyze -----------------------------------------------------------------

def cmd_analyze(args) -> int:
    doc = read_document(args.file, args.format)
    records = []
    text_lines = []
    for idx, (lineno, g) in enumerate(doc, start=1):
        if g.n > args.max_n:
            note = f"skipped: n={g.n} exceeds the solver cap of {args.max_n}"
            records.append({"index": idx, "line": lineno, "n": g.n, "m": g.m, "error": note})
            text_lines.append(f"#{idx} (line {lineno}): {note}")
            continue
        tau = solver.vertex_cover_number(g)
        tauc = solver.connected_vertex_cover_number(g)
        rec = {
            "index": idx, "line": lineno, "n": g.n, "m": g.m,
            "tau": tau.value, "tau_witness": _vertices(tau.witness),
            "tau_c": tauc.value, "tau_c_witness": _vertices(tauc.witness),
        }
        if g.m == 0:
            rec["poc"] = None
            rec["note"] = "PoC undefined (no edges)"
            text_lines.append(
                f"#{idx} (line {lineno}): n={g.n} m=0 tau=0 tau_c=0 PoC undefined (no edges)")
        else:
            ratio = solver.poc(g)
            exact, approx = _poc_strings(ratio)
            rec["poc"] = exact
            rec["poc_approx"] = approx
            text_lines.append(
                f"#{idx} (line {lineno}): n={g.n} m={g.m} tau={tau.value} tau_c={tauc.value} "
                f"PoC={exact} (~{approx}) tau_witness={_vertices(tau.witness)} "
                f"tau_c_witness={_vertices(tauc.witness)}")
        records.append(rec)
    _emit(records if args.json else text_lines, args.json)
    return 0


# -- classify ----------------------------------------------------------------

def cmd_classify(args) -> int:
    doc = read_document(args.file, args.format)
    records = []
    text_lines = []
    for idx, (lineno, g) in enumerate(doc, start=1):
        label = recognizers.classify(g)
        rec = {"index": idx, "line": lineno, "class": label.label.value}
        if label.witness is not None:
            rec["witness_pattern"] = label.witness.pattern
            rec["witness_vertices"] = list(label.witness.mapping)
            text_lines.append(f"#{idx} (line {lineno}): {label.label.value} "
                              f"(witness {label.witness.pattern} at {list(label.witness.mapping)})")
        else:
            text_lines.append(f"#{idx} (line {lineno}): {label.label.value}")
        records.append(rec)
    _emit(records if args.json else text_lines, args.json)
    return 0


# -- gadgets -------------------------------------------------------------------

def _verify_note(out: gadgets.GadgetOutput, budget: int) -> dict:
    if out.graph.n > budget:
        return {"verified": False, "note": f"n={out.graph.n} exceeds the verify budget {budget}"}
    tau, tauc = solver.tau_tauc(out.graph)
    ok = tau == out.predicted_tau and (out.predicted_tauc is None or tauc == out.predicted_tauc)
    return {"verified": ok, "solver_tau": tau, "solver_tau_c": tauc}


def cmd_gadget(args) -> int:
    g = _read_single(args.file, args.format)
    if args.kind == "fixtauc":
        out = gadgets.fix_tauc(g)
    elif args.kind == "fixtau":
        out = gadgets.fix_tau(g)
    elif args.kind == "replicate":
        out = gadgets.replicate_join(g, args.copies, args.anchor)
    elif args.kind == "caterpillar":
        base = gadgets.GadgetOutput(g, solver.tau_tauc(g)[0],
                                    solver.tau_tauc(g)[1] if g.m else 0, "input")
        out = gadgets.attach_caterpillars(base, args.a, args.b)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.kind)
    rec = {
        "construction": out.provenance,
        "graph6": emit_graph6(out.graph),
        "n": out.graph.n, "m": out.graph.m,
        "predicted_tau": out.predicted_tau,
        "predicted_tau_c": out.predicted_tauc,
    }
    if args.verify:
        rec.update(_verify_note(out, args.verify_budget))
    if args.json:
        print(json.dumps(rec, indent=2))
    else:
        for k, v in rec.items():
            print(f"{k}: {v}")
    if args.verify and rec.get("verified") is False and "solver_tau" in rec:
        return 1
    return 0


def cmd_reduce(args) -> int:
    g = _read_single(args.g, args.format)
    h = _read_single(args.h, args.format)
    try:
        r1s, r2s = args.ratio.split("/")
        r1, r2 = int(r1s), int(r2s)
    except ValueError:
        raise FormatError(f"--ratio must look like 3/2, got {args.ratio!r}") from None
    graph, plan = gadgets.full_reduction(g, h, r1, r2)
    rec = plan.to_json_dict()
    rec["graph6"] = emit_graph6(graph)
    rec["n"] = graph.n
    rec["m"] = graph.m
    if args.verify:
        # compositional check: solver-verify the two pinned sides when small enough
        g2 = g if g.is_connected() else gadgets.connectify(g)
        h2 = h if h.is_connected() else gadgets.connectify(h)
        left = gadgets.fix_tauc(gadgets.replicate_join(g2, r2, 0).graph)
        right = gadgets.fix_tau(gadgets.replicate_join(h2, r1, 0).graph)
        rec["left_piece"] = _verify_note(left, args.verify_budget)
        rec["right_piece"] = _verify_note(right, args.verify_budget)
    if args.json:
        print(json.dumps(rec, indent=2))
    else:
        for k, v in rec.items():
            print(f"{k}: {v}")
    return 0


# -- scans -----------------------------------------------------------------------

def cmd_scan(args) -> int:
    spec = CHECKS[args.check]
    max_n = args.max_n if args.max_n is not None else spec.default_max_n
    graphs = None
    if args.graphs is not None:
        graphs = list(read_graph6_document(_read_text(args.graphs)).graphs)
    if args.check == "gadgets":
        report = spec.run(max_n, graphs=graphs, seed=args.seed)
    else:
        report = spec.run(max_n, graphs=graphs)
    if args.json:
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.passed else 1


# -- special trees -----------------------------------------------------------------

def cmd_special_tree(args) -> int:
    if args.base is not None:
        base = _read_single(args.base, args.format)
        out = recognizers.build_special_tree(base)
        rec = {"graph6": emit_graph6(out), "n": out.n, "m": out.m}
        if args.json:
            print(json.dumps(rec, indent=2))
        else:
            print(rec["graph6"])
        return 0
    g = _read_single(args.recognize, args.format)
    result = recognizers.is_special_tree(g)
    if result.ok:
        rec = {"special_tree": True, "base_graph6": emit_graph6(result.base),
               "base_n": result.base.n}
        if args.json:
            print(json.dumps(rec, indent=2))
        else:
            print(f"special tree with base {rec['base_graph6']} ({result.base.n} vertices)")
        return 0
    rec = {"special_tree": False, "reason": result.reason}
    if args.json:
        print(json.dumps(rec, indent=2))
    else:
        print(f"not a special tree: {result.reason}")
    return 1


def cmd_dot(args) -> int:
    doc = read_document(args.file, args.format)
    for _, g in doc:
        sys.stdout.write(emit_dot(g))
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pocgraph",
        description="Exact price-of-connectivity analysis, hereditary class "
                    "recognition, reduction gadgets, and theorem scans.")
    parser.add_argument("--backend", choices=("auto", "pure", "compiled"), default=None,
                        help="force a kernel backend (default: auto)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="input file, or - for stdin")
        p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("analyze", help="tau, tau_c, and PoC per input graph")
    add_common(p)
    p.add_argument("--max-n", type=int, default=64, help="per-graph solver cap")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("classify", help="hereditary PoC class per input graph")
    add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("gadget", help="build a reduction gadget")
    p.add_argument("kind", choices=("fixtauc", "fixtau", "replicate", "caterpillar"))
    add_common(p)
    p.add_argument("--copies", type=int, default=2, help="replicate: number of copies")
    p.add_argument("--anchor", type=int, default=0, help="replicate: anchor vertex")
    p.add_argument("--a", type=int, default=0, help="caterpillar: full-pendant path length")
    p.add_argument("--b", type=int, default=0, help="caterpillar: half-pendant path half-length")
    p.add_argument("--verify", action="store_true", help="cross-check against the solver")
    p.add_argument("--verify-budget", type=int, default=64,
                   help="largest piece the solver cross-check will attempt")
    p.set_defaults(fn=cmd_gadget)

    p = sub.add_parser("reduce", help="build the ratio-threshold reduction instance")
    p.add_argument("--g", required=True, help="left input graph file")
    p.add_argument("--h", required=True, help="right input graph file")
    p.add_argument("--ratio", required=True, help="threshold ratio, e.g. 3/2")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="solver-check the pinned pieces when within budget")
    p.add_argument("--verify-budget", type=int, default=64)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("scan", help="run a theorem check over enumerated graphs")
    p.add_argument("--check", required=True, choices=tuple(CHECKS))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--graphs", default=None,
                   help="graph6 file replacing the built-in enumeration")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("special-tree", help="build or recognize special trees")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--base", help="base tree file: emit its special tree")
    group.add_argument("--recognize", help="graph file: recover the base tree")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_special_tree)

    p = sub.add_parser("dot", help="emit DOT for the input graphs")
    add_common(p)
    p.set_defaults(fn=cmd_dot)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if args.backend is not None:
        kernels.set_backend(args.backend)
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
