"""Command-line front end.

Exit codes: 0 affirmative answer, 1 negative answer (not sparse, not
spanning), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import oracle, solver
from .hypergraph import HypergraphError, from_dict, load, make_edge
from .solver import NotGradedSparse, SolveReport

PINNED_LAMAN = {"k": 2, "ell": [0, 3], "grading": "standard"}
SUBCOMMANDS = ("decide", "extract", "components", "optimize", "extend", "span")


def render_text(report: SolveReport) -> str:
    ell = ",".join(str(x) for x in report.ell)
    lines = [f"{report.status.value} (m={report.m}, n={report.n}, k={report.k}, ell={ell})"]
    if report.witness is not None:
        lines.append(f"witness: edge {report.witness}")
    if report.accepted is not None:
        lines.append(f"accepted: {len(report.accepted)}  rejected: {len(report.rejected)}")
    if report.is_spanning is not None:
        lines.append(f"spanning: {'yes' if report.is_spanning else 'no'}")
    if report.total_weight is not None and report.problem == "optimize":
        lines.append(f"total weight: {report.to_dict()['total_weight']}")
    for c in report.components or ():
        lines.append("component: {" + ",".join(str(v) for v in sorted(c.vertices)) + "}")
    for e in report.added_edges or ():
        verts = ",".join(str(v) for v in e.vertices)
        lines.append(f"added: edge {e.id} {{{verts}}} level {e.level}")
    if report.accepted is not None:
        lines.append(" ".join(["accepted edges:", *(str(i) for i in report.accepted)]))
        lines.append(" ".join(["rejected edges:", *(str(i) for i in report.rejected)]))
    return "\n".join(lines) + "\n"


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load_candidates(raw: bytes, G) -> list:
    try:
        doc = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise HypergraphError(f"malformed candidates JSON: {exc}") from None
    if isinstance(doc, dict):
        doc = doc.get("edges")
    if not isinstance(doc, list):
        raise HypergraphError("candidates must be a list of edges or an object with an 'edges' list")
    # validate records through the input schema, on a scratch document
    first = max((e.id for e in G.edges), default=-1) + 1
    recs = [dict(rec, id=rec.get("id", first + pos)) if isinstance(rec, dict) else rec
            for pos, rec in enumerate(doc)]
    scratch = {"n": G.n, "k": G.k, "ell": list(G.ell), "grading": G.mode.value, "edges": recs}
    cands = from_dict(scratch)
    return [make_edge(e.id, e.vertices, e.level, e.weight) for e in cands.edges]


def _cross_check(G, report: SolveReport) -> list[str]:
    """Compare against brute force; returns a list of disagreements."""
    problems = []
    if report.problem != "extend" and oracle.is_graded_sparse_bf(G) != report.is_graded_sparse:
        problems.append("graded sparsity disagrees with brute force")
    if report.accepted is not None and report.problem != "extend":
        if len(report.accepted) != oracle.rank_bf(G):
            problems.append("accepted set size differs from brute-force rank")
        if not oracle.is_independent_bf(G, report.accepted):
            problems.append("accepted set is not graded sparse")
    if report.problem == "optimize" and report.total_weight != oracle.max_weight_basis_bf(G):
        problems.append("total weight differs from brute-force maximum-weight basis")
    if report.problem == "components":
        want = [c for c in oracle.components_bf(G, report.accepted)]
        got = [(c.vertices, c.edge_ids) for c in report.components]
        if got != want:
            problems.append("components differ from brute force")
    if report.problem == "extend":
        full = G.with_edges((*G.edges, *report.added_edges))
        if not oracle.is_graded_sparse_bf(full):
            problems.append("extended graph is not graded sparse")
    return problems


def run(args: argparse.Namespace, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        overrides = PINNED_LAMAN if args.pinned_laman else {}
        G = load(_read(args.input), **overrides)
        candidates = None
        if args.command == "extend" and args.candidates:
            candidates = _load_candidates(_read(args.candidates), G)

        if args.command == "decide":
            report = solver.decide(G)
        elif args.command == "extract":
            report = solver.extract(G)
        elif args.command == "components":
            report = solver.components_report(G)
        elif args.command == "optimize":
            report = solver.optimize(G)
        elif args.command == "extend":
            report = solver.extend(G, candidates)
        else:
            report = solver.span_report(G)
    except (OSError, HypergraphError, NotGradedSparse) as exc:
        print(f"error: {exc}", file=stderr)
        return 2

    if args.oracle:
        try:
            mismatches = _cross_check(G, report)
        except oracle.InstanceTooLarge as exc:
            print(f"warning: oracle skipped: {exc}", file=stderr)
        else:
            if mismatches:
                for msg in mismatches:
                    print(f"oracle mismatch: {msg}", file=stderr)
                return 2

    if args.format == "json":
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        text = render_text(report)
    try:
        if args.output in (None, "-"):
            stdout.write(text)
        else:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 2

    if args.command == "decide":
        return 0 if report.is_graded_sparse else 1
    if args.command == "span":
        return 0 if report.is_spanning else 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="hypergraph JSON file (default: stdin)")
    common.add_argument("-o", "--output", help="write the report here (default: stdout)")
    common.add_argument("-f", "--format", choices=("json", "text"), default="text")
    common.add_argument(
        "--pinned-laman",
        action="store_true",
        help="use k=2, ell=[0,3] with standard grading (bars and sliders)",
    )
    common.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="gradedsparse",
        description="Graded sparsity matroids on hypergraphs via pebble games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "decide": "is the hypergraph graded sparse / tight?",
        "extract": "maximum graded sparse subgraph",
        "components": "components of a maximum graded sparse subgraph",
        "optimize": "maximum-weight graded sparse basis",
        "extend": "add edges to a graded sparse hypergraph until it is tight",
        "span": "does the hypergraph contain a spanning graded tight subgraph?",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "extend":
            p.add_argument("--candidates", help="JSON list of candidate edges (required for explicit grading)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
