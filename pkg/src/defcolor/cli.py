"""Command-line surface: generation, depth, minors, coloring, schemes,
and the derived-constants table.

Exit status: 0 success or a positive answer, 1 a computed negative answer
(infeasible, no minor, dirty certificate), 2 usage or input errors,
3 exhausted budgets or failed searches.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import graphs
from .constants import paper_constants
from .coloring import Coloring, decide_defective
from .depth import clustered_bounds, connected_tree_depth, omega_delta_excluded
from .errors import (
    BucketTooSmallError,
    BudgetExceededError,
    CertificationError,
    DefcolorError,
    GeodesicTooShortError,
    InputFormatError,
    SearchFailureError,
    SizeLimitError,
)
from .minors import MinorModel, has_minor, verify_model
from .scheme import (
    SchemeParams,
    build_scheme,
    certify_scheme,
    color_from_scheme,
    scheme_from_json,
    scheme_to_json,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None):
    if not text.endswith("\n"):
        text += "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_graph(g: graphs.Graph, fmt: str, out: str | None):
    if fmt == "json":
        _emit(graphs.to_edge_json(g), out)
    else:
        _emit(graphs.to_graph6(g) + "\n", out)


def _load_graph(path: str) -> graphs.Graph:
    return graphs.parse_graph(_read(path))


def _load_params(path: str) -> SchemeParams:
    try:
        return SchemeParams.from_json(json.loads(_read(path)))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputFormatError(f"bad params file: {exc}") from exc


def _coloring_json(c: Coloring) -> str:
    return json.dumps({"k": c.k, "colors": list(c.colors)}) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="defcolor",
        description="defective-coloring toolkit: generators, depth, minors, "
        "exact coloring, elimination schemes",
    )
    ap.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("DEFCOLOR_SEED", "0")),
        help="seed for randomized subroutines (env DEFCOLOR_SEED)",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate graphs")
    gen_sub = gen.add_subparsers(dest="what", required=True)
    g_ct = gen_sub.add_parser("ct", help="closure of a balanced tree")
    g_ct.add_argument("--h", type=int, required=True, dest="height")
    g_ct.add_argument("--k", type=int, required=True, dest="arity")
    g_ct.add_argument("--budget-vertices", type=int, default=graphs.DEFAULT_VERTEX_BUDGET)
    g_join = gen_sub.add_parser("join", help="join of two graphs")
    g_join.add_argument("a")
    g_join.add_argument("b")
    g_join.add_argument("--budget-vertices", type=int, default=graphs.DEFAULT_VERTEX_BUDGET)
    g_cp = gen_sub.add_parser("copies", help="disjoint copies of a graph")
    g_cp.add_argument("--count", type=int, required=True)
    g_cp.add_argument("graph")
    g_cp.add_argument("--budget-vertices", type=int, default=graphs.DEFAULT_VERTEX_BUDGET)
    for p in (g_ct, g_join, g_cp):
        p.add_argument("--format", choices=("g6", "json"), default="g6")
        p.add_argument("-o", "--output", default=None)

    dp = sub.add_parser("depth", help="tree-depth report")
    dp.add_argument("graph")
    dp.add_argument("--limit", type=int, default=20)
    dp.add_argument("-o", "--output", default=None)

    mi = sub.add_parser("minor", help="minor containment with certificate")
    mi.add_argument("host")
    mi.add_argument("--pattern", required=True)
    mi.add_argument("--mode", choices=("exhaustive", "heuristic"), default="exhaustive")
    mi.add_argument(
        "--verify",
        default=None,
        help="verify a branch-set model document instead of searching",
    )
    mi.add_argument("--budget-nodes", type=int, default=None)
    mi.add_argument("-o", "--output", default=None)

    co = sub.add_parser("color", help="defect-bounded coloring")
    co.add_argument("graph", nargs="?")
    co.add_argument("--exact", action="store_true")
    co.add_argument("--k", type=int)
    co.add_argument("--d", type=int)
    co.add_argument("--max-vertices", type=int, default=16)
    co.add_argument("--budget-nodes", type=int, default=None)
    co.add_argument("--scheme", default=None, help="color via a scheme document")
    co.add_argument("--params", default=None, help="scheme parameter JSON file")
    co.add_argument("-o", "--output", default=None)

    sc = sub.add_parser("scheme", help="build / certify / color schemes")
    sc_sub = sc.add_subparsers(dest="action", required=True)
    s_b = sc_sub.add_parser("build")
    s_b.add_argument("graph")
    s_c = sc_sub.add_parser("certify")
    s_c.add_argument("scheme")
    s_l = sc_sub.add_parser("color")
    s_l.add_argument("scheme")
    for p in (s_b, s_c, s_l):
        p.add_argument("--params", required=True)
        p.add_argument("-o", "--output", default=None)

    cn = sub.add_parser("constants", help="derived-constant table")
    cn.add_argument("--h", type=int, required=True, dest="height")
    cn.add_argument("--k", type=int, required=True, dest="arity")
    cn.add_argument("--r", type=int, required=True)
    cn.add_argument("--d-homo", type=int, required=True)
    cn.add_argument("--n1", type=int, required=True)
    cn.add_argument("--n2", type=int, required=True)
    cn.add_argument("--budget-vertices", type=int, default=graphs.DEFAULT_VERTEX_BUDGET)
    cn.add_argument("-o", "--output", default=None)
    return ap


def _run(args) -> int:
    if args.verb == "gen":
        if args.what == "ct":
            g = graphs.ct(args.height, args.arity, budget=args.budget_vertices)
        elif args.what == "join":
            g = graphs.join(
                _load_graph(args.a), _load_graph(args.b), budget=args.budget_vertices
            )
        else:
            g = graphs.disjoint_copies(
                args.count, _load_graph(args.graph), budget=args.budget_vertices
            )
        _emit_graph(g, args.format, args.output)
        return EXIT_OK

    if args.verb == "depth":
        g = _load_graph(args.graph)
        report = connected_tree_depth(g, limit=args.limit)
        doc = {
            "td": report.td,
            "ctd": report.ctd,
            "witness": {
                "root": report.witness.root,
                "parent": [
                    -1 if p is None else p for p in report.witness.parent
                ],
            },
            "embedding": list(report.embedding),
        }
        if g.n > 0:
            bounds = clustered_bounds(g, limit=args.limit)
            doc["omega_delta"] = omega_delta_excluded(g, limit=args.limit)
            doc["clustered_bounds"] = {
                "lower": bounds.lower,
                "general": bounds.general,
                "conditional_planar": bounds.conditional_planar,
            }
        _emit(json.dumps(doc), args.output)
        return EXIT_OK

    if args.verb == "minor":
        host = _load_graph(args.host)
        pattern = _load_graph(args.pattern)
        if args.verify is not None:
            doc = json.loads(_read(args.verify))
            model = MinorModel(
                {int(pv): frozenset(s) for pv, s in doc.items()}
            )
            ok, violation = verify_model(host, pattern, model)
            out = {"valid": ok}
            if violation is not None:
                out["violation"] = {
                    "clause": violation.clause,
                    "witness": list(violation.witness),
                }
            _emit(json.dumps(out), args.output)
            return EXIT_OK if ok else EXIT_NEGATIVE
        kwargs = {}
        if args.budget_nodes is not None:
            kwargs["node_budget"] = args.budget_nodes
        model = has_minor(host, pattern, mode=args.mode, seed=args.seed, **kwargs)
        if model is None:
            _emit(json.dumps({}), args.output)
            return EXIT_NEGATIVE
        ok, _ = verify_model(host, pattern, model)
        if not ok:
            raise DefcolorError("internal: search produced an invalid model")
        doc = {str(pv): sorted(s) for pv, s in model.branch_sets.items()}
        _emit(json.dumps(doc), args.output)
        return EXIT_OK

    if args.verb == "color":
        if args.scheme is not None:
            if args.params is None:
                raise InputFormatError("--scheme needs --params")
            params = _load_params(args.params)
            scheme = scheme_from_json(_read(args.scheme))
            original = scheme[0].graph if scheme else graphs.empty_graph(0)
            coloring = color_from_scheme(scheme, params, original)
            _emit(_coloring_json(coloring), args.output)
            return EXIT_OK
        if not args.exact or args.k is None or args.d is None or args.graph is None:
            raise InputFormatError("exact mode needs a graph, --exact, --k and --d")
        g = _load_graph(args.graph)
        report = decide_defective(
            g, args.k, args.d, max_vertices=args.max_vertices,
            node_budget=args.budget_nodes,
        )
        if not report.feasible:
            _emit(json.dumps({"feasible": False}), args.output)
            return EXIT_NEGATIVE
        _emit(_coloring_json(report.coloring), args.output)
        return EXIT_OK

    if args.verb == "scheme":
        params = _load_params(args.params)
        if args.action == "build":
            g = _load_graph(args.graph)
            scheme = build_scheme(g, params)
            _emit(scheme_to_json(scheme), args.output)
            return EXIT_OK
        scheme = scheme_from_json(_read(args.scheme))
        original = scheme[0].graph if scheme else graphs.empty_graph(0)
        if args.action == "certify":
            report = certify_scheme(scheme, params, original)
            _emit(json.dumps(report.to_json()), args.output)
            return EXIT_OK if report.clean() else EXIT_NEGATIVE
        coloring = color_from_scheme(scheme, params, original)
        _emit(_coloring_json(coloring), args.output)
        return EXIT_OK

    if args.verb == "constants":
        table = paper_constants(
            args.height, args.arity, args.r, args.d_homo, args.n1, args.n2,
            budget=args.budget_vertices,
        )
        _emit(json.dumps(table.to_json()), args.output)
        return EXIT_OK

    raise InputFormatError(f"unknown verb {args.verb!r}")


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _run(args)
    except (
        BudgetExceededError,
        SizeLimitError,
        SearchFailureError,
        BucketTooSmallError,
        GeodesicTooShortError,
        CertificationError,
    ) as exc:
        print(f"defcolor: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputFormatError, FileNotFoundError, ValueError) as exc:
        print(f"defcolor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DefcolorError as exc:
        print(f"defcolor: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
