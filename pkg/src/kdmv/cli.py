"""Command-line interface.

Verbs: chi, mu, gamma, gammat, gammak, rho2, theta, eod, construct, suite,
probe, gen.  Graph arguments use the spec grammar (path:7, cycle:4,
strong(path:15,complete:3), named:figgirth, g6:..., file:...).  Reports go to
stdout as JSON, or to --out as JSON/CSV.  Exit codes: 0 success with zero
failures, 2 usage errors, 3 budget exhaustion under --exact-required, 1 for
suite failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import CheckSpec, counterexample_search, run_suite
from .chromatic import chi_i_mu2_exact, chi_mu_k_exact, clique_cover_theta, verify_kdmv_coloring
from .coloring import Coloring, SolveResult
from .constructions import (
    block_graph_coloring,
    cartesian_corona_c4_coloring,
    color_cycle,
    color_path,
    color_strong_path_complete,
    hypercube_neighborhood_coloring,
    torus_eod_coloring,
    tree_half_coloring,
)
from .domination import (
    efficient_open_dominating_set,
    gamma_exact,
    gamma_k_exact,
    gamma_t_exact,
    rho2_exact,
)
from .errors import KdmvError
from .families import from_spec, hypercube
from .graph import girth, product
from .graph6 import to_graph6
from .visibility import max_kdmv

DEFAULT_BUDGET = 10**7


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")


def _solve_json(result: SolveResult) -> str:
    return json.dumps(result.to_json(), sort_keys=True)


def _finish_solver(result: SolveResult, args) -> int:
    _emit(_solve_json(result), args.out)
    if args.exact_required and not result.is_exact:
        return 3
    return 0


def _add_common(p: argparse.ArgumentParser, with_graph: bool = True) -> None:
    if with_graph:
        p.add_argument("graph", help="graph spec, e.g. cycle:7 or strong(path:15,complete:3)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search-node budget")
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")
    p.add_argument("--exact-required", action="store_true", help="exit 3 when the budget truncates a solve")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kdmv", description=__doc__)
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("chi", help="k-distance mutual-visibility chromatic number")
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("mu", help="maximum kDMV set size")
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    for verb, help_text in (
        ("gamma", "domination number"),
        ("gammat", "total domination number"),
        ("rho2", "2-packing number"),
        ("theta", "clique cover number"),
        ("imu2", "independent 2DMV chromatic number"),
    ):
        p = sub.add_parser(verb, help=help_text)
        _add_common(p)

    p = sub.add_parser("gammak", help="distance-k domination number")
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("eod", help="efficient open dominating set, if one exists")
    _add_common(p)

    p = sub.add_parser("construct", help="build a certified coloring")
    p.add_argument("--scheme", required=True, choices=[
        "path", "cycle", "strong-path-complete", "block", "tree-half",
        "hypercube-neighborhood", "torus-eod", "corona-c4",
    ])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("graph", nargs="?", default=None, help="graph spec for graph-based schemes")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", default=None)
    p.add_argument("--exact-required", action="store_true")

    p = sub.add_parser("suite", help="run theorem checks over a corpus")
    p.add_argument("--corpus", required=True, help="geng:n<=K, file:PATH, or comma-separated specs")
    p.add_argument("--checks", required=True, help="comma-separated check ids")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--k-values", default="2", help="comma-separated k values for k-ranged checks")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--exact-required", action="store_true")

    p = sub.add_parser("probe", help="counterexample search for an open problem")
    p.add_argument("--problem", required=True,
                   choices=["OpenQnEquality", "OpenCartesianGamma", "OpenBlockTheta"])
    p.add_argument("--limit", type=int, required=True, help="size limit (dimension or vertex count)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("gen", help="emit graph6 for a spec or corpus")
    p.add_argument("corpus", help="graph spec or corpus spec (geng:n<=K)")
    p.add_argument("--out", default=None)
    return ap


def _run_construct(args) -> int:
    scheme = args.scheme
    k = args.k
    if scheme == "path":
        g = from_spec(f"path:{args.n}")
        coloring = color_path(args.n, k if k else 2)
        k = k if k else 2
    elif scheme == "cycle":
        g = from_spec(f"cycle:{args.n}")
        coloring = color_cycle(args.n, k if k else 2)
        k = k if k else 2
    elif scheme == "strong-path-complete":
        if args.n is None or args.m is None or k is None:
            raise KdmvError("strong-path-complete needs --n, --m and --k")
        g = from_spec(f"strong(path:{args.n},complete:{args.m})")
        coloring = color_strong_path_complete(args.n, args.m, k)
    elif scheme == "torus-eod":
        if args.m is None or args.n is None:
            raise KdmvError("torus-eod needs --m and --n")
        g = from_spec(f"torus:{args.m},{args.n}")
        coloring = torus_eod_coloring(args.m, args.n)
        k = 2
    elif scheme == "hypercube-neighborhood":
        if args.n is None:
            raise KdmvError("hypercube-neighborhood needs --n (dimension)")
        g = hypercube(args.n)
        dom = gamma_exact(g, args.budget)
        coloring = hypercube_neighborhood_coloring(args.n, sorted(dom.witness))
        k = 2
    elif scheme in ("block", "tree-half", "corona-c4"):
        if args.graph is None:
            raise KdmvError(f"{scheme} needs a graph spec argument")
        inner = from_spec(args.graph)
        if scheme == "block":
            g = inner
            from .graph import all_pairs_distances

            coloring = block_graph_coloring(inner)
            k = all_pairs_distances(inner).diameter() - 1
        elif scheme == "tree-half":
            g = inner
            coloring = tree_half_coloring(inner)
            k = 2
        else:
            from .families import corona
            from .families import cycle_graph

            coloring = cartesian_corona_c4_coloring(inner)
            g = product("cartesian", corona(inner), cycle_graph(4))
            k = 2
    else:  # pragma: no cover - argparse restricts choices
        raise KdmvError(f"unknown scheme {scheme!r}")
    report = verify_kdmv_coloring(g, k, coloring)
    payload = {
        "scheme": scheme,
        "k": k,
        "num_classes": coloring.num_classes,
        "classes": coloring.to_json(),
        "verified": report.ok,
    }
    _emit(json.dumps(payload, sort_keys=True), args.out)
    return 0 if report.ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "chi":
            return _finish_solver(chi_mu_k_exact(from_spec(args.graph), args.k, args.budget), args)
        if args.verb == "mu":
            return _finish_solver(max_kdmv(from_spec(args.graph), args.k, args.budget), args)
        if args.verb == "gamma":
            return _finish_solver(gamma_exact(from_spec(args.graph), args.budget), args)
        if args.verb == "gammat":
            return _finish_solver(gamma_t_exact(from_spec(args.graph), args.budget), args)
        if args.verb == "gammak":
            return _finish_solver(gamma_k_exact(from_spec(args.graph), args.k, args.budget), args)
        if args.verb == "rho2":
            return _finish_solver(rho2_exact(from_spec(args.graph), args.budget), args)
        if args.verb == "theta":
            return _finish_solver(clique_cover_theta(from_spec(args.graph), args.budget), args)
        if args.verb == "imu2":
            return _finish_solver(chi_i_mu2_exact(from_spec(args.graph), args.budget), args)
        if args.verb == "eod":
            d = efficient_open_dominating_set(from_spec(args.graph))
            payload = {"exists": d is not None, "set": sorted(d) if d is not None else None}
            _emit(json.dumps(payload, sort_keys=True), args.out)
            return 0
        if args.verb == "construct":
            return _run_construct(args)
        if args.verb == "suite":
            ks = tuple(int(x) for x in args.k_values.split(","))
            specs = [CheckSpec(c.strip(), budget=args.budget, ks=ks) for c in args.checks.split(",")]
            report = run_suite(args.corpus, specs)
            _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
            if args.exact_required and report.summary["skipped"]:
                return 3
            return 0 if report.failed == 0 else 1
        if args.verb == "probe":
            report = counterexample_search(args.problem, args.limit, args.budget)
            _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
            return 0
        if args.verb == "gen":
            if args.corpus.startswith(("geng:", "file:")):
                from .checks import resolve_corpus

                lines = [to_graph6(g) for _, g, _ in resolve_corpus(args.corpus)]
            else:
                lines = [to_graph6(from_spec(args.corpus))]
            _emit("\n".join(lines), args.out)
            return 0
    except KdmvError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    raise AssertionError("unhandled verb")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
