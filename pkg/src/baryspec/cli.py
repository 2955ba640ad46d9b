"""Command-line interface.

Exit codes: 0 success, 1 a requested verification failed, 2 usage error,
3 refused by the refinement size guard.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import os
import sys

import numpy as np

from . import __version__
from .complex import clique_number, clique_vector, dimension, euler_characteristic, format_clique_vector
from .estimators import OPERATORS
from .graphs import GraphError, parse_generator, read_graph, to_json, to_text
from .operator import barycentric_operator, invariant, left_eigenvectors
from .refine import CACHE_ENV, DEFAULT_SIZE_LIMIT, SizeLimitError, barycentric, refine_iter
from .spectra import (
    cycle_spectrum,
    eigenvalues,
    gaps,
    limit_d1,
    spectral_function,
    write_samples_csv,
    write_spectrum_csv,
)
from .stepfunc import l1_distance
from .svg import step_plot
from .topology import classify, is_contractible, is_sphere

log = logging.getLogger("baryspec")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3
DIMENSION_MAX_VERTICES = 50_000


class UsageError(Exception):
    pass


def _load_graph(args):
    try:
        if getattr(args, "gen", None):
            return parse_generator(args.gen)
        if getattr(args, "graph", None):
            return read_graph(args.graph)
    except (GraphError, OSError) as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("an input graph is required (--gen SPEC or --graph FILE)")


def _graph_or_spec(text: str):
    if os.path.exists(text):
        return read_graph(text)
    return parse_generator(text)


def _refined(args, m: int):
    G = _load_graph(args)
    return refine_iter(G, m, cache=args.cache_dir, limit=args.limit)


def _open_out(path):
    if path in (None, "-"):
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


# -- subcommands --------------------------------------------------------------


def cmd_refine(args) -> int:
    G = _load_graph(args)
    Gm = refine_iter(G, args.m, cache=args.cache_dir, limit=args.limit)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(to_json(Gm) + "\n" if args.format == "json" else to_text(Gm))
    v = clique_vector(Gm)
    print(f"G_{args.m}: {Gm.n} vertices, {Gm.num_edges} edges")
    print(f"clique vector: {format_clique_vector(v)}")
    print(f"euler characteristic: {euler_characteristic(Gm)}")
    if Gm.n <= DIMENSION_MAX_VERTICES:
        dim = dimension(Gm)
        print(f"dimension: {dim} ({float(dim):.6f})")
    else:
        print(f"dimension: skipped (more than {DIMENSION_MAX_VERTICES} vertices)")
    return EXIT_OK


def _operator_matrix(G, name):
    return OPERATORS[name](G)


def cmd_spectrum(args) -> int:
    Gm = _refined(args, args.m)
    S = eigenvalues(_operator_matrix(Gm, args.operator), tol=args.tol)
    with _open_out(args.output) as fh:
        write_spectrum_csv(S, fh)
    F = spectral_function(S)
    if args.samples:
        grid = np.linspace(0.0, 1.0, args.samples)
        with _open_out(args.samples_out) as fh:
            write_samples_csv(F, grid, fh)
    status = EXIT_OK
    if args.verify_cycle:
        if not (Gm.is_connected() and all(d == 2 for d in Gm.degrees())):
            print("verify: graph is not a cycle", file=sys.stderr)
            return EXIT_FAIL
        err = float(np.max(np.abs(S.values - cycle_spectrum(Gm.n))))
        ok = err <= 1e-9
        print(f"verify: max |lambda - 4 sin^2(pi k/{Gm.n})| = {err:.3e} {'PASS' if ok else 'FAIL'}", file=sys.stderr)
        status = EXIT_OK if ok else EXIT_FAIL
    if args.svg:
        G = _load_graph(args)
        top = args.M if args.M is not None else args.m
        funcs = []
        for k in range(1, top + 1):
            Gk = refine_iter(G, k, cache=args.cache_dir, limit=args.limit)
            funcs.append((f"G_{k} ({Gk.n} vertices)", spectral_function(eigenvalues(_operator_matrix(Gk, args.operator)))))
        overlay = None
        if clique_number(G) == 2 and args.operator == "kirchhoff":
            overlay = ("4 sin^2(pi x/2)", limit_d1)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(step_plot(funcs, overlay, title=f"spectral functions, {args.operator}"))
    return status


def cmd_operator(args) -> int:
    A = barycentric_operator(args.N)
    print(A.to_json() if args.format == "json" else A.to_text(), end="\n" if args.format == "json" else "")
    if args.eigenvectors:
        for ev in left_eigenvectors(A):
            print(f"eigenvalue {ev.eigenvalue}: ({', '.join(str(x) for x in ev.vector)})")
    status = EXIT_OK
    for spec in args.verify or []:
        try:
            G = _graph_or_spec(spec)
        except (GraphError, OSError) as exc:
            raise UsageError(str(exc)) from None
        v = clique_vector(G)
        B = barycentric_operator(max(len(v), 1))
        predicted = B.matvec(v) if v else ()
        actual = clique_vector(barycentric(G)) if G.n else ()
        ok = tuple(predicted) == tuple(actual)
        print(f"verify {spec}: A v = {format_clique_vector(predicted)}, v(G_1) = {format_clique_vector(actual)} "
              f"{'PASS' if ok else 'FAIL'}")
        if not ok:
            status = EXIT_FAIL
    return status


def cmd_gaps(args) -> int:
    Gm = _refined(args, args.m)
    S = eigenvalues(_operator_matrix(Gm, args.operator), tol=args.tol)
    table = gaps(S, args.top)
    if args.format == "csv":
        print("k,position,jump")
        for g in table:
            print(f"{g.k},{g.position:.17g},{g.jump:.17g}")
    else:
        print(f"G_{args.m}: {Gm.n} vertices; largest jumps lambda_(k+1) - lambda_k")
        print(f"{'k':>8} {'k/n':>10} {'jump':>12}")
        for g in table:
            print(f"{g.k:>8} {g.position:>10.6f} {g.jump:>12.6f}")
    return EXIT_OK


def cmd_converge(args) -> int:
    G = _load_graph(args)
    d1 = clique_number(G) == 2
    funcs = []
    for k in range(args.M + 1):
        Gk = refine_iter(G, k, cache=args.cache_dir, limit=args.limit)
        funcs.append((Gk.n, spectral_function(eigenvalues(_operator_matrix(Gk, args.operator)))))
    header = f"{'m':>3} {'n':>8} {'|F_m+1 - F_m|_1':>18} {'ratio':>8}"
    if d1:
        header += f" {'|F_m - F_1|_1':>16}"
    print(header)
    dists = []
    for k in range(args.M):
        dist = l1_distance(funcs[k][1], funcs[k + 1][1])
        ratio = dist / dists[-1] if dists and dists[-1] > 0 else float("nan")
        dists.append(dist)
        line = f"{k:>3} {funcs[k][0]:>8} {dist:>18.10f} {ratio:>8.4f}"
        if d1:
            line += f" {l1_distance(funcs[k][1], limit_d1):>16.10f}"
        print(line)
    pos = [(k, d) for k, d in enumerate(dists) if d > 0]
    rate = float("nan")
    if len(pos) >= 2:
        ks, ds = zip(*pos)
        rate = float(np.exp(np.polyfit(ks, np.log(ds), 1)[0]))
    d = clique_number(G) - 1
    print(f"fitted geometric rate: {rate:.6f}   (1/(d+1) = {1 / (d + 1) if d >= 0 else float('nan'):.6f})")
    if args.expect_rate is not None:
        ok = abs(rate - args.expect_rate) <= args.rate_tol
        print(f"rate check |{rate:.4f} - {args.expect_rate}| <= {args.rate_tol}: {'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def cmd_classify(args) -> int:
    G = _refined(args, args.m)
    c = classify(G, budget=args.budget)
    print(f"classification: {c}")
    print(f"search nodes: {c.budget_spent}")
    if c.boundary:
        print(f"boundary vertices: {' '.join(map(str, c.boundary))}")
    if args.contractible:
        v = is_contractible(G, budget=args.budget)
        print(f"contractible: {v.status}" + (f"  collapse order: {' '.join(map(str, v.witness))}" if v.witness else ""))
    if args.sphere is not None:
        v = is_sphere(G, args.sphere, budget=args.budget)
        print(f"{args.sphere}-sphere: {v.status}" + (f"  puncture vertex: {v.witness[0]}" if v.witness else ""))
    if args.expect is not None:
        ok = str(c) == args.expect
        print(f"expected {args.expect!r}: {'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def cmd_invariants(args) -> int:
    G = _refined(args, args.m)
    v = clique_vector(G)
    if not v:
        raise UsageError("empty graph has no invariants")
    v1 = clique_vector(barycentric(G))
    A = barycentric_operator(len(v))
    ok = True
    print(f"clique vector: {format_clique_vector(v)}")
    print(f"{'lambda':>8}  {'f':<32} {'X(G)':>14} {'X(G_1)':>16}  check")
    for ev in left_eigenvectors(A):
        x0, x1 = invariant(ev.vector, v), invariant(ev.vector, v1)
        good = x1 == ev.eigenvalue * x0
        ok &= good
        vec = "(" + ",".join(map(str, ev.vector)) + ")"
        print(f"{ev.eigenvalue:>8}  {vec:<32} {x0:>14} {x1:>16}  {'ok' if good else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------


def _add_input(p, with_m=True):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--gen", help="generator spec: K3, C12, P4, W6, S3, octahedron, icosahedron, cross:d=4, "
                                   "ER:n=10,p=0.4,seed=7")
    src.add_argument("--graph", help="graph file (text or JSON)")
    if with_m:
        p.add_argument("-m", type=_nonneg, default=0, help="refinement depth (default 0)")
    p.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV), help=f"refinement cache (env {CACHE_ENV})")
    p.add_argument("--limit", type=int, default=DEFAULT_SIZE_LIMIT, help="vertex-count limit for refinement")
    p.add_argument("--tol", type=float, default=None, help="eigensolver tolerance")


def _nonneg(text: str) -> int:
    val = int(text)
    if val < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return val


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="baryspec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refine", help="refine a graph and report its clique data")
    _add_input(p)
    p.add_argument("-o", "--output", help="write G_m to this file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("spectrum", help="eigenvalues of G_m as CSV, optional samples and SVG")
    _add_input(p)
    p.add_argument("--operator", choices=sorted(OPERATORS), default="kirchhoff")
    p.add_argument("-o", "--output", help="spectrum CSV (default stdout)")
    p.add_argument("--samples", type=int, default=0, help="number of grid points for an x,F(x) dump")
    p.add_argument("--samples-out", help="sample CSV (default stdout)")
    p.add_argument("--svg", help="plot F for G_1..G_M to this SVG file")
    p.add_argument("-M", type=_nonneg, default=None, help="deepest refinement plotted (default m)")
    p.add_argument("--verify-cycle", action="store_true", help="compare against 4 sin^2(pi k/n)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("operator", help="print the clique-vector operator")
    p.add_argument("-N", type=int, default=8, help="truncation order")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--eigenvectors", action="store_true", help="list left eigenvectors")
    p.add_argument("--verify", nargs="+", metavar="GRAPH", help="graph files or generator specs to check A v(G) = v(G_1)")
    p.set_defaults(func=cmd_operator)

    p = sub.add_parser("gaps", help="largest spectral jumps of G_m")
    _add_input(p)
    p.add_argument("--operator", choices=sorted(OPERATORS), default="kirchhoff")
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("converge", help="L1 distances between consecutive spectral functions")
    _add_input(p, with_m=False)
    p.add_argument("-M", type=_nonneg, default=4, help="deepest refinement")
    p.add_argument("--operator", choices=sorted(OPERATORS), default="kirchhoff")
    p.add_argument("--expect-rate", type=float, default=None, help="fail unless the fitted rate is this close")
    p.add_argument("--rate-tol", type=float, default=0.1)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("classify", help="topological classification of G_m")
    _add_input(p)
    p.add_argument("--budget", type=int, default=10**6, help="search-node budget")
    p.add_argument("--contractible", action="store_true", help="also test contractibility")
    p.add_argument("--sphere", type=int, default=None, metavar="D", help="also test for a D-sphere")
    p.add_argument("--expect", default=None, help="fail unless the classification prints as this")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", help="eigenvector invariants X_f(G) and their scaling")
    _add_input(p)
    p.set_defaults(func=cmd_invariants)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"baryspec {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"baryspec {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"baryspec {args.command}: refused: {exc}", file=sys.stderr)
        return EXIT_SIZE


if __name__ == "__main__":
    sys.exit(main())
