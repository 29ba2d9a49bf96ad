"""Command-line front end.

Exit codes: 0 success, 2 unreadable or invalid input, 3 underlying graph
not connected enough, 4 obstruction found, 5 middle-search cap reached,
6 flip graph too large to enumerate.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import connectivity, flip_core, local_reach, oracle
from .errors import (
    MiddleSearchTooLarge,
    OrientFlipError,
    ParseError,
    TooLarge,
    UnderlyingConnectivityTooLow,
)
from .formats import format_graph, read_graph, read_orientation
from .multigraph import complete_graph, cycle_graph, duplicate

EXIT_INPUT = 2
EXIT_UNDERLYING = 3
EXIT_OBSTRUCTION = 4
EXIT_CAP = 5
EXIT_TOO_LARGE = 6


def _digest(*paths) -> str:
    h = hashlib.sha256()
    for p in paths:
        with open(p, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()


def _report(args, G, k, seq, started, paths):
    return {
        "command": " ".join(sys.argv[1:]) or args.command,
        "inputs_digest": _digest(*paths),
        "graph": {"n": G.n, "m": G.m},
        "k": k,
        "sequence": list(seq.flips),
        "lambdas": list(seq.lambdas),
        "val_trace": list(seq.vals),
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def _write_json(path, report):
    with open(path, "w") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def cmd_lambda(args, out):
    G = read_graph(args.graph)
    if args.orientation:
        D = read_orientation(args.orientation, G)
        print(connectivity.lambda_directed(D), file=out)
    else:
        print(connectivity.lambda_undirected(G), file=out)
    return 0


def cmd_orient(args, out):
    started = time.perf_counter()
    G = read_graph(args.graph)
    D = read_orientation(args.orientation, G)
    seq, final = flip_core.orient_k_connected(D, args.k)
    for e in seq.flips:
        print(e, file=out)
    print(f"# lambda: {connectivity.lambda_directed(final)}", file=out)
    if args.json:
        _write_json(args.json, _report(args, G, args.k, seq, started, [args.graph, args.orientation]))
    return 0


def cmd_reconfigure(args, out):
    started = time.perf_counter()
    G = read_graph(args.graph)
    D1 = read_orientation(args.orient1, G)
    D2 = read_orientation(args.orient2, G)
    if args.k == 1:
        obstruction = local_reach.find_obstruction(D1, D2)
        if obstruction is not None:
            e, f = obstruction.cut_edges
            print(f"OBSTRUCTION {e} {f}", file=out)
            return EXIT_OBSTRUCTION
        seq = local_reach.reconfigure_strong(D1, D2)
    else:
        try:
            seq = flip_core.reconfigure_k(D1, D2, args.k, cap=args.cap)
        except MiddleSearchTooLarge as exc:
            partial = exc.partial or {}
            print("MIDDLE-SEARCH-CAP", file=out)
            if partial:
                print(f"# start {partial['start'].bits()}", file=out)
                print(f"# goal {partial['goal'].bits()}", file=out)
            return EXIT_CAP
    for e in seq.flips:
        print(e, file=out)
    if args.json:
        _write_json(args.json, _report(args, G, args.k, seq, started,
                                       [args.graph, args.orient1, args.orient2]))
    return 0


def cmd_flipgraph(args, out):
    G = read_graph(args.graph)
    if (1 << G.m) > args.cap:
        raise TooLarge(f"2^{G.m} orientations exceeds the cap {args.cap}")
    FG = oracle.build_flip_graph(G, args.k, cap=G.m)
    diameter = FG.diameter()
    print(f"nodes={len(FG.nodes)} edges={len(FG.adjacency)} "
          f"connected={'true' if FG.is_connected() else 'false'} "
          f"diameter={'inf' if diameter is None else diameter}", file=out)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(FG.to_dot())
    return 0


def cmd_gen(args, out):
    G = cycle_graph(args.n) if args.family == "cycle" else complete_graph(args.n)
    if args.dup > 1:
        G = duplicate(G, args.dup)
    out.write(format_graph(G))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orientflip", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=None, help="reserved; the core is deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="edge-connectivity of a graph or an orientation")
    p.add_argument("graph")
    p.add_argument("orientation", nargs="?")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("orient", help="flip sequence to a k-edge-connected orientation")
    p.add_argument("graph")
    p.add_argument("orientation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("reconfigure", help="flip sequence between two k-edge-connected orientations")
    p.add_argument("graph")
    p.add_argument("orient1")
    p.add_argument("orient2")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_reconfigure)

    p = sub.add_parser("flipgraph", help="statistics of the flip graph of k-edge-connected orientations")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dot")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_flipgraph)

    p = sub.add_parser("gen", help="print a test graph")
    p.add_argument("family", choices=["cycle", "complete"])
    p.add_argument("n", type=int)
    p.add_argument("--dup", type=int, default=1, help="x-fold duplicate every edge")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    if getattr(args, "cap", None) is None:
        args.cap = oracle.node_cap_from_env()
    try:
        return args.func(args, out)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnderlyingConnectivityTooLow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDERLYING
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except OrientFlipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
