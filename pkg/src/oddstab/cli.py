"""Command line interface: ``oddstab <subcommand> ...``.

Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from statistics import mean

from . import __version__
from .bipartization import MAXCUT_LIMIT, edge_bipartization, oct_exact
from .core import CorePreconditionError, grow_strong_core
from .decomposition import (
    DiagnosticFailure, SuspensionDecomposition, certifies_free_of_odd_cycle, decompose,
    derived_bounds, verify_decomposition,
)
from .families import FamilySpec
from .formats import GraphParseError, format_graph, read_graph
from .graph import Graph, biconnected_components
from .harness import SUITES, run_suite
from .parity import has_cycle_of_length, shortest_odd_cycle

FAMILIES = ("complete-bipartite", "turan", "t-star", "c5-blowup", "planted", "random")


class UsageError(Exception):
    pass


def _emit(obj, path: str | None = None) -> None:
    text = json.dumps(obj, indent=1, default=str)
    if path:
        Path(path).write_text(text + "\n")
    else:
        print(text)


def _load(args) -> Graph:
    try:
        return read_graph(args.graph, args.format)
    except FileNotFoundError as e:
        raise UsageError(f"cannot read {args.graph}: {e.strerror}") from e
    except GraphParseError as e:
        raise UsageError(f"{args.graph}: {e}") from e


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as e:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from e


# -- subcommands --------------------------------------------------------------------


def cmd_construct(args) -> int:
    params = {}
    if args.family == "complete-bipartite":
        params = {"a": args.a, "b": args.b}
    elif args.family in ("turan", "t-star"):
        params = {"r": args.r, "n": args.n}
    elif args.family == "c5-blowup":
        params = {"sizes": _ints(args.sizes or "")}
    elif args.family == "planted":
        params = {"a": args.a, "b": args.b, "sizes": _ints(args.sizes or ""),
                  "anchor_policy": args.anchor_policy, "seed": args.seed}
    elif args.family == "random":
        params = {"n": args.n, "p": args.p, "seed": args.seed}
    if any(v is None for v in params.values()):
        missing = [k for k, v in params.items() if v is None]
        raise UsageError(f"family {args.family} needs --{' --'.join(missing)}")
    try:
        g = FamilySpec(args.family, params).build()
    except ValueError as e:
        raise UsageError(str(e)) from e
    text = format_graph(g, args.out)
    if args.output:
        Path(args.output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def cmd_analyze(args) -> int:
    g = _load(args)
    cyc = shortest_odd_cycle(g)
    tree = biconnected_components(g)
    deg = g.degrees()
    _emit({
        "n": g.n,
        "m": g.m,
        "bipartite": cyc is None,
        "odd_girth": None if cyc is None else cyc.length,
        "shortest_odd_cycle": None if cyc is None else list(cyc.vertices),
        "blocks": len(tree.blocks),
        "largest_block": max((len(b) for b in tree.blocks), default=0),
        "cut_vertices": sorted(tree.cut_vertices),
        "degree": {"min": min(deg, default=0), "max": max(deg, default=0),
                   "mean": round(mean(deg), 4) if deg else 0.0},
    }, args.report)
    return 0


def cmd_decompose(args) -> int:
    g = _load(args)
    d = decompose(g, args.k, args.r)
    if isinstance(d, DiagnosticFailure):
        _emit({"decomposed": False, "failure": d.to_json()}, args.cert)
        return 1
    _emit(d.to_json(), args.cert)
    return 0


def cmd_verify_cert(args) -> int:
    g = _load(args)
    try:
        d = SuspensionDecomposition.from_json(json.loads(Path(args.cert).read_text()))
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise UsageError(f"cannot load certificate {args.cert}: {e}") from e
    v = verify_decomposition(g, d, args.r)
    _emit(v.to_json(), args.report)
    return 0 if v.ok else 1


def cmd_d2(args) -> int:
    g = _load(args)
    res = oct_exact(g, args.budget)
    if res is None:
        _emit({"value": None, "exceeds_budget": args.budget}, args.report)
        return 1
    _emit(res.to_json(), args.report)
    return 0


def cmd_gamma2(args) -> int:
    g = _load(args)
    d = None
    if args.cert:
        try:
            d = SuspensionDecomposition.from_json(json.loads(Path(args.cert).read_text()))
        except (OSError, ValueError, KeyError, TypeError) as e:
            raise UsageError(f"cannot load certificate {args.cert}: {e}") from e
    elif g.n > MAXCUT_LIMIT:
        raise UsageError(f"n={g.n} exceeds the exact limit {MAXCUT_LIMIT}; pass --cert with a decomposition")
    if d is not None and g.n > MAXCUT_LIMIT:
        try:
            derived_bounds(g, d)  # structural re-check of the certificate
        except ValueError as e:
            _emit({"accepted": False, "message": str(e)}, args.report)
            return 1
    _emit(edge_bipartization(g, d).to_json(), args.report)
    return 0


def cmd_core(args) -> int:
    g = _load(args)
    if args.seed_cycle:
        seed = _ints(args.seed_cycle)
    else:
        cyc = shortest_odd_cycle(g)
        if cyc is None:
            _emit({"core": None, "message": "graph is bipartite"}, args.report)
            return 1
        seed = list(cyc.vertices)
    try:
        cert = grow_strong_core(g, seed, args.k)
    except CorePreconditionError as e:
        _emit({"core": None, "message": str(e)}, args.report)
        return 1
    _emit(cert.to_json(), args.report)
    return 0


def cmd_check_free(args) -> int:
    g = _load(args)
    L = args.length
    if L < 3:
        raise UsageError("--length must be at least 3")
    cyc = has_cycle_of_length(g, L) if L <= g.n else None
    out = {"length": L, "free": cyc is None, "cycle": cyc, "mode": "exhaustive"}
    if args.cert:
        try:
            d = SuspensionDecomposition.from_json(json.loads(Path(args.cert).read_text()))
        except (OSError, ValueError, KeyError, TypeError) as e:
            raise UsageError(f"cannot load certificate {args.cert}: {e}") from e
        out["certificate_says_free"] = certifies_free_of_odd_cycle(d, L)
    _emit(out, args.report)
    return 0 if cyc is None else 1


def _param(text: str):
    key, sep, value = text.partition("=")
    if not sep:
        raise UsageError(f"suite parameter must look like key=value, got {text!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def cmd_verify_theorem(args) -> int:
    params = dict(_param(p) for p in args.param or [])
    try:
        report = run_suite(args.suite, **params)
    except TypeError as e:
        raise UsageError(f"bad parameters for suite {args.suite}: {e}") from e
    _emit(report.to_json(), args.report)
    s = report.summary
    print(f"{args.suite}: {s['passed']}/{s['total']} checks passed in {report.wall_time:.1f}s", file=sys.stderr)
    return 0 if report.ok else 1


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddstab", description="Odd-cycle-free graph structure toolkit")
    p.add_argument("--version", action="version", version=f"oddstab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="graph file (graph6 or edge list)")
        sp.add_argument("--format", choices=("graph6", "g6", "edge-list", "edges"),
                        help="input format (default: guess from extension and content)")
        sp.set_defaults(func=func)
        return sp

    c = sub.add_parser("construct", help="build a graph from a named family")
    c.add_argument("--family", required=True, choices=FAMILIES)
    c.add_argument("--out", choices=("g6", "edges"), default="g6", help="output format")
    c.add_argument("-o", "--output", help="output file (default: stdout)")
    c.add_argument("--a", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--p", type=float)
    c.add_argument("--sizes", help="comma-separated sizes (c5-blowup parts or planted suspensions)")
    c.add_argument("--anchor-policy", choices=("distinct", "chain"), default="distinct")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_construct)

    a = graph_cmd("analyze", cmd_analyze, "odd girth, bipartiteness, blocks and degree statistics")
    a.add_argument("--report")

    d = graph_cmd("decompose", cmd_decompose, "bipartite base plus suspensions")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--r", type=int, required=True)
    d.add_argument("--cert", help="write the certificate here (default: stdout)")

    v = graph_cmd("verify-cert", cmd_verify_cert, "re-check a decomposition certificate")
    v.add_argument("cert")
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--report")

    d2 = graph_cmd("d2", cmd_d2, "exact minimum odd cycle transversal")
    d2.add_argument("--budget", type=int)
    d2.add_argument("--report")

    g2 = graph_cmd("gamma2", cmd_gamma2, "minimum edge bipartization")
    g2.add_argument("--cert", help="decomposition certificate, required above the exact limit")
    g2.add_argument("--report")

    co = graph_cmd("core", cmd_core, "grow a strong-2k-core from an odd cycle")
    co.add_argument("--k", type=int, required=True)
    co.add_argument("--seed-cycle", help="comma-separated odd cycle (default: a shortest odd cycle)")
    co.add_argument("--report")

    cf = graph_cmd("check-free", cmd_check_free, "search for a cycle of the given length")
    cf.add_argument("--length", type=int, required=True)
    cf.add_argument("--cert", help="also report what a decomposition certificate implies")
    cf.add_argument("--report")

    t = sub.add_parser("verify-theorem", help="run a verification suite")
    t.add_argument("--suite", required=True, choices=SUITES + ("all",))
    t.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="suite parameter, value parsed as JSON when possible (repeatable)")
    t.add_argument("--report", help="write the JSON report here (default: stdout)")
    t.set_defaults(func=cmd_verify_theorem)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"oddstab {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
