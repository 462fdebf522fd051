"""Command-line front end.

Subcommands: catalog (name registry and graph output), spectrum, bounds,
lambda-star-k, lambda-star-c, and reproduce (the worked-example table).
Exit codes: 0 success, 1 assertion/row failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog as cat
from .bounds import bound_report
from .cliqopt import lambda_star_C, lambda_star_K
from .graph_io import (
    ParseError,
    certificate_to_json,
    format_edge_list,
    load_graph_text,
    partition_from_json,
    require_simple,
)
from .rationals import format_q
from .reproduce import build_rows, format_table, rows_to_json
from .spectra import spectrum, verified_integer_eigenvalues

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _threads() -> int:
    raw = os.environ.get("SPECTRAL_LB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return load_graph_text(text)


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name, schema in cat.catalog_names():
            print(f"{name} {schema}".rstrip())
        return EXIT_OK
    g = cat.named_graph(args.name, tuple(args.params))
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    g = _read_graph(args.graph)
    spec = spectrum(g.adjacency(dtype=float))
    exact = set()
    if g.n <= 64:
        exact = set(verified_integer_eigenvalues(g.adjacency(dtype=object)))
    for v in spec.values:
        flag = ""
        r = round(float(v))
        if r in exact and abs(float(v) - r) < 1e-8:
            flag = f"  (= {r}, exact)"
        print(f"{float(v):+.12f}{flag}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    g = require_simple(_read_graph(args.graph))
    partition = None
    if args.partition:
        with open(args.partition) as fh:
            partition = partition_from_json(json.load(fh))
    rep = bound_report(g, name=args.graph, partition=partition, lp=args.lp)
    doc = {
        "graph": rep.graph,
        "n": rep.n,
        "m": rep.m,
        "lambda": round(rep.lam, 12),
        "bounds": [
            {
                "name": en.name,
                "kind": en.kind,
                "value": round(en.value, 12),
                "exact": format_q(en.exact) if en.exact is not None else None,
                "tight": bool(en.tight),
                "note": en.note,
            }
            for en in rep.entries
        ],
    }
    as_json = json.dumps(doc, indent=2, sort_keys=True)
    if args.json and not args.all:
        print(as_json)
        return EXIT_OK
    print(f"graph {rep.graph}: n={rep.n} m={rep.m} lambda={rep.lam:.12f}")
    width = max((len(en.name) for en in rep.entries), default=4)
    for en in rep.entries:
        exact = f" = {format_q(en.exact)}" if en.exact is not None else ""
        tight = " tight" if en.tight else ""
        note = f" [{en.note}]" if en.note else ""
        print(f"  {en.name.ljust(width)}  {en.kind:5s}  {en.value:+.12f}{exact}{tight}{note}")
    if args.all:
        print(as_json)
    bad = [
        en
        for en in rep.entries
        if (en.kind == "lower" and en.value > rep.lam + 1e-8)
        or (en.kind == "upper" and en.value < rep.lam - 1e-8)
    ]
    if bad:
        print(f"BOUND VIOLATION: {', '.join(en.name for en in bad)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _cmd_lambda_star_k(args) -> int:
    g = require_simple(_read_graph(args.graph))
    res = lambda_star_K(g)
    print(f"lambda*_K = {format_q(res.value)}  (mu = {res.mu})")
    if args.cert:
        with open(args.cert, "w") as fh:
            json.dump(certificate_to_json(res), fh, indent=2, sort_keys=True)
        print(f"certificate written to {args.cert}")
    return EXIT_OK


def _cmd_lambda_star_c(args) -> int:
    g = _read_graph(args.graph)
    res = lambda_star_C(g)
    print(f"lambda*_C = {format_q(res.value)}  (mu = {res.mu})")
    if args.cert:
        with open(args.cert, "w") as fh:
            json.dump(certificate_to_json(res), fh, indent=2, sort_keys=True)
        print(f"certificate written to {args.cert}")
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    perturb = "petersen" if args.negative_control else None
    rows = build_rows(perturb=perturb, threads=_threads())
    if args.filter:
        rows = [r for r in rows if args.filter in r.example]
        if not rows:
            print(f"no rows match filter {args.filter!r}", file=sys.stderr)
            return EXIT_INPUT
    print(format_table(rows))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows_to_json(rows), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spectral-lb", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("catalog", help="list named graphs or print one")
    pc.add_argument("action", choices=["list", "get"])
    pc.add_argument("name", nargs="?", help="graph name (for get)")
    pc.add_argument("params", nargs="*", help="constructor parameters")
    pc.set_defaults(func=_cmd_catalog)

    ps = sub.add_parser("spectrum", help="sorted eigenvalues of a graph file")
    ps.add_argument("graph", help="edge-list or JSON file ('-' for stdin)")
    ps.set_defaults(func=_cmd_spectrum)

    pb = sub.add_parser("bounds", help="run all applicable bounds")
    pb.add_argument("graph")
    pb.add_argument("--partition", help="clique partition JSON file")
    pb.add_argument("--lp", action="store_true", help="include the LP bounds")
    pb.add_argument("--json", action="store_true", help="JSON output only")
    pb.add_argument(
        "--all", action="store_true", help="emit both the text table and the JSON report"
    )
    pb.set_defaults(func=_cmd_bounds)

    pk = sub.add_parser("lambda-star-k", help="best clique-partition bound")
    pk.add_argument("graph")
    pk.add_argument("--cert", help="write the integer certificate JSON here")
    pk.set_defaults(func=_cmd_lambda_star_k)

    pl = sub.add_parser("lambda-star-c", help="best complete-decomposition bound")
    pl.add_argument("graph")
    pl.add_argument("--cert", help="write the signed certificate JSON here")
    pl.set_defaults(func=_cmd_lambda_star_c)

    pr = sub.add_parser("reproduce", help="regenerate the worked-example table")
    pr.add_argument("--filter", help="only rows whose example id contains this")
    pr.add_argument("--json", help="also write the table as JSON to this path")
    pr.add_argument(
        "--negative-control",
        action="store_true",
        help="perturb the Petersen graph to prove the table can fail",
    )
    pr.set_defaults(func=_cmd_reproduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (ParseError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return code


if __name__ == "__main__":
    sys.exit(main())
