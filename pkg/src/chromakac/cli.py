"""Command-line front end.

Exit codes: 0 success, 1 operational error (parse, guard, bad arguments),
2 verification disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config
from .chromatic import METHODS, compute
from .corpus import parse_spec
from .errors import ChromakacError, InvariantFailure, SizeLimitError
from .graph import generate_graph, members, parse_graph
from .lattice import enumerate_lattice, mobius
from .multiplicity import MultTable
from .verify import run_verification

EXIT_OK, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2


def _dump(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False)


def load_graph(args):
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    family, n, seed, p = parse_spec(args.gen)
    return generate_graph(family, n, seed=seed, p=p)


def _limits(args):
    return {"max_lattice": args.max_lattice, "max_vertices": args.max_vertices}


def cmd_compute(args, out):
    G = load_graph(args)
    p = compute(G, args.method, **_limits(args))
    if args.format == "json":
        print(_dump(p.to_json()), file=out)
    else:
        print(p, file=out)
    return EXIT_OK


def cmd_verify(args, out):
    G = load_graph(args)
    report = run_verification(G, **_limits(args))
    if args.format == "json":
        print(_dump(report.to_json(timings=args.timings)), file=out)
    else:
        print(f"graph: l={G.l} edges={G.num_edges()} connected={G.connected()} "
              f"lattice={report.lattice_size}", file=out)
        for m, p in report.polynomials.items():
            print(f"  {m:<24} {p}  ({report.timings_ms[m]:.1f} ms)", file=out)
        print(f"  {'kostant':<24} {report.kostant}", file=out)
        for name, c in report.checks.items():
            mark = {True: "ok", False: "FAIL", None: "skip"}[c.ok]
            print(f"  [{mark:>4}] {name} {c.detail}".rstrip(), file=out)
        print(f"agreement: {report.agreement}", file=out)
    if not report.ok:
        d = report.disagreement
        if d is not None:
            print(f"disagreement: methods {d['methods']} at degree {d['degree']}: {d['values']}",
                  file=sys.stderr)
        failed = [k for k, c in report.checks.items() if c.ok is False]
        if failed:
            print(f"failed checks: {', '.join(failed)}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_lattice(args, out):
    G = load_graph(args)
    lat = enumerate_lattice(G, **_limits(args))
    mu = mobius(lat)
    items = [
        {
            "blocks": pi.as_lists(),
            "rank": lat.rank(pi),
            "mobius": mu[pi],
            "covers": [c.target for c in lat.covers[i]],
        }
        for i, pi in enumerate(lat.elements)
    ]
    if args.format == "json":
        print(_dump(items), file=out)
    else:
        for i, (pi, item) in enumerate(zip(lat.elements, items)):
            print(f"{i:>5}  {str(pi):<30} rank={item['rank']} mu={item['mobius']} covers={item['covers']}",
                  file=out)
    return EXIT_OK


def mult_map(G):
    table = MultTable(G)
    out = {}
    for S, m in table.all_roots().items():
        out["[" + ",".join(map(str, members(S))) + "]"] = m
    if G.connected():
        out["beta_Pi_mult"] = table.mult_root(G.full)
    return out


def cmd_mult(args, out):
    G = load_graph(args)
    vcap = config.max_vertices(args.max_vertices)
    if G.l > vcap:
        raise SizeLimitError("vertex count", G.l, vcap)
    data = mult_map(G)
    if args.format == "json":
        print(_dump(data), file=out)
    else:
        for k, v in data.items():
            print(f"{k}: {v}", file=out)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="edge-list file")
    src.add_argument("--gen", metavar="FAMILY:N[:p=P][:seed=S]",
                     help="generated graph: path, cycle, complete, star, edgeless, random")
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--max-lattice", type=int, default=None,
                        help=f"bond lattice size guard (env {config.LATTICE_ENV}, default {config.MAX_LATTICE})")
    common.add_argument("--max-vertices", type=int, default=None,
                        help=f"vertex count guard (default {config.MAX_VERTICES})")

    parser = argparse.ArgumentParser(
        prog="chromakac",
        description="Chromatic polynomials via bond lattices and Kac-Moody root multiplicities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="compute the chromatic polynomial")
    p.add_argument("--method", choices=METHODS, default="bond-lattice")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="run every route and cross-check")
    p.add_argument("--timings", action="store_true", help="include per-method wall-clock ms in JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", parents=[common], help="dump the bond lattice")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("mult", parents=[common], help="dump root multiplicities")
    p.set_defaults(func=cmd_mult)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; 2 is reserved for disagreements here
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InvariantFailure as exc:
        print(f"chromakac: invariant failure: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (ChromakacError, ValueError, OSError) as exc:
        print(f"chromakac: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
