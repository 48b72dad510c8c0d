"""Command-line entry point: ``nlcg <command> ...``.

Exit codes: 0 success, 1 I/O or parse error, 2 pruning found nothing,
3 supplier failure, 4 a check failed, 5 a check was inconclusive,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import schema
from .gallai import GallaiSliceSpec, PruningFailed, build_slice, prune_for_girth
from .graphcore import DEFAULT_CYCLE_CAP, Verdict
from .hypercore import berge_girth
from .tranquil import certify_tranquil
from .tutte import CHECKS, StandardSupplier, SupplierFailure, build, verify_constructed

EXIT_IO = 1
EXIT_NOT_FOUND = 2
EXIT_SUPPLIER = 3
EXIT_FAIL = 4
EXIT_INCONCLUSIVE = 5
EXIT_USAGE = 64

THREADS_ENV = "NLCG_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out) -> None:
    if out:
        schema.write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _positive(name, value):
    if value is None or value < 1:
        raise UsageError(f"--{name.replace('_', '-')} must be a positive integer")


def cmd_gen_hypergraph(args) -> int:
    for name in ("d", "n", "r_max"):
        _positive(name, getattr(args, name))
    if args.d < 2:
        raise UsageError("--d must be at least 2")
    spec = GallaiSliceSpec(args.d, args.n, args.r_max)
    h, lam = build_slice(spec)
    if args.prune_girth is not None or args.prune_chi is not None:
        try:
            h, lam = prune_for_girth(h, lam, args.prune_girth or 2, args.prune_chi or 1, args.seed)
        except PruningFailed as exc:
            print(f"NOT_FOUND: {exc}", file=sys.stderr)
            return EXIT_NOT_FOUND
        spec = None  # vertex ids no longer follow the box layout
    cert = certify_tranquil(h, lam, method=args.method)
    _emit(schema.dump_hypergraph(h, lam, spec, cert), args.out)
    print(f"{h.vertex_count} vertices, {h.edge_count} hyperedges, {cert.verdict}", file=sys.stderr)
    return 0


def cmd_check_tranquil(args) -> int:
    h, lam, spec, _ = schema.parse_hypergraph(_read(args.input))
    if lam is None:
        raise schema.SchemaError("file has no labelling")
    cert = certify_tranquil(h, lam, method=args.method)
    body = schema.certificate_to_dict(cert)
    _emit(schema.dumps({"format": schema.FORMAT, "version": schema.VERSION, "kind": "certificate", **body}), args.out)
    return 0 if cert.tranquil else EXIT_FAIL


def summary_table(cg) -> str:
    rows = [("level", "|V|", "|E|", "colours", "|V(H)|", "|E(H)|", "r")]
    for node in cg.chain():
        h = node.hypergraph
        rows.append(
            (
                node.level,
                node.vertex_count,
                len(node.graph.edges),
                node.colour_count,
                "-" if h is None else h.vertex_count,
                "-" if h is None else h.edge_count,
                "-" if h is None else h.uniformity,
            )
        )
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).rjust(w) for c, w in zip(r, widths)) for r in rows) + "\n"


def cmd_build(args) -> int:
    _positive("g", args.g)
    _positive("k", args.k)
    _positive("vertex_cap", args.vertex_cap)
    supplier = StandardSupplier(vertex_cap=args.vertex_cap, seeds=tuple(range(args.seeds)))
    try:
        cg = build(args.g, args.k, supplier)
    except SupplierFailure as exc:
        print(f"SUPPLIER_FAILURE at level {exc.level}: {exc.requirement}", file=sys.stderr)
        return EXIT_SUPPLIER
    if args.out:
        schema.write_atomic(args.out, schema.dump_constructed(cg))
    sys.stdout.write(summary_table(cg))
    return 0


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer") from None


def cmd_verify(args) -> int:
    cg = schema.parse_constructed(_read(args.input))
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = set(checks) - set(CHECKS)
        if unknown:
            raise UsageError(f"unknown checks {sorted(unknown)}; choose from {', '.join(CHECKS)}")
    _positive("cycle_cap", args.cycle_cap)
    report = verify_constructed(cg, checks, max_cycles=args.cycle_cap, workers=_threads())
    body = report.as_dict()
    _emit(schema.dumps({"format": schema.FORMAT, "version": schema.VERSION, "kind": "report", **body}), args.out)
    if report.status is Verdict.FAIL:
        return EXIT_FAIL
    if report.status is Verdict.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return 0


def cmd_export(args) -> int:
    if args.format not in schema.EXPORTERS:
        raise UsageError(f"unknown format {args.format!r}")
    cg = schema.parse_constructed(_read(args.input))
    _emit(schema.EXPORTERS[args.format](cg), args.out)
    return 0


def cmd_stats(args) -> int:
    obj = schema.loads(_read(args.input))
    kind = obj.get("kind")
    if kind == "constructed":
        sys.stdout.write(summary_table(schema.constructed_from_dict(obj)))
    elif kind == "hypergraph":
        h, lam, spec, cert = schema.parse_hypergraph(json.dumps(obj))
        print(f"vertices    {h.vertex_count}")
        print(f"hyperedges  {h.edge_count}")
        print(f"uniformity  {h.uniformity}")
        print(f"berge girth {berge_girth(h)}")
        if cert is not None:
            print(f"certificate {cert.verdict}")
    else:
        raise schema.SchemaError(f"no stats for kind {kind!r}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nlcg", description="Build and verify no-lonely-colour graphs.")
    parser.add_argument("--config", help="JSON file of option defaults; flags win")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen-hypergraph", help="build a Gallai slice with its canonical labelling")
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--prune-girth", type=int)
    p.add_argument("--prune-chi", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=("enumerate", "auto"), default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_hypergraph)

    p = sub.add_parser("check-tranquil", help="certify a labelled hypergraph file")
    p.add_argument("input")
    p.add_argument("--method", choices=("enumerate", "auto"), default="enumerate")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_tranquil)

    p = sub.add_parser("build", help="run the construction up to level k")
    p.add_argument("--g", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--vertex-cap", type=int, default=4096)
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check a constructed instance")
    p.add_argument("input")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a constructed instance as dot, graphml or json")
    p.add_argument("input")
    p.add_argument("--format", default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("stats", help="summarise an instance or hypergraph file")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)
    return parser


def _apply_config(parser, argv) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    try:
        config = json.loads(_read(args.config))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    if not isinstance(config, dict):
        raise UsageError("config must be a JSON object")
    defaults = {k.replace("-", "_"): v for k, v in config.items()}
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    known = {a.dest for a in subparser._actions}
    stray = set(defaults) - known
    if stray:
        raise UsageError(f"unknown config keys {sorted(stray)}")
    subparser.set_defaults(**defaults)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = _apply_config(parser, argv)
        return args.func(args)
    except UsageError as exc:
        print(f"nlcg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except schema.SchemaError as exc:
        print(f"nlcg: parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"nlcg: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
