"""Command-line front end.

Subcommands: ``enumerate``, ``count``, ``sweep``, ``bound``, ``verify``.
Exit codes: 0 success, 1 usage or validation error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import census2_bound, census3_bound
from .census2 import enumerate2
from .census3 import enumerate3
from .cm import NO_CM, Polarization, validate_cm
from .errors import CensusError
from .oracle import oracle_compare
from .records import Kind

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--g", type=int, required=True, choices=(2, 3), help="dimension of E^g")
    mode = common.add_mutually_exclusive_group(required=True)
    mode.add_argument("--cm", type=_int_list, metavar="U,V,W", help="tau satisfies w x^2 + u x + v = 0")
    mode.add_argument("--no-cm", action="store_true", help="E without complex multiplication")
    common.add_argument("--pol", type=_int_list, metavar="M,N[,P]", help="polarization multipliers (default all 1)")
    common.add_argument("--max-degree", type=int, required=True, metavar="T")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $EC_CENSUS_THREADS or 1)")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = _Parser(prog="ecensus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("enumerate", parents=[common], help="list every curve of degree <= T")
    p.add_argument("--with-basis", action="store_true", help="include a lattice basis per curve")
    sub.add_parser("count", parents=[common], help="print N(T)")
    p = sub.add_parser("sweep", parents=[common], help="CSV table of N(t) for a range of t")
    p.add_argument("--min-degree", type=int, default=1, metavar="T0")
    sub.add_parser("bound", parents=[common], help="explicit upper bound for N(T) as JSON")
    p = sub.add_parser("verify", parents=[common], help="compare the census with the box oracle")
    p.add_argument("--box", type=int, default=2, metavar="B", help="oracle box radius")
    return parser


def _config(args):
    cm = NO_CM if args.no_cm else validate_cm(*_triple(args.cm))
    pol = Polarization(args.pol if args.pol is not None else (1,) * args.g)
    if pol.g != args.g:
        raise UsageError(f"--pol has {pol.g} multipliers but --g is {args.g}")
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    if args.threads is not None and args.threads < 1:
        raise UsageError("--threads must be >= 1")
    return cm, pol


def _triple(values):
    if len(values) != 3:
        raise UsageError(f"--cm takes exactly three integers u,v,w, got {len(values)}")
    return values


def _params(args, cm, pol) -> dict:
    cm_dict = None if args.no_cm else {"u": cm.u, "v": cm.v, "w": cm.w, "disc": cm.disc}
    return {"g": args.g, "cm": cm_dict, "pol": list(pol.multipliers)}


def _census(args, cm, pol, t, with_basis=False):
    fn = enumerate2 if args.g == 2 else enumerate3
    return fn(cm, pol, t, threads=args.threads, with_basis=with_basis)


def _bound(args, cm, pol, t):
    return (census2_bound if args.g == 2 else census3_bound)(cm, pol, t)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_enumerate(args, cm, pol) -> tuple[str, int]:
    records = _census(args, cm, pol, args.max_degree, args.with_basis)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "kind", "coords"])
        for r in records:
            writer.writerow([r.degree, r.kind.value, " ".join(map(str, r.coords))])
        return buf.getvalue(), EXIT_OK
    curves = []
    for r in records:
        entry = {"coords": list(r.coords), "degree": r.degree, "kind": r.kind.value}
        if r.basis is not None:
            entry["basis"] = {"lambda": list(r.basis[0].coords), "mu": list(r.basis[1].coords)}
        curves.append(entry)
    doc = {"params": _params(args, cm, pol), "t": args.max_degree, "count": len(curves), "curves": curves}
    return _dump_json(doc), EXIT_OK


def _cmd_count(args, cm, pol) -> tuple[str, int]:
    n = len(_census(args, cm, pol, args.max_degree))
    if args.format == "json":
        return _dump_json({"params": _params(args, cm, pol), "t": args.max_degree, "count": n}), EXIT_OK
    return f"{n}\n", EXIT_OK


def _cmd_sweep(args, cm, pol) -> tuple[str, int]:
    lo, hi = args.min_degree, args.max_degree
    if lo < 0 or lo > hi:
        raise UsageError("need 0 <= --min-degree <= --max-degree")
    # records(t) is a prefix of records(T) in degree order, so one census suffices
    records = _census(args, cm, pol, hi)
    rows = []
    for t in range(lo, hi + 1):
        upto = [r for r in records if r.degree <= t]
        ordinary = sum(r.kind is Kind.ORDINARY for r in upto)
        rows.append((t, len(upto), ordinary, len(upto) - ordinary, _bound(args, cm, pol, t).value))
    if args.format == "json":
        doc = {"params": _params(args, cm, pol), "rows": [
            {"t": t, "count": c, "ordinary": o, "extraordinary": e, "bound": b} for t, c, o, e, b in rows
        ]}
        return _dump_json(doc), EXIT_OK
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "count", "ordinary", "extraordinary", "bound"])
    for t, c, o, e, b in rows:
        writer.writerow([t, c, o, e, f"{b:.6f}"])
    return buf.getvalue(), EXIT_OK


def _cmd_bound(args, cm, pol) -> tuple[str, int]:
    return _dump_json(_bound(args, cm, pol, args.max_degree).as_dict()), EXIT_OK


def _cmd_verify(args, cm, pol) -> tuple[str, int]:
    if args.no_cm:
        raise UsageError("verify needs --cm (the oracle works in the CM period lattice)")
    if args.box < 1:
        raise UsageError("--box must be >= 1")
    report = oracle_compare(cm, args.g, pol, args.max_degree, args.box, threads=args.threads)
    return _dump_json(report.as_dict()), EXIT_OK if report.ok else EXIT_VERIFY


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "sweep": _cmd_sweep,
    "bound": _cmd_bound,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cm, pol = _config(args)
        text, code = _COMMANDS[args.command](args, cm, pol)
    except (CensusError, UsageError) as exc:
        print(f"ecensus: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code
    sys.exit(code)


if __name__ == "__main__":
    main()
