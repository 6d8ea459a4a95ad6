"""Command line: generate tables, evaluate members, isolate zeros, verify.

Exit codes: 0 success, 1 verification failure (or a zero-structure
counterexample), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hermite_sbo, laguerre_sbo, serialize, suites
from . import zeros as zeros_mod
from .alphapoly import AlphaPoly
from .poly import scalar_str
from .reporting import FAIL, RealnessCounterexample, all_ok

GEN_FORMATS = ("pretty", "json", "csv", "latex")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="sbopoly",
        description="Exact block orthogonal polynomial toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, families, with_alpha=True):
        p.add_argument("family", choices=families)
        p.add_argument("--i", type=int, default=None,
                       help="block index (block families)")
        p.add_argument("--n", type=int, default=None, help="single degree")
        p.add_argument("--n-max", type=int, default=None,
                       help="top degree; members run from the block floor")
        if with_alpha:
            p.add_argument("--alpha", default=None,
                           help='weight exponent: a rational like 1/2, '
                                'or "symbolic"')

    gen = sub.add_parser("gen", help="emit family members")
    add_common(gen, serialize.FAMILIES)
    gen.add_argument("--format", choices=GEN_FORMATS, default="pretty")
    gen.add_argument("--float-digits", type=int, nargs="?", const=12,
                     default=None,
                     help="CSV only: render coefficients as floats with this "
                          "many significant digits (12 when the flag is bare)")

    ev = sub.add_parser("eval", help="evaluate one member at a point")
    add_common(ev, serialize.FAMILIES)
    ev.add_argument("--at", required=True,
                    help="evaluation point; rational stays exact, a decimal "
                         "or exponent form switches to floats")

    zr = sub.add_parser("zeros", help="isolate and refine real zeros")
    add_common(zr, serialize.FAMILIES)
    zr.add_argument("--format", choices=("json", "csv"), default="json")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", default="all",
                     choices=tuple(suites.SUITES) + ("all",))
    ver.add_argument("--i", type=int, default=None,
                     help="override the suite's block-index ceiling")
    ver.add_argument("--n-max", type=int, default=None,
                     help="override how far degrees run past each block floor")
    ver.add_argument("--format", choices=("json", "pretty"), default="json")

    tab = sub.add_parser("table-p0",
                         help="reduced integer / exponent-polynomial tables "
                              "of values at the origin")
    add_common(tab, ("hermite", "laguerre"))
    return parser


def _member_n(args):
    if args.n is None:
        raise ValueError("--n is required here")
    return args.n


def _cmd_gen(args):
    if args.n is not None and args.n_max is None:
        records = [serialize.build_record(args.family, args.n, i=args.i,
                                          alpha=args.alpha)]
    else:
        if args.n_max is None:
            raise ValueError("gen needs --n-max (or --n for one member)")
        records = serialize.build_records(args.family, args.n_max, i=args.i,
                                          alpha=args.alpha)
    if args.format == "pretty":
        sys.stdout.write(serialize.records_to_pretty(records))
    elif args.format == "json":
        sys.stdout.write(serialize.records_to_json(records) + "\n")
    elif args.format == "csv":
        sys.stdout.write(serialize.records_to_csv(records, args.float_digits))
    else:
        sys.stdout.write(serialize.records_to_latex(records))
    return 0


def _cmd_eval(args):
    record = serialize.build_record(args.family, _member_n(args), i=args.i,
                                    alpha=args.alpha)
    text = args.at
    if "." in text or "e" in text.lower():
        if record.poly.has_alpha:
            raise ValueError("float evaluation needs a numeric --alpha")
        print(repr(record.poly.eval_float(float(text))))
        return 0
    value = record.poly(Fraction(text))
    print(scalar_str(value))
    return 0


def _cmd_zeros(args):
    record = serialize.build_record(args.family, _member_n(args), i=args.i,
                                    alpha=args.alpha)
    if record.poly.has_alpha:
        raise ValueError("zero isolation needs a numeric --alpha")
    report = zeros_mod.root_report(record.poly)
    if args.format == "json":
        print(serialize.root_report_json(report))
    else:
        sys.stdout.write(serialize.root_report_csv(report))
    return 0


def _cmd_verify(args):
    try:
        rows = suites.run_suite(args.suite, args.i, args.n_max)
    except RealnessCounterexample as err:
        json.dump({"suite": args.suite, "counterexample": err.dump},
                  sys.stderr, indent=2)
        sys.stderr.write("\n")
        return 1
    counts = {}
    for row in rows:
        counts[row.status] = counts.get(row.status, 0) + 1
    ok = all_ok(rows)
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "ok": ok,
            "counts": counts,
            "checks": [{"name": r.name, "status": r.status,
                        **({"detail": r.detail} if r.detail else {})}
                       for r in rows],
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in rows:
            line = "%-18s %s" % (r.status.upper(), r.name)
            if r.status == FAIL and r.detail:
                line += "  [%s]" % r.detail
            print(line)
        print("%d checks: %s" % (len(rows), "ok" if ok else "FAILED"))
    return 0 if ok else 1


def _cmd_table_p0(args):
    i = args.i
    if i is None:
        raise ValueError("table-p0 needs --i")
    if args.n is None and args.n_max is None:
        raise ValueError("table-p0 needs --n or --n-max")
    n_lo = i if args.n is None else args.n
    n_hi = (n_lo if args.n_max is None else args.n_max)
    alpha = getattr(args, "alpha", None)
    if alpha not in (None, serialize.SYMBOLIC):
        alpha = Fraction(alpha)
    for n in range(n_lo, n_hi + 1):
        if args.family == "hermite":
            value = hermite_sbo.p_closed(i, n)
        else:
            value = laguerre_sbo.p_closed(i, n)
            if alpha not in (None, serialize.SYMBOLIC):
                value = value(alpha)
        print("p[%d;%d] = %s" % (i, n, scalar_str(value)))
    return 0


_DISPATCH = {
    "gen": _cmd_gen,
    "eval": _cmd_eval,
    "zeros": _cmd_zeros,
    "verify": _cmd_verify,
    "table-p0": _cmd_table_p0,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, ZeroDivisionError, TypeError) as err:
        sys.stderr.write("error: %s\n" % err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
