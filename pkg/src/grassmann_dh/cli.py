"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 1 internal invariant violation.
JSON output uses sorted keys and canonical rational strings.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import localization, stability
from .determinant import dh_series_determinant
from .errors import InputError, InternalError
from .exact import fmt_rational
from .localization import Direction, OrbitSpec
from .symmetric import schur_bialternant, schur_ssyt
from .tableaux import Partition, hook_count, syt_enumerate

GRID_NMAX_LIMIT = 10


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _spec(args) -> OrbitSpec:
    return OrbitSpec(args.k, args.n)


def cmd_verdict(args, out):
    report = stability.verdict(args.k, args.n, args.bound)
    if args.format == "json":
        print(_dump(report.to_dict()), file=out)
        return
    print(f"Gr_{report.k}(C^{report.n}): {report.verdict.value}", file=out)
    if report.certificate is not None:
        d = ",".join(str(x) for x in report.certificate.direction.m)
        print(f"  certificate d = ({d}), I3 = {fmt_rational(report.certificate.i3)}", file=out)
    for note in report.notes:
        print(f"  note: {note}", file=out)


def cmd_moment(args, out):
    spec = _spec(args)
    d = Direction.parse(args.d)
    value = localization.moment(spec, d, args.p)
    if args.format == "json":
        payload = {
            "k": spec.k,
            "n": spec.n,
            "d": list(d.m),
            "p": args.p,
            "value": fmt_rational(value),
            "normalization": stability.NORMALIZATION_NOTE,
        }
        print(_dump(payload), file=out)
    else:
        print(fmt_rational(value), file=out)


def cmd_dh(args, out):
    spec = _spec(args)
    d = Direction.parse(args.d)
    if args.order < 0:
        raise InputError("--order must be nonnegative")
    if args.route == "localization":
        series = localization.dh_series_localization(spec, d, args.order)
    else:
        series = dh_series_determinant(spec, d, args.order)
    print(_dump([fmt_rational(c) for c in series.coeffs]), file=out)


def cmd_schur(args, out):
    lam = Partition.parse(args.lam)
    if args.nvars < 1:
        raise InputError("--nvars must be positive")
    if args.method == "ssyt":
        poly = schur_ssyt(lam, args.nvars)
    else:
        poly = schur_bialternant(lam, args.nvars)
    print(_dump(poly.to_dict()), file=out)


def cmd_syt(args, out):
    shape = Partition.parse(args.shape)
    count = syt_enumerate(shape) if args.method == "enumerate" else hook_count(shape)
    print(count, file=out)


def cmd_cst(args, out):
    degrees = stability.invariant_degrees(args.family, args.rank)
    cubic = 3 in degrees
    if args.format == "json":
        payload = {"family": args.family, "rank": args.rank, "degrees": list(degrees), "cubic_invariant": cubic}
        print(_dump(payload), file=out)
    else:
        name = args.family.upper() if args.family.startswith("e") else f"{args.family.upper()}_{args.rank}"
        print(f"{name}: degrees {','.join(map(str, degrees))}; cubic invariant: {'yes' if cubic else 'no'}", file=out)


def grid(nmax: int, kmax: int | None = None) -> list[stability.StabilityReport]:
    if nmax > GRID_NMAX_LIMIT:
        raise InputError(f"--nmax is limited to {GRID_NMAX_LIMIT}")
    if nmax < 2:
        raise InputError("--nmax must be at least 2")
    return [
        stability.verdict(k, n)
        for n in range(2, nmax + 1)
        for k in range(1, n)
        if kmax is None or k <= kmax
    ]


def cmd_grid(args, out):
    reports = grid(args.nmax, args.kmax)
    if args.format == "json":
        print(_dump([r.to_dict() for r in reports]), file=out)
        return
    for r in reports:
        line = f"{r.k:>3} {r.n:>3}  {r.verdict.value}"
        if r.certificate is not None:
            d = ",".join(str(x) for x in r.certificate.direction.m)
            line += f"  d=({d})  I3={fmt_rational(r.certificate.i3)}"
        print(line, file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grassmann-dh", description="Cubic-moment instability test for Gr_k(C^n).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def kn(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verdict", help="instability verdict with a certificate direction")
    kn(p)
    p.add_argument("--bound", type=int, default=None, help="initial max-norm for the certificate search")
    fmt(p)
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("moment", help="exact integral of f^p")
    kn(p)
    p.add_argument("--d", required=True, help='direction, e.g. "3,-1,-2" (use --d=-1,0,1 for a leading minus)')
    p.add_argument("--p", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_moment)

    p = sub.add_parser("dh", help="coefficients of the normalized Duistermaat-Heckman series")
    kn(p)
    p.add_argument("--d", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--route", choices=("localization", "determinant"), default="localization")
    p.set_defaults(func=cmd_dh)

    p = sub.add_parser("schur", help="Schur polynomial as JSON")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--method", choices=("bialternant", "ssyt"), default="bialternant")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("syt", help="number of standard Young tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--method", choices=("hook", "enumerate"), default="hook")
    p.set_defaults(func=cmd_syt)

    p = sub.add_parser("cst", help="Weyl-invariant generator degrees and the cubic gate")
    p.add_argument("--family", choices=("a", "b", "c", "d", "e6", "e7"), required=True)
    p.add_argument("--rank", type=int, default=None)
    fmt(p)
    p.set_defaults(func=cmd_cst)

    p = sub.add_parser("grid", help="verdicts for all 1 <= k < n <= nmax")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--kmax", type=int, default=None)
    fmt(p)
    p.set_defaults(func=cmd_grid)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=err)
        return 1
    return 0


def main():
    sys.exit(run())
