"""Command-line interface.

Exit codes: 0 success, 1 verification or per-line failure, 2 usage error.
Integers are always written as decimal strings in JSON output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import counting, polynomials, series, verify
from .bijection import phi, psi
from .errors import InvolutionError
from .involutions import SignedInvolution, enumerate_signed, enumerate_signed_k
from .paths import (
    WeightedDelannoyPath,
    enumerate_delannoy,
    enumerate_grassmann,
    enumerate_weighted,
)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="signed-involutions",
        description="Signed (p,q)-involutions, weighted Delannoy paths and their t-analogs.")
    ap.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="a single count")
    c.add_argument("what", choices=["alpha", "gamma", "delannoy", "c", "involutions"])
    c.add_argument("--p", type=_nonneg, default=0)
    c.add_argument("--q", type=_nonneg, default=0)
    c.add_argument("--k", type=_nonneg, default=0)
    c.add_argument("--n", type=_nonneg, default=0)
    c.add_argument("--r", type=_nonneg, default=0)
    c.add_argument("--method", default=None,
                   help="alpha: " + "|".join(counting.ALPHA_METHODS) + "; gamma: closed|recurrence")
    c.add_argument("--format", choices=["text", "json"], default="text")

    t = sub.add_parser("table", help="a (p,q) table of counts")
    t.add_argument("what", choices=["alpha", "delannoy", "gamma"])
    t.add_argument("--p", type=_nonneg, required=True, help="largest p (rows)")
    t.add_argument("--q", type=_nonneg, required=True, help="largest q (columns)")
    t.add_argument("--k", type=_nonneg, default=0)
    t.add_argument("--format", choices=["csv", "json"], default="csv")

    e = sub.add_parser("enumerate", help="stream objects as JSON lines")
    e.add_argument("what", choices=["signed", "delannoy", "weighted", "grassmann"])
    e.add_argument("--p", type=_nonneg, required=True)
    e.add_argument("--q", type=_nonneg, required=True)
    e.add_argument("--k", type=_nonneg, default=None, help="signed only: number of 2-cycles")

    po = sub.add_parser("poly", help="one of the t-analog polynomials")
    po.add_argument("family", choices=["A", "E", "Etilde", "D"])
    po.add_argument("--p", type=_nonneg, required=True)
    po.add_argument("--q", type=_nonneg, required=True)
    po.add_argument("--method", default=None)
    po.add_argument("--eval", dest="at", default=None, help="evaluate at an integer or fraction")

    b = sub.add_parser("bijection", help="apply phi or psi to JSON lines from stdin")
    b.add_argument("direction", choices=["phi", "psi"])
    b.add_argument("--input", metavar="FILE", help="read from FILE instead of stdin")

    s = sub.add_parser("series", help="generating-series computations")
    s.add_argument("what", choices=["alpha", "closed-form", "pde-check", "char-check"])
    s.add_argument("--deg", type=_nonneg, default=10)

    v = sub.add_parser("verify", help="cross-method verification suites")
    v.add_argument("suite", choices=sorted(verify.SUITES))
    v.add_argument("--max", type=_nonneg, default=5)
    return ap


class UsageError(Exception):
    pass


def _count(args, out):
    w = args.what
    if w == "alpha":
        val = counting.alpha(args.p, args.q, args.method or "recurrence")
    elif w == "gamma":
        if args.method in (None, "closed"):
            val = counting.gamma_closed(args.k, args.p, args.q)
        elif args.method == "recurrence":
            val = counting.gamma_recurrence(args.k, args.p, args.q)
        else:
            raise UsageError(f"unknown gamma method {args.method!r}")
    elif w == "delannoy":
        val = counting.delannoy(args.p, args.q)
    elif w == "c":
        val = counting.c_involutions(args.n, args.r)
    else:
        val = counting.involution_count(args.n)
    if args.format == "json":
        out.write(_dumps({"value": str(val)}) + "\n")
    else:
        out.write(f"{val}\n")
    return 0


def _table(args, out):
    def cell(p, q):
        if args.what == "alpha":
            return counting.alpha(p, q)
        if args.what == "delannoy":
            return counting.delannoy(p, q)
        return counting.gamma_closed(args.k, p, q) if args.k <= min(p, q) else 0

    rows = [[cell(p, q) for q in range(args.q + 1)] for p in range(args.p + 1)]
    if args.format == "json":
        out.write(_dumps({"rows": "p", "cols": "q",
                          "values": [[str(v) for v in row] for row in rows]}) + "\n")
    else:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["p\\q"] + list(range(args.q + 1)))
        for p, row in enumerate(rows):
            wr.writerow([p] + row)
        out.write(buf.getvalue())
    return 0


def _enumerate(args, out):
    if args.what == "signed":
        it = (enumerate_signed(args.p, args.q) if args.k is None
              else enumerate_signed_k(args.p, args.q, args.k))
        for pi in it:
            out.write(pi.to_json() + "\n")
    elif args.what == "delannoy":
        for L in enumerate_delannoy(args.p, args.q):
            out.write(L.to_json() + "\n")
    elif args.what == "weighted":
        for W in enumerate_weighted(args.p, args.q):
            out.write(W.to_json() + "\n")
    else:
        for g in enumerate_grassmann(args.p, args.q):
            out.write(_dumps({"p": g.p, "q": g.q, "steps": list(g.steps)}) + "\n")
    return 0


def _poly(args, out):
    fam, p, q, m = args.family, args.p, args.q, args.method
    if fam == "A":
        poly = polynomials.a_poly(p, q, m or "recurrence")
    elif fam == "E":
        poly = polynomials.e_poly(p, q, m or "recurrence")
    elif fam == "D":
        poly = polynomials.d_poly(p, q, m or "recurrence")
    else:
        if m not in (None, "recurrence"):
            raise UsageError("Etilde only supports the recurrence method")
        poly = polynomials.e_tilde_poly(p, q)
    payload = poly.to_dict()
    if args.at is not None:
        try:
            x = Fraction(args.at)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse evaluation point {args.at!r}")
        val = poly(int(x) if x.denominator == 1 else x)
        payload["value"] = str(val)
    out.write(_dumps(payload) + "\n")
    return 0


def _bijection(args, out, err):
    src = open(args.input) if args.input else sys.stdin
    status = 0
    try:
        for lineno, line in enumerate(src, 1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
                if args.direction == "phi":
                    res = phi(SignedInvolution.from_dict(data)).to_dict()
                else:
                    res = psi(WeightedDelannoyPath.from_dict(data)).to_dict()
            except (InvolutionError, ValueError, KeyError, TypeError) as exc:
                err.write(_dumps({"line": lineno, "error": type(exc).__name__,
                                  "message": str(exc)}) + "\n")
                status = 1
                continue
            out.write(_dumps(res) + "\n")
    finally:
        if args.input:
            src.close()
    return status


def _series(args, out):
    N = args.deg
    if args.what == "alpha":
        out.write(_dumps(series.alpha_series(N).to_dict()) + "\n")
        return 0
    if args.what == "closed-form":
        out.write(_dumps(series.closed_form_series(N).to_dict()) + "\n")
        return 0
    if args.what == "pde-check":
        res = series.pde_residual(series.alpha_series(N))
        nonzero = [[i, j] for (i, j), v in res.items() if v]
        ok = not nonzero
        out.write(_dumps({"check": "pde", "deg": N, "ok": ok,
                          "nonzero": nonzero[:10]}) + "\n")
        return 0 if ok else 1
    ok = series.characteristic_check(N)
    out.write(_dumps({"check": "characteristic", "deg": N, "ok": ok}) + "\n")
    return 0 if ok else 1


def _verify(args, out):
    status = 0
    for check, failure in verify.run_suite(args.suite, args.max):
        if failure is None:
            out.write(f"PASS {check}\n")
        else:
            out.write(f"FAIL {failure}\n")
            status = 1
    return status


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.command == "count":
            return _count(args, out)
        if args.command == "table":
            return _table(args, out)
        if args.command == "enumerate":
            return _enumerate(args, out)
        if args.command == "poly":
            return _poly(args, out)
        if args.command == "bijection":
            return _bijection(args, out, sys.stderr)
        if args.command == "series":
            return _series(args, out)
        return _verify(args, out)
    except (UsageError, InvolutionError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    finally:
        if args.out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
