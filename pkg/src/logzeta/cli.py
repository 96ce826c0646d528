"""Command-line front end.

Exit codes: 0 success, 1 computation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import logint, mzv, nielsen, numeric, quicksort, tiered, verify
from .algebra import ZetaPolynomial, format_rational, parse_rational
from .errors import AccuracyError, ConsistencyError, DomainError

PRECISION_ENV = "LOGZETA_PRECISION"
DEFAULT_PRECISION = 30


class UsageError(Exception):
    pass


def default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None or raw == "":
        return DEFAULT_PRECISION
    try:
        p = int(raw)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV} must be a positive integer, got {raw!r}")
    if p < 1:
        raise UsageError(f"{PRECISION_ENV} must be a positive integer, got {raw!r}")
    return p


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _natural(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError, DomainError) as e:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from e


def _float_pos(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser(prec_default: int) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="logzeta", description="Logarithmic integrals, tiered binomial coefficients and zeta values.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_prec(sp):
        sp.add_argument("--prec", type=_positive, default=prec_default, help=f"decimal digits (env {PRECISION_ENV})")

    sp = sub.add_parser("logint", help="exact I or S values")
    sp.add_argument("--n", type=_natural, required=True)
    sp.add_argument("--m", type=_natural, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--kind", choices=("I", "S"), default="I", help="the integral I or its normalization S")
    sp.add_argument("--format", choices=("text", "json", "numeric"), default="text")
    add_prec(sp)

    sp = sub.add_parser("tiered", help="tiered binomial coefficients")
    sp.add_argument("--n", type=_natural)
    sp.add_argument("--m", type=_natural)
    sp.add_argument("--i", type=_natural, required=True)
    sp.add_argument("--route", choices=tiered.ROUTES, default="explicit")
    sp.add_argument("--max-total", type=_natural, help="print the triangle n + m <= MAX_TOTAL instead")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sp = sub.add_parser("rowsum", help="row sums of a tier")
    sp.add_argument("--N", type=_natural, required=True)
    sp.add_argument("--i", type=_natural, required=True)
    sp.add_argument("--route", choices=tiered.ROW_SUM_ROUTES, default="convolution")

    sp = sub.add_parser("tiersum", help="sum of (n, m)_i over i = 0..N")
    sp.add_argument("--n", type=_natural, required=True)
    sp.add_argument("--m", type=_natural, required=True)
    sp.add_argument("--N", type=_natural, required=True)

    sp = sub.add_parser("mzv", help="hook MZV zeta(a+1, {1}_b), or a numeric MZV")
    sp.add_argument("--a", type=_positive)
    sp.add_argument("--b", type=_natural)
    sp.add_argument("--index", help="comma-separated admissible index, numeric only")
    sp.add_argument("--format", choices=("text", "json", "numeric"), default="text")
    add_prec(sp)

    sp = sub.add_parser("nielsen", help="generalized Nielsen polylogarithm, numerically")
    sp.add_argument("--n", type=_natural, required=True)
    sp.add_argument("--m", type=_natural, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--z", type=_rational, required=True, help="rational P/Q in (0, 1]")
    add_prec(sp)

    sp = sub.add_parser("qs", help="Quicksort limit law")
    qs = sp.add_subparsers(dest="qs_command", required=True)
    q = qs.add_parser("moments")
    q.add_argument("--s", type=_natural, required=True)
    q.add_argument("--numeric", action="store_true")
    q.add_argument("--format", choices=("text", "json"), default="text")
    add_prec(q)
    q = qs.add_parser("cumulants")
    q.add_argument("--s", type=_positive, required=True)
    q.add_argument("--shifted", action="store_true", help="print a_s = kappa_s(Z + G)")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q = qs.add_parser("simulate")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--runs", type=_positive, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--max-moment", type=_positive, default=4)

    sp = sub.add_parser("verify", help="run verification suites, print a JSON report")
    sp.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    sp.add_argument("--max-n", type=_natural, default=4)
    sp.add_argument("--max-m", type=_natural, default=4)
    sp.add_argument("--max-i", type=_natural, default=6)
    sp.add_argument("--tol", type=_float_pos, default=1e-9)
    sp.add_argument("--prec", type=_positive, default=min(prec_default, 20))

    sp = sub.add_parser("table", help="Taylor coefficients of f_1 or f_2")
    sp.add_argument("which", choices=("f1", "f2"))
    sp.add_argument("--order", type=_natural, default=4)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    return p


def _render(value, fmt: str, prec: int) -> str:
    p = ZetaPolynomial.lift(value)
    if fmt == "json":
        return json.dumps(p.to_json())
    if fmt == "numeric":
        return str(numeric.eval_zeta_polynomial(p, prec))
    return str(p)


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "m", "i", "value"])
    for n, m, i, v in sorted(rows, key=lambda r: (r[2], r[0] + r[1], r[0])):
        w.writerow([n, m, i, format_rational(v)])
    return buf.getvalue().rstrip("\n")


def _table_text(rows) -> str:
    # one line per total degree: coefficient*x^n*y^m terms
    lines = []
    by_deg = {}
    for n, m, _, v in rows:
        by_deg.setdefault(n + m, []).append((n, m, v))
    for d in sorted(by_deg):
        terms = []
        for n, m, v in sorted(by_deg[d], key=lambda t: -t[0]):
            mono = "*".join(s for s in (_power("x", n), _power("y", m)) if s)
            terms.append(format_rational(v) + (f"*{mono}" if mono else ""))
        lines.append(f"degree {d}: " + " + ".join(terms))
    return "\n".join(lines)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _rows_json(rows) -> str:
    return json.dumps([{"n": n, "m": m, "i": i, "value": format_rational(v)} for n, m, i, v in rows])


def _tiered_rows(i: int, max_total: int, route: str = "explicit"):
    return [(n, m, i, tiered.tiered(n, m, i, route)) for n, m, _ in tiered.triangle(i, max_total)]


def _cmd_logint(a) -> str:
    key = logint.LogIntegralKey(a.n, a.m, a.i)
    v = logint.i_exact(key) if a.kind == "I" else logint.s_value(key)
    return _render(v, a.format, a.prec)


def _cmd_tiered(a) -> str:
    if a.max_total is not None:
        if a.n is not None or a.m is not None:
            raise UsageError("--max-total excludes --n/--m")
        rows = _tiered_rows(a.i, a.max_total, a.route)
        if a.format == "csv":
            return _csv(rows)
        if a.format == "json":
            return _rows_json(rows)
        return _table_text(rows)
    if a.n is None or a.m is None:
        raise UsageError("give --n and --m, or --max-total")
    v = tiered.tiered(a.n, a.m, a.i, a.route)
    if a.format == "csv":
        return _csv([(a.n, a.m, a.i, v)])
    if a.format == "json":
        return json.dumps({"n": a.n, "m": a.m, "i": a.i, "value": format_rational(v)})
    return format_rational(v)


def _cmd_mzv(a) -> str:
    if a.index is not None:
        if a.a is not None or a.b is not None:
            raise UsageError("--index excludes --a/--b")
        try:
            idx = tuple(int(t) for t in a.index.split(","))
        except ValueError:
            raise UsageError(f"bad index {a.index!r}")
        return str(numeric.mzv_numeric(idx, a.prec))
    if a.a is None or a.b is None:
        raise UsageError("give --a and --b, or --index")
    return _render(mzv.zeta_hook(a.a, a.b), a.format, a.prec)


def _cmd_nielsen(a) -> str:
    key = nielsen.NielsenKey(a.n, a.m, a.i, a.z)
    return str(nielsen.nielsen_series(key, a.prec))


def _cmd_qs(a) -> str:
    if a.qs_command == "moments":
        v = quicksort.qs_moment(a.s)
        if a.numeric:
            return str(numeric.eval_zeta_polynomial(v, a.prec))
        return _render(v, a.format, a.prec)
    if a.qs_command == "cumulants":
        if a.shifted:
            v = quicksort.shifted_cumulants(a.s)
            return json.dumps({"s": a.s, "a_s": format_rational(v)}) if a.format == "json" else format_rational(v)
        v = quicksort.qs_cumulant(a.s)
        return _render(v, a.format, 0)
    if a.n < 2:
        raise UsageError("simulate needs --n >= 2")
    r = quicksort.simulate(a.n, a.runs, a.seed, a.max_moment)
    return json.dumps(r.to_json())


def _cmd_verify(a) -> str:
    b = verify.Bounds(a.max_n, a.max_m, a.max_i, a.tol, a.prec)
    reports = verify.run_suite(a.suite, b)
    a._failed = sum(not r.passed for r in reports)
    return json.dumps(
        {"suite": a.suite, "total": len(reports), "failed": a._failed, "reports": [r.to_json() for r in reports]},
        indent=1,
    )


def _cmd_table(a) -> str:
    i = 1 if a.which == "f1" else 2
    rows = _tiered_rows(i, a.order)
    if a.format == "csv":
        return _csv(rows)
    if a.format == "json":
        return _rows_json(rows)
    return _table_text(rows)


COMMANDS = {
    "logint": _cmd_logint,
    "tiered": _cmd_tiered,
    "rowsum": lambda a: format_rational(tiered.row_sum(a.N, a.i, a.route)),
    "tiersum": lambda a: format_rational(tiered.tier_sum(a.n, a.m, a.N)),
    "mzv": _cmd_mzv,
    "nielsen": _cmd_nielsen,
    "qs": _cmd_qs,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        parser = build_parser(default_precision())
    except UsageError as e:
        print(f"logzeta: error: {e}", file=err)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        text = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"logzeta {args.command}: error: {e}", file=err)
        return 2
    except (DomainError, AccuracyError, ConsistencyError, ArithmeticError) as e:
        print(f"logzeta {args.command}: {type(e).__name__}: {e}", file=err)
        return 1
    print(text, file=out)
    if args.command == "verify" and args._failed:
        return 1
    return 0


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)
