"""Verification suites: every check becomes a ComparisonReport.

Numeric checks compare an exact value against an independent oracle.
Exact checks (route equalities) use tolerance 0 and pass only on exact
equality; their relative_error is the numeric gap, floored at a tiny positive
number when the two sides differ exactly but agree numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

import mpmath
from mpmath import mp, mpf

from . import logint, mzv, nielsen, numeric, quicksort, tiered
from .algebra import ZetaPolynomial
from .combinatorics import cumulants_from_moment_list
from .numeric import ComparisonReport, NumericValue, compare, eval_zeta_polynomial

SUITES = ("logint", "tiered", "mzv", "nielsen", "qs")


@dataclass(frozen=True)
class Bounds:
    max_n: int = 4
    max_m: int = 4
    max_i: int = 6
    tol: float = 1e-9
    prec: int = 20


def exact_report(a, b, label: str, prec: int = 20) -> ComparisonReport:
    a, b = ZetaPolynomial.lift(a), ZetaPolynomial.lift(b)
    ra = eval_zeta_polynomial(a, prec)
    rb = eval_zeta_polynomial(b, prec)
    if a == b:
        rel = 0.0
    else:
        with mp.workdps(numeric.working_dps(prec)):
            scale = max(abs(ra.value), mpf(10) ** (-prec))
            rel = max(float(abs(ra.value - rb.value) / scale), 1e-300)
    return ComparisonReport(ra, rb, rel, rel <= 0.0, 0.0, label)


def _zero_report(residual: NumericValue, tol: float, label: str) -> ComparisonReport:
    return compare(0, residual, tol, label)


def suite_logint(b: Bounds) -> List[ComparisonReport]:
    out = []
    for n in range(b.max_n + 1):
        for m in range(b.max_m + 1):
            for i in range(-min(m, 2), b.max_i + 1):
                if i == -1 and m == 0:
                    continue
                q = numeric.quad_logint(n, m, i, b.prec)
                out.append(compare(logint.i_exact(n, m, i), q, b.tol, f"logint I({n},{m},{i}) vs quadrature"))
                if i >= 0:
                    s = logint.s_exact(n, m, i)
                    out.append(exact_report(s, logint.s_rec(n, m, i), f"logint S({n},{m},{i}) exact = recurrence", b.prec))
                    if n >= 1 and m >= 1:
                        out.append(
                            exact_report(s, logint.s_one_step(n, m, i), f"logint S({n},{m},{i}) exact = one-step", b.prec)
                        )
    return out


def suite_tiered(b: Bounds) -> List[ComparisonReport]:
    out = []
    for n in range(b.max_n + 1):
        for m in range(b.max_m + 1):
            for i in range(b.max_i + 1):
                e = tiered.tiered(n, m, i)
                for route in ("recurrence", "gf"):
                    out.append(exact_report(e, tiered.tiered(n, m, i, route), f"tiered ({n},{m})_{i} explicit = {route}", b.prec))
    for N in range(b.max_n + b.max_m + 1):
        for i in range(b.max_i + 1):
            d = tiered.row_sum_direct(N, i)
            for route in tiered.ROW_SUM_ROUTES:
                out.append(exact_report(d, tiered.row_sum(N, i, route), f"row sum N={N} i={i} direct = {route}", b.prec))
    return out


def suite_mzv(b: Bounds, max_weight: int = 8) -> List[ComparisonReport]:
    out = []
    tol = max(b.tol, 1e-8)
    for w in range(2, max_weight + 1):
        for a in range(1, w):
            h = mzv.HookIndex(a, w - 1 - a)
            out.append(compare(mzv.zeta_hook(h), numeric.mzv_numeric(h.index, b.prec), tol, f"hook zeta{h.index}"))
    for m in range(1, 6):
        for n in range(1, 7 - m):
            terms = mzv.kaneko_sakata_terms(m, n)
            with mp.workdps(numeric.working_dps(b.prec)):
                parts = [sign * numeric.mzv_numeric(idx, b.prec).value for sign, idx in terms]
                err = sum(numeric.mzv_numeric(idx, b.prec).error for _, idx in terms)
                val = mpmath.fsum(parts)
            oracle = NumericValue(val, b.prec, err)
            out.append(compare(mzv.mzv_leading(m + 1, n - 1), oracle, max(b.tol, 1e-6), f"Kaneko-Sakata m={m} n={n}"))
    return out


def suite_nielsen(b: Bounds) -> List[ComparisonReport]:
    out = []
    zs = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    tol = max(b.tol, 1e-10)
    for m in range(1, 4):
        for i in range(4):
            for z in zs:
                ser = nielsen.nielsen_series(nielsen.NielsenKey(0, m, i, z), b.prec)
                bd = nielsen.nielsen_boundary(m, i, z, b.prec)
                with mp.workdps(numeric.working_dps(b.prec)):
                    res = NumericValue(abs(ser.value - bd.value), b.prec, ser.error + bd.error)
                out.append(_zero_report(res, tol, f"Nielsen boundary m={m} i={i} z={z}"))
    for n in range(1, 3):
        for m in range(1, 3):
            for i in range(3):
                for z in zs + (Fraction(1),):
                    res = nielsen.nielsen_recurrence_residual(nielsen.NielsenKey(n, m, i, z), b.prec)
                    out.append(_zero_report(res, max(b.tol, 1e-9), f"Nielsen recurrence ({n},{m},{i}) z={z}"))
    for n in range(4):
        for m in range(4):
            for i in range(-1, 4):
                if i == -1 and m == 0:
                    continue
                ser = nielsen.nielsen_series(nielsen.NielsenKey(n, m, i, Fraction(1)), b.prec)
                out.append(compare(logint.s_value(n, m, i), ser, tol, f"Nielsen at z=1 ({n},{m},{i})"))
    return out


def _entropy_quadrature(k1: int, k2: int, k3: int, prec: int) -> NumericValue:
    with mp.workdps(numeric.working_dps(prec)):
        def f(x):
            if x == 0 or x == 1:
                c = mpf(1)
            else:
                c = 1 + 2 * x * mpmath.log(x) + 2 * (1 - x) * mpmath.log1p(-x)
            return x**k1 * (1 - x) ** k2 * c**k3

        v, err = mpmath.quad(f, [0, mpf(1) / 2, 1], error=True)
        return NumericValue(v, prec, err)


def suite_qs(b: Bounds, max_s: int = 6) -> List[ComparisonReport]:
    out = []
    mu2 = quicksort.qs_moment(2)
    out.append(exact_report(mu2, ZetaPolynomial.const(7) - ZetaPolynomial.zeta(2).scale(4), "qs mu_2 = 7 - 4 zeta(2)", b.prec))
    for s in range(max_s + 1):
        out.append(
            exact_report(
                quicksort.qs_constant_term(s, "projection"),
                quicksort.qs_constant_term(s, "recurrence"),
                f"qs c_{s} projection = recurrence",
                b.prec,
            )
        )
        out.append(
            exact_report(
                quicksort.qs_normalized_ct(s, "definition"),
                quicksort.qs_normalized_ct(s, "recurrence"),
                f"qs normalized c_{s} definition = recurrence",
                b.prec,
            )
        )
    for s in range(2, max_s + 1):
        cs = [quicksort.qs_constant_term(k, "recurrence") for k in range(1, s + 1)]
        a = cumulants_from_moment_list(cs)[s - 1]
        total = quicksort.qs_cumulant(s) + quicksort.gumbel_cumulants(s)
        out.append(exact_report(total, a, f"qs kappa_{s}(Z) + kappa_{s}(G) = a_{s}", b.prec))
    for k1 in range(4):
        for k2 in range(4 - k1):
            for k3 in range(4 - k1 - k2):
                q = _entropy_quadrature(k1, k2, k3, b.prec)
                out.append(compare(quicksort.entropy_integral(k1, k2, k3), q, b.tol, f"entropy integral ({k1},{k2},{k3})"))
    rec = quicksort.finite_expectation_recurrence(200)
    for n in range(0, 201, 20):
        out.append(exact_report(quicksort.finite_expectation(n), rec[n], f"E(C_{n}) closed form = recurrence", b.prec))
    return out


RUNNERS: Dict[str, Callable[[Bounds], List[ComparisonReport]]] = {
    "logint": suite_logint,
    "tiered": suite_tiered,
    "mzv": suite_mzv,
    "nielsen": suite_nielsen,
    "qs": suite_qs,
}


def run_suite(name: str, bounds: Bounds = Bounds()) -> List[ComparisonReport]:
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(RUNNERS[s](bounds))
        return out
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    return RUNNERS[name](bounds)
