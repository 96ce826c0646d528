"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import time
from fractions import Fraction as F
from math import comb

import pytest
from mpmath import mp, mpf

from logzeta import combinatorics, logint, mzv, nielsen, numeric, quicksort, tiered
from logzeta.algebra import ZetaPolynomial, zeta
from logzeta.numeric import compare, eval_zeta_polynomial

F1 = [
    [F(1, 2)],
    [F(1, 4), F(3, 4)],
    [F(1, 8), F(1), F(7, 8)],
    [F(1, 16), F(17, 16), F(31, 16), F(15, 16)],
    [F(1, 32), F(34, 32), F(96, 32), F(94, 32), F(31, 32)],
]
F2 = [
    [F(1, 3)],
    [F(2, 18), F(11, 18)],
    [F(4, 108), F(71, 108), F(85, 108)],
    [F(8, 648), F(393, 648), F(960, 648), F(575, 648)],
    [F(16, 3888), F(2179, 3888), F(7971, 3888), F(9469, 3888), F(3661, 3888)],
]


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {number:2d}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def _cold_tiered_caches():
    for fn in (tiered.tiered_explicit, tiered.tiered_rec, tiered.tier_gf, combinatorics.zt_ones, combinatorics.zts_ones):
        fn.cache_clear()


def test_01_tier_tables(report):
    _cold_tiered_caches()
    t0 = time.perf_counter()
    bad = []
    for i, table in ((1, F1), (2, F2)):
        for d, row in enumerate(table):
            got = [tiered.tiered(d - k, k, i) for k in range(d + 1)]
            if got != row:
                bad.append((i, d, got))
    dt = time.perf_counter() - t0
    report(1, not bad and dt < 1.0, f"f1 and f2 coefficients through degree 4 exact, {dt:.3f} s, mismatches={bad}")


def test_02_variance(report):
    mu2 = quicksort.qs_moment(2)
    exact = mu2 == ZetaPolynomial.const(7) - zeta(2).scale(4)
    v = float(eval_zeta_polynomial(mu2, 15))
    ok = exact and abs(v - 0.4202637326) <= 1e-9
    report(2, ok, f"mu_2 = {mu2} = {v:.12f}")


def test_03_constant_term_routes(report):
    quicksort.qs_moment.cache_clear()
    quicksort.entropy_integral.cache_clear()
    t0 = time.perf_counter()
    pairs = [(quicksort.qs_constant_term(s, "projection"), quicksort.qs_constant_term(s, "recurrence")) for s in range(7)]
    dt = time.perf_counter() - t0
    ok = all(a == b for a, b in pairs) and pairs[2][0] == 7 and dt < 60
    report(3, ok, f"c_0..c_6 = {[str(a) for a, _ in pairs]}, routes agree, {dt:.2f} s")


def test_04_shifted_cumulants(report):
    values = {}
    ok = True
    for s in range(2, 7):
        total = quicksort.qs_cumulant(s) + quicksort.gumbel_cumulants(s)
        ok &= total.is_constant()
        values[s] = total.constant_term()
    ok &= values[2] == 7
    report(4, ok, f"a_2..a_6 = {[str(values[s]) for s in range(2, 7)]}")


def _grid_keys():
    for n in range(5):
        for m in range(5):
            for i in range(-min(m, 2), 7):
                if i == -1 and m == 0:
                    continue
                yield n, m, i


def test_05_quadrature_grid(report):
    t0 = time.perf_counter()
    worst, failures, count = 0.0, [], 0
    for n, m, i in _grid_keys():
        exact = logint.s_value(n, m, i).scale(logint.normalization(n, m))
        r = compare(exact, numeric.quad_logint(n, m, i, 20), 1e-9)
        worst = max(worst, r.relative_error)
        count += 1
        if not r.passed:
            failures.append((n, m, i, r.relative_error))
    dt = time.perf_counter() - t0
    ok = not failures and dt < 600
    report(5, ok, f"{count} keys, worst relative error {worst:.2e}, {dt:.1f} s, failures={failures}")


def test_06_route_equalities(report):
    bad = []
    for n in range(5):
        for m in range(5):
            for i in range(7):
                e = logint.s_exact(n, m, i)
                if e != logint.s_rec(n, m, i) or (n and m and e != logint.s_one_step(n, m, i)):
                    bad.append(("S", n, m, i))
    for n in range(7):
        for m in range(7):
            for i in range(7):
                v = tiered.tiered(n, m, i)
                if not v == tiered.tiered(n, m, i, "recurrence") == tiered.tiered(n, m, i, "gf"):
                    bad.append(("tiered", n, m, i))
    for N in range(9):
        for i in range(7):
            vals = {tiered.row_sum(N, i, r) for r in tiered.ROW_SUM_ROUTES} | {tiered.row_sum_direct(N, i)}
            if len(vals) != 1:
                bad.append(("row", N, i))
    report(6, not bad, f"logint, tiered and row-sum routes agree exactly, mismatches={bad}")


def test_07_identities(report):
    bad = []
    for n in range(4):
        for m in range(4):
            for i in range(5):
                rhs = sum(
                    (logint.i_exact(m, n, j).scale(comb(i, j) * (-1) ** j) for j in range(i + 1)), ZetaPolynomial()
                )
                if logint.i_exact(n, m, i) != rhs:
                    bad.append(("I symmetry", n, m, i))
                a, b = tiered.gen_symmetry_check(n, m, i)
                if a != b:
                    bad.append(("tiered symmetry", n, m, i))
    for n in range(6):
        for k in range(3):
            a, b = tiered.euler_central_check(n, k)
            if a != b:
                bad.append(("Euler", n, k))
    for n in range(6):
        for m in range(6):
            for N in range(6):
                if tiered.tier_sum(n, m, N) != tiered.tier_sum_direct(n, m, N):
                    bad.append(("tier sum", n, m, N))
    for k in range(9):
        for i in range(6):
            if tiered.alt_sum_over_m(k, i) != tiered.alt_sum_over_m_gf(k, i):
                bad.append(("alt m", k, i))
            if k >= 1 and tiered.alt_sum_over_n(k, i) != tiered.alt_sum_over_n_gf(k, i):
                bad.append(("alt n", k, i))
    for d in range(5):
        for n in range(d + 1):
            a, b = tiered.complete_gf_check(n, d - n, 4)
            if a != b:
                bad.append(("complete GF", n, d - n))
    for w in range(2, 11):
        for a in range(1, w):
            h = mzv.zeta_hook(a, w - 1 - a)
            if h != mzv.zeta_hook(w - a, a - 1) or h.weights() != {w}:
                bad.append(("hook", a, w - 1 - a))
    report(7, not bad, f"symmetry, Euler, tier-sum, alternating-sum, complete-GF and hook identities, failures={bad}")


def test_08_mzv_numerics(report):
    worst_hook, worst_ks, bad = 0.0, 0.0, []
    for w in range(2, 9):
        for a in range(1, w):
            h = mzv.HookIndex(a, w - 1 - a)
            r = compare(mzv.zeta_hook(h), numeric.mzv_numeric(h.index, 20), 1e-8)
            worst_hook = max(worst_hook, r.relative_error)
            if not r.passed:
                bad.append(h.index)
    for m in range(1, 6):
        for n in range(1, 7 - m):
            with mp.workdps(numeric.working_dps(20)):
                val = mp.fsum(sign * numeric.mzv_numeric(idx, 20).value for sign, idx in mzv.kaneko_sakata_terms(m, n))
            r = compare(mzv.mzv_leading(m + 1, n - 1), numeric.NumericValue(val, 20, mpf(0)), 1e-6)
            worst_ks = max(worst_ks, r.relative_error)
            if not r.passed:
                bad.append(("KS", m, n))
    report(8, not bad, f"hooks to weight 8 worst {worst_hook:.1e}; Kaneko-Sakata m+n<=6 worst {worst_ks:.1e}; failures={bad}")


def test_09_nielsen(report):
    worst_b, worst_r, bad = mpf(0), mpf(0), []
    for z in (F(1, 4), F(1, 2), F(3, 4)):
        for m in range(1, 4):
            for i in range(4):
                a = nielsen.nielsen_series(nielsen.NielsenKey(0, m, i, z), 20).value
                b = nielsen.nielsen_boundary(m, i, z, 20).value
                d = abs(a - b)
                worst_b = max(worst_b, d)
                if d > 1e-10:
                    bad.append(("boundary", m, i, z))
    for z in (F(1, 4), F(1, 2), F(3, 4), F(1)):
        for n in range(1, 3):
            for m in range(1, 3):
                for i in range(3):
                    r = nielsen.nielsen_recurrence_residual(nielsen.NielsenKey(n, m, i, z), 20).value
                    worst_r = max(worst_r, r)
                    if r > 1e-9:
                        bad.append(("recurrence", n, m, i, z))
    report(9, not bad, f"boundary worst {float(worst_b):.1e}, recurrence residual worst {float(worst_r):.1e}, failures={bad}")


def test_10_finite_n(report):
    rec = quicksort.finite_expectation_recurrence(200)
    exact = all(quicksort.finite_expectation(n) == rec[n] for n in range(201))
    r = quicksort.simulate(1000, 100_000, 42, max_moment=2)
    m2 = r.moments[1]
    rel = abs(m2 / 0.4202637 - 1)
    report(
        10,
        exact and rel < 0.05,
        f"E(C_n) closed form = recurrence for n<=200: {exact}; Monte Carlo E(Z^2) = {m2:.5f} "
        f"(SE {r.standard_errors[1]:.5f}), {100 * rel:.2f}% from 0.4202637",
    )
