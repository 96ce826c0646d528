from fractions import Fraction as F
from itertools import permutations
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mpf

from logzeta.algebra import ZetaPolynomial, zeta
from logzeta.combinatorics import harmonic
from logzeta.errors import DomainError
from logzeta.numeric import eval_zeta_polynomial
from logzeta.quicksort import (
    CumulantTable,
    MomentTable,
    cumulants_from_moments,
    entropy_integral,
    finite_expectation,
    finite_expectation_recurrence,
    gumbel_cumulants,
    hennequin_remainder,
    moment_table,
    moments_from_cumulants,
    qs_constant_term,
    qs_cumulant,
    qs_moment,
    qs_normalized_ct,
    quicksort_comparisons,
    shifted_cumulants,
    simulate,
    simulate_costs,
)

MU2 = "0.420263732607094254110339333416"
MU3 = "0.232910450553508566395810584184"
ENTROPY_002 = "0.140087910869031418036779777805"


def finite_variance(n):
    # Var C_n = 7n^2 - 4(n+1)^2 H_n^(2) - 2(n+1) H_n + 13n
    return 7 * n * n - 4 * (n + 1) ** 2 * harmonic(n, 2) - 2 * (n + 1) * harmonic(n) + 13 * n


class TestExactMoments:
    def test_low_moments(self):
        assert qs_moment(0) == 1
        assert qs_moment(1) == 0
        assert qs_moment(2) == ZetaPolynomial.const(7) - zeta(2).scale(4)
        assert qs_moment(3) == ZetaPolynomial.const(-19) + zeta(3).scale(16)

    def test_fourth_moment(self):
        want = ZetaPolynomial.const(F(2260, 9)) - zeta(2).scale(168) + (zeta(2) ** 2).scale(48) - zeta(4).scale(96)
        assert qs_moment(4) == want

    def test_numeric(self):
        assert abs(eval_zeta_polynomial(qs_moment(2), 25).value - mpf(MU2)) < mpf(10) ** -25
        assert abs(eval_zeta_polynomial(qs_moment(3), 25).value - mpf(MU3)) < mpf(10) ** -25

    def test_entropy_integrals(self):
        assert entropy_integral(0, 0, 0) == 1
        assert entropy_integral(2, 0, 0) == F(1, 3)
        assert entropy_integral(0, 0, 1) == 0
        assert abs(eval_zeta_polynomial(entropy_integral(0, 0, 2), 25).value - mpf(ENTROPY_002)) < mpf(10) ** -25

    def test_negative_order(self):
        with pytest.raises(DomainError):
            qs_moment(-1)


class TestConstantTerms:
    def test_values(self):
        assert [qs_constant_term(s) for s in range(5)] == [1, 0, 7, -19, F(2260, 9)]

    def test_routes(self):
        for s in range(7):
            assert qs_constant_term(s, "projection") == qs_constant_term(s, "recurrence")
            assert qs_normalized_ct(s, "definition") == qs_normalized_ct(s, "recurrence")

    def test_unknown_route(self):
        with pytest.raises(DomainError):
            qs_constant_term(2, "guess")


class TestCumulants:
    def test_tables(self):
        mt = moment_table(4)
        assert isinstance(mt, MomentTable)
        ct = cumulants_from_moments(mt)
        assert isinstance(ct, CumulantTable)
        assert moments_from_cumulants(ct) == mt
        with pytest.raises(DomainError):
            MomentTable((ZetaPolynomial.const(2), ZetaPolynomial.const(0)))

    def test_second_and_third(self):
        assert qs_cumulant(2) == qs_moment(2)
        assert qs_cumulant(3) == qs_moment(3)

    def test_gumbel(self):
        assert gumbel_cumulants(2) == zeta(2).scale(4)
        assert gumbel_cumulants(3) == zeta(3).scale(-16)

    def test_shift_cancels_zeta(self):
        want = [7, -19, F(937, 9), F(-85981, 108), F(21096517, 2700)]
        assert [shifted_cumulants(s) for s in range(2, 7)] == want

    def test_remainder_is_rational(self):
        for s in range(2, 7):
            r = hennequin_remainder(s)
            assert r.is_constant() and r.constant_term() == shifted_cumulants(s)


class TestFiniteN:
    def test_closed_form(self):
        assert finite_expectation(0) == 0
        assert finite_expectation(1) == 0
        assert finite_expectation(2) == 1
        assert finite_expectation(3) == F(8, 3)
        assert finite_expectation_recurrence(200) == [finite_expectation(n) for n in range(201)]

    def test_enumeration(self):
        for n in range(1, 7):
            counts = [quicksort_comparisons(p) for p in permutations(range(n))]
            assert F(sum(counts), factorial(n)) == finite_expectation(n)
            mean = F(sum(counts), len(counts))
            var = F(sum(c * c for c in counts), len(counts)) - mean**2
            assert var == finite_variance(n)

    @given(st.lists(st.integers(), max_size=40, unique=True))
    @settings(max_examples=50, deadline=None)
    def test_comparisons_bounds(self, xs):
        n = len(xs)
        c = quicksort_comparisons(xs)
        assert c <= n * (n - 1) // 2
        if n >= 2:
            assert c >= n - 1


class TestSimulation:
    def test_deterministic(self):
        a = simulate_costs(30, 500, 7)
        b = simulate_costs(30, 500, 7)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, simulate_costs(30, 500, 8))

    @pytest.mark.parametrize("method", ["split", "permutation"])
    def test_against_exact_moments(self, method):
        n, runs = 40, 4000
        c = simulate_costs(n, runs, 3, method).astype(float)
        mean, var = float(finite_expectation(n)), float(finite_variance(n))
        assert abs(c.mean() - mean) < 5 * np.sqrt(var / runs)
        assert abs(c.var(ddof=1) / var - 1) < 0.1

    def test_report(self):
        r = simulate(100, 3000, 1, max_moment=3)
        assert len(r.moments) == 3 and len(r.standard_errors) == 3
        assert abs(r.moments[0]) < 5 * r.standard_errors[0]
        j = r.to_json()
        assert j["seed"] == 1 and j["runs"] == 3000 and "PCG64" in j["rng"]

    def test_small_n_rejected(self):
        with pytest.raises(DomainError):
            simulate(1, 10, 0)
