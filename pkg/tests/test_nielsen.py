from fractions import Fraction as F

import pytest
from mpmath import mpf

from logzeta.errors import DivergentError, DomainError
from logzeta.logint import s_value
from logzeta.nielsen import (
    NielsenKey,
    boundary_remark_residual,
    multiple_polylog,
    nielsen_boundary,
    nielsen_recurrence_residual,
    nielsen_series,
)
from logzeta.numeric import eval_zeta_polynomial

HALF = F(1, 2)
# mpmath references
LI2_HALF = "0.58224052646501250590265632016"
LI3_HALF = "0.537213193608040200940623225595"
ONE_MINUS_LN2 = "0.306852819440054690582767878542"
S_121_HALF = "0.0115213756655045904094453060269"
S_210_3Q = "0.10737494390335572405862986053"


def test_key_coercion():
    k = NielsenKey(0, 1, 0, "1/2")
    assert k.z == HALF
    assert NielsenKey(0, 1, 0, 1).z == 1


@pytest.mark.parametrize("z", [0, F(3, 2), -1])
def test_key_z_range(z):
    with pytest.raises(DomainError):
        NielsenKey(0, 1, 0, z)


def test_key_errors():
    with pytest.raises(DomainError):
        NielsenKey(0, 1, -2, HALF)
    with pytest.raises(DivergentError):
        NielsenKey(1, 0, -1, HALF)


def test_m_zero_is_independent_of_z():
    v = nielsen_series(NielsenKey(0, 0, 2, HALF), 20)
    assert abs(v.value - mpf(1) / 3) < mpf(10) ** -25


def test_boundary_example():
    assert abs(nielsen_series(NielsenKey(0, 1, 0, HALF), 25).value - mpf(ONE_MINUS_LN2)) < mpf(10) ** -25
    assert abs(nielsen_boundary(1, 0, HALF, 25).value - mpf(ONE_MINUS_LN2)) < mpf(10) ** -25


def test_reference_values():
    assert abs(nielsen_series(NielsenKey(1, 2, 1, HALF), 25).value - mpf(S_121_HALF)) < mpf(10) ** -26
    assert abs(nielsen_series(NielsenKey(2, 1, 0, F(3, 4)), 25).value - mpf(S_210_3Q)) < mpf(10) ** -25


def test_polylog_reductions():
    assert abs(multiple_polylog(1, 1, HALF, 25).value - mpf(LI2_HALF)) < mpf(10) ** -25
    assert abs(multiple_polylog(2, 1, HALF, 25).value - mpf(LI3_HALF)) < mpf(10) ** -25
    with pytest.raises(DivergentError):
        multiple_polylog(0, 2, 1)


def test_at_one_matches_exact():
    for n in range(4):
        for m in range(4):
            for i in range(-1, 4):
                if i == -1 and m == 0:
                    continue
                got = nielsen_series(NielsenKey(n, m, i, 1), 20)
                want = eval_zeta_polynomial(s_value(n, m, i), 20)
                assert abs(got.value - want.value) <= abs(want.value) * 1e-15


@pytest.mark.parametrize("z", [F(1, 4), HALF, F(3, 4)])
def test_boundary_closed_form(z):
    for m in range(1, 4):
        for i in range(4):
            a = nielsen_series(NielsenKey(0, m, i, z), 20).value
            b = nielsen_boundary(m, i, z, 20).value
            assert abs(a - b) < 1e-15


def test_boundary_rejects_one():
    with pytest.raises(DomainError):
        nielsen_boundary(1, 0, 1)


@pytest.mark.parametrize("z", [F(1, 4), HALF, F(3, 4), F(1)])
def test_recurrence(z):
    for n in range(1, 3):
        for m in range(1, 3):
            for i in range(3):
                r = nielsen_recurrence_residual(NielsenKey(n, m, i, z), 20)
                assert r.value < 1e-15


def test_n_zero_recurrence():
    for m in range(1, 3):
        for i in range(3):
            assert boundary_remark_residual(m, i, F(2, 3), 20).value < 1e-15
