from fractions import Fraction as F

import pytest
from mpmath import mpf

from logzeta.algebra import ZetaPolynomial, zeta
from logzeta.errors import DivergentError, DomainError
from logzeta.numeric import (
    NumericValue,
    compare,
    eval_zeta_polynomial,
    mzv_numeric,
    quad_logint,
    working_dps,
    zeta_numeric,
)

# 30-digit reference values from mpmath
ZETA4 = "1.08232323371113819151600369654"
ZETA5 = "1.03692775514336992633136548646"
ZETA31 = "0.270580808427784547879000924135"
ZETA22 = "0.811742425283353643637002772406"
I110 = "0.355065933151773563527584833354"
S_NEG_022 = "1.64493406684822643647241516665"
MU2 = "0.420263732607094254110339333416"


def close(v: NumericValue, ref: str, digits: int) -> bool:
    return abs(v.value - mpf(ref)) <= abs(mpf(ref)) * mpf(10) ** (-digits)


def test_working_precision():
    assert working_dps(20) == 30
    with pytest.raises(DomainError):
        working_dps(0)


def test_zeta_values():
    assert close(zeta_numeric(4, 30), ZETA4, 28)
    assert close(zeta_numeric(5, 30), ZETA5, 28)
    assert zeta_numeric(4, 30).error < mpf(10) ** -30
    with pytest.raises(DivergentError):
        zeta_numeric(1)


def test_zeta_rendering():
    v = zeta_numeric(2, 15)
    assert str(v) == "1.64493406684823"
    assert v.to_json()["prec"] == 15


def test_mzv_depth_two():
    assert close(mzv_numeric((3, 1), 30), ZETA31, 27)
    assert close(mzv_numeric((2, 2), 30), ZETA22, 27)


def test_mzv_depth_one_matches_zeta():
    for k in range(2, 8):
        assert abs(mzv_numeric((k,), 25).value - zeta_numeric(k, 25).value) < mpf(10) ** -24


def test_duality_numerically():
    # zeta(2,1,1) = zeta(4)
    assert abs(mzv_numeric((2, 1, 1), 25).value - zeta_numeric(4, 25).value) < mpf(10) ** -24


def test_mzv_errors():
    with pytest.raises(DivergentError):
        mzv_numeric((1, 2))
    with pytest.raises(DomainError):
        mzv_numeric((2, 0))
    with pytest.raises(DomainError):
        mzv_numeric(())


def test_eval_polynomial():
    p = ZetaPolynomial.const(7) - zeta(2).scale(4)
    v = eval_zeta_polynomial(p, 25)
    assert close(v, MU2, 24)
    assert v.error < mpf(10) ** -25
    assert eval_zeta_polynomial(F(3, 4), 10).value == mpf(3) / 4


def test_quadrature_reference_values():
    assert close(quad_logint(1, 1, 0, 25), I110, 23)
    # I_{0,2}^(-2) = 2 S = 2 zeta(2)
    assert abs(quad_logint(0, 2, -2, 20).value - 2 * mpf(S_NEG_022)) < mpf(10) ** -18


def test_quadrature_divergent_keys():
    with pytest.raises(DivergentError):
        quad_logint(1, 0, -1)
    with pytest.raises(DivergentError):
        quad_logint(0, 1, -2)


def test_compare():
    r = compare(zeta(2), zeta_numeric(2, 20), 1e-15, "zeta(2)")
    assert r.passed and r.relative_error < 1e-18
    bad = compare(zeta(2) + F(1, 10**8), zeta_numeric(2, 20), 1e-12)
    assert not bad.passed
    assert r.to_json()["label"] == "zeta(2)"
    with pytest.raises(DomainError):
        compare(zeta(2), zeta_numeric(2), 0)


def test_compare_absolute_at_zero():
    r = compare(0, NumericValue(mpf("1e-25"), 20, mpf(0)), 1e-20)
    assert r.passed
