"""Generalized Nielsen polylogarithms

    S_{n,m}^(i)(z) = (-1)^(n+m) / (n! m!) * int_0^1 x^i ln^n(x) ln^m(1 - z x) dx

for rational 0 < z <= 1, together with the multiple polylogarithms
L_{n+1,{1}_(m-1)}(z) and the recurrence linking them.

Series tails are controlled by majorants g(l) whose ratio g(l+1)/g(l) is
decreasing in l; once the ratio q at the cutoff is below 1 the omitted tail
is at most g(L+1) / (1 - q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import mpmath
from mpmath import mp, mpf

from .algebra import parse_rational
from .errors import AccuracyError, DivergentError, DomainError
from .numeric import NumericValue, mzv_numeric, working_dps

MAX_TERMS = 200_000


@dataclass(frozen=True)
class NielsenKey:
    n: int
    m: int
    i: int
    z: Fraction

    def __post_init__(self):
        z = self.z
        if not isinstance(z, Fraction):
            object.__setattr__(self, "z", parse_rational(z) if isinstance(z, str) else Fraction(z))
            z = self.z
        if self.n < 0 or self.m < 0:
            raise DomainError("n, m must be non-negative")
        if self.i < -1:
            raise DomainError("Nielsen polylogarithms need i >= -1")
        if not 0 < z <= 1:
            raise DomainError(f"z must lie in (0, 1], got {z}")
        if self.i == -1 and self.m == 0:
            raise DivergentError("S_{n,0}^(-1)(z) diverges at x = 0")


def _mpq(q: Fraction) -> mpf:
    return mpf(q.numerator) / q.denominator


def _ones_truncated(depth: int, upto: int):
    """Yield (l, zeta_{l-1}({1}_depth)) for l = 1..upto, as mpf."""
    # e[j] = zeta_{l-1}({1}_j), updated by e_j(l) = e_j(l-1) + e_{j-1}(l-1)/(l-1)
    e = [mpf(1)] + [mpf(0)] * depth
    for l in range(1, upto + 1):
        if l > 1:
            for j in range(depth, 0, -1):
                e[j] += e[j - 1] / (l - 1)
        yield l, e[depth]


def _log_factor(l: int, p: int) -> mpf:
    return (1 + mpmath.log(l)) ** p


def _sum_with_majorant(terms, majorant, ratio, eps):
    """Sum a series until the majorant tail bound drops below eps."""
    total = mpf(0)
    for l, t in terms:
        total += t
        q = ratio(l + 1)
        if q < 1 and majorant(l + 1) / (1 - q) < eps:
            return total, majorant(l + 1) / (1 - q)
    raise AccuracyError("series did not converge within the term budget", best=total)


def _direct_series(n: int, m: int, i: int, z: mpf, eps: mpf):
    # sum_l z^l zeta_{l-1}({1}_{m-1}) / (l (l+i+1)^(n+1)), zeta_{l-1} <= (1+ln l)^(m-1)
    def terms():
        zl = mpf(1)
        for l, e in _ones_truncated(m - 1, MAX_TERMS):
            zl *= z
            yield l, zl * e / (l * mpf(l + i + 1) ** (n + 1))

    def majorant(l):
        return z**l * _log_factor(l, m - 1) / (l * mpf(l + i + 1) ** (n + 1))

    def ratio(l):
        return z * (_log_factor(l + 1, 1) / _log_factor(l, 1)) ** (m - 1)

    return _sum_with_majorant(terms(), majorant, ratio, eps)


def _int_power_log(k: int, n: int, a: mpf, ln_a: mpf) -> mpf:
    # int_0^a x^k ln^n x dx = a^(k+1) sum_r (-1)^r n^(falling r) ln^(n-r) a / (k+1)^(r+1)
    acc = mpf(0)
    fall = 1
    for r in range(n + 1):
        acc += (-1) ** r * fall * ln_a ** (n - r) / mpf(k + 1) ** (r + 1)
        fall *= n - r
    return a ** (k + 1) * acc


def _split_series(n: int, m: int, i: int, eps: mpf):
    """S_{n,m}^(i)(1) from the two halves of [0, 1], each a 2^-k series."""
    half = mpf(1) / 2
    lh = mpmath.log(half)
    # left: ln^m(1-x) = (-1)^m m! sum_l zeta_{l-1}({1}_{m-1}) x^l / l
    # |int_0^{1/2} x^k ln^n x| <= 2^-k n!, so g(l) = (1+ln l)^(m-1) 2^-(l+i) n! m! / l
    left_terms = (
        (l, e / l * _int_power_log(l + i, n, half, lh)) for l, e in _ones_truncated(m - 1, MAX_TERMS)
    )
    left, err_l = _sum_with_majorant(
        left_terms,
        lambda l: _log_factor(l, m - 1) * half ** (l + i) * factorial(n) / l,
        lambda l: half * (_log_factor(l + 1, 1) / _log_factor(l, 1)) ** (m - 1),
        eps,
    )
    left *= (-1) ** m * factorial(m)

    # right: u = 1 - x, (1-u)^i ln^n(1-u) = sum_k c_k u^k
    def coeffs():
        window = []
        partial = mpf(0)
        gen = _ones_truncated(n - 1, MAX_TERMS) if n else None
        for k in range(0, MAX_TERMS):
            # a_k: coefficient of u^k in ln^n(1-u) / ((-1)^n n!)
            if n == 0:
                a_k = mpf(1) if k == 0 else mpf(0)
            elif k == 0:
                a_k = mpf(0)
            else:
                l, e = next(gen)
                a_k = e / l
            if i >= 0:
                window.append(a_k)
                if len(window) > i + 1:
                    window.pop(0)
                c = sum((comb(i, j) * (-1) ** j * window[-1 - j] for j in range(len(window))), mpf(0))
            else:
                partial += a_k
                c = partial
            yield k, c * _int_power_log(k, m, half, lh)

    # |c_k| <= (k+1) 2^|i| (1+ln k)^(n-1) and |int_0^{1/2} u^k ln^m u| <= 2^-k m!
    p = max(n - 1, 0)
    right, err_r = _sum_with_majorant(
        ((k + 1, t) for k, t in coeffs()),
        lambda l: l * 2 ** abs(i) * _log_factor(l, p) * half ** (l - 1) * factorial(m),
        lambda l: half * (l + 1) / l * (_log_factor(l + 1, 1) / _log_factor(l, 1)) ** p,
        eps,
    )
    right *= (-1) ** n * factorial(n)
    norm = mpf((-1) ** (n + m)) / (factorial(n) * factorial(m))
    return norm * (left + right), abs(norm) * (err_l + err_r)


def nielsen_series(key: NielsenKey, prec: int = 30) -> NumericValue:
    """S_{n,m}^(i)(z) from its series in truncated zeta values.

    For z < 1 the series is summed directly. At z = 1 it converges only
    like (ln l)^(m-1) / l^2, so the integral is split at 1/2 and each half
    expanded into a geometrically convergent series.
    """
    n, m, i, z = key.n, key.m, key.i, key.z
    wp = working_dps(prec)
    with mp.workdps(wp):
        if m == 0:
            return NumericValue(mpf(1) / mpf(i + 1) ** (n + 1), prec, mpf(0))
        eps = mpf(10) ** (-wp)
        if z == 1:
            val, err = _split_series(n, m, i, eps)
        else:
            val, err = _direct_series(n, m, i, _mpq(z), eps)
        return NumericValue(val, prec, err)


def nielsen_boundary(m: int, i: int, z, prec: int = 30) -> NumericValue:
    """S_{0,m}^(i)(z) in closed form through ln(1 - z), for 0 < z < 1."""
    z = Fraction(z) if not isinstance(z, str) else parse_rational(z)
    if m < 1 or i < 0:
        raise DomainError("nielsen_boundary needs m >= 1 and i >= 0")
    if z == 1:
        raise DomainError("z = 1 has no ln(1 - z) closed form; use the truncated zeta star values")
    if not 0 < z < 1:
        raise DomainError(f"z must lie in (0, 1), got {z}")
    wp = working_dps(prec)
    with mp.workdps(wp):
        zz = _mpq(z)
        omz = 1 - zz
        L = mpmath.log(omz)
        acc = mpf(0)
        for j in range(i + 1):
            p = omz ** (j + 1)
            inner = mpf(0)
            fall = 1
            for l in range(m):
                inner += (-1) ** (l + 1) * fall / (zz * mpf(j + 1) ** (l + 1)) * L ** (m - l)
                fall *= m - l
            inner *= p
            inner += (-1) ** (m + 1) * factorial(m) * (p - 1) / (zz * mpf(j + 1) ** (m + 1))
            acc += comb(i, j) * (-1) ** j * inner
        val = (-1) ** m * acc / (factorial(m) * zz**i)
        return NumericValue(val, prec, abs(val) * mpf(10) ** (-wp + 2))


def multiple_polylog(n: int, m: int, z, prec: int = 30) -> NumericValue:
    """L_{n+1,{1}_(m-1)}(z) = sum_l z^l zeta_{l-1}({1}_{m-1}) / l^(n+1)."""
    z = Fraction(z) if not isinstance(z, str) else parse_rational(z)
    if n < 0 or m < 1:
        raise DomainError("multiple_polylog needs n >= 0 and m >= 1")
    if not 0 < z <= 1:
        raise DomainError(f"z must lie in (0, 1], got {z}")
    if z == 1:
        if n == 0:
            raise DivergentError("L_{1,...}(1) diverges")
        return mzv_numeric((n + 1,) + (1,) * (m - 1), prec)
    wp = working_dps(prec)
    with mp.workdps(wp):
        val, err = _direct_series(n - 1, m, -1, _mpq(z), mpf(10) ** (-wp))
        return NumericValue(val, prec, err)


def nielsen_recurrence_residual(key: NielsenKey, prec: int = 30) -> NumericValue:
    """|S(z) - [S_{n-1,m}(z) + sum_j z^(j-i) S_{n,m-1}^(j)(z) - z^(-i-1) L(z)] / (i+1)|."""
    n, m, i, z = key.n, key.m, key.i, key.z
    if n < 1 or m < 1 or i < 0:
        raise DomainError("the recurrence needs n, m >= 1 and i >= 0")
    wp = working_dps(prec)
    lhs = nielsen_series(key, prec)
    parts = [nielsen_series(NielsenKey(n - 1, m, i, z), prec)]
    parts += [nielsen_series(NielsenKey(n, m - 1, j, z), prec) for j in range(i + 1)]
    L = multiple_polylog(n, m, z, prec)
    with mp.workdps(wp):
        zz = _mpq(z)
        rhs = parts[0].value
        rhs += mpmath.fsum(zz ** (j - i) * parts[1 + j].value for j in range(i + 1))
        rhs -= zz ** (-i - 1) * L.value
        rhs /= i + 1
        err = lhs.error + sum(p.error for p in parts) * zz ** (-i) + L.error * zz ** (-i - 1)
        return NumericValue(abs(lhs.value - rhs), prec, err)


def boundary_remark_residual(m: int, i: int, z, prec: int = 30) -> NumericValue:
    """Residual of the n = 0 recurrence, with L_{{1}_m}(z) = (-ln(1-z))^m / m!."""
    z = Fraction(z) if not isinstance(z, str) else parse_rational(z)
    if m < 1 or i < 0:
        raise DomainError("needs m >= 1 and i >= 0")
    lhs = nielsen_series(NielsenKey(0, m, i, z), prec)
    parts = [nielsen_series(NielsenKey(0, m - 1, j, z), prec) for j in range(i + 1)]
    L = multiple_polylog(0, m, z, prec)
    wp = working_dps(prec)
    with mp.workdps(wp):
        zz = _mpq(z)
        rhs = L.value + mpmath.fsum(zz ** (j - i) * parts[j].value for j in range(i + 1))
        rhs -= zz ** (-i - 1) * L.value
        rhs /= i + 1
        return NumericValue(abs(lhs.value - rhs), prec, lhs.error + L.error * zz ** (-i - 1))
