"""Exact values of the logarithmic integrals

    I_{n,m}^(i) = int_0^1 x^i ln^n(x) ln^m(1-x) dx

and of their normalized form S_{n,m}^(i) = (-1)^(n+m) / (n! m!) * I_{n,m}^(i),
as polynomials in zeta(2), zeta(3), ...

Covered ranges: i >= 0 (three routes), i = -1 (hook MZVs), and
-m <= i <= -2 (recurrence in n from a boundary at n = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, wraps
from math import factorial

from .algebra import ZetaPolynomial, sum_zp
from .combinatorics import stirling_cycle, zts_ones
from .errors import DivergentError, DomainError
from .mzv import mzv_leading
from .tiered import tiered


@dataclass(frozen=True)
class LogIntegralKey:
    n: int
    m: int
    i: int

    def __post_init__(self):
        n, m, i = self.n, self.m, self.i
        if n < 0 or m < 0:
            raise DomainError(f"n, m must be non-negative, got n={n}, m={m}")
        if i == -1 and m == 0:
            raise DivergentError("I_{n,0}^(-1) diverges at x = 0")
        if i < -1 and -i > m:
            raise DivergentError(f"I_{{n,m}}^({i}) diverges for m={m} < {-i}")


@dataclass(frozen=True)
class NormalizedValue:
    """S together with its key; ``integral`` gives the matching I."""

    key: LogIntegralKey
    value: ZetaPolynomial

    @property
    def integral(self) -> ZetaPolynomial:
        return self.value.scale(normalization(self.key.n, self.key.m))


def _keyed(fn):
    # f(key) or f(n, m, i); the cache is keyed on the plain triple
    cached = lru_cache(maxsize=None)(fn)

    @wraps(fn)
    def wrapper(n, m=None, i=None):
        if isinstance(n, LogIntegralKey):
            n, m, i = n.n, n.m, n.i
        return cached(n, m, i)

    wrapper.cache_clear = cached.cache_clear
    wrapper.cache_info = cached.cache_info
    return wrapper


def _hook_tail(first: int, ones: int) -> ZetaPolynomial:
    # zeta(first, {1}_ones); the recurrences never request first < 2
    assert first >= 2, f"zeta({first}, ...) requested"
    return mzv_leading(first, ones)


@_keyed
def s_exact(n: int, m: int, i: int) -> ZetaPolynomial:
    """S_{n,m}^(i) for i >= 0 from the tiered-coefficient expansion."""
    if i < 0:
        raise DomainError("s_exact covers i >= 0; use s_value for negative i")
    LogIntegralKey(n, m, i)
    terms = [ZetaPolynomial.const(tiered(n, m, i))]
    for a in range(1, n + 1):
        for b in range(1, m + 1):
            c = tiered(n - a, m - b, i)
            terms.append(_hook_tail(a + 1, b - 1).scale(-c))
    return sum_zp(terms)


@_keyed
def s_rec(n: int, m: int, i: int) -> ZetaPolynomial:
    """S_{n,m}^(i), i >= 0, by the recurrence in n and m."""
    if i < 0:
        raise DomainError("s_rec covers i >= 0")
    LogIntegralKey(n, m, i)
    if m == 0:
        return ZetaPolynomial.const(Fraction(1, (i + 1) ** (n + 1)))
    if n == 0:
        return ZetaPolynomial.const(zts_ones(i + 1, m) / (i + 1))
    parts = [s_rec(n - 1, m, i)]
    parts.extend(s_rec(n, m - 1, j) for j in range(i + 1))
    parts.append(-_hook_tail(n + 1, m - 1))
    return sum_zp(parts) / (i + 1)


@_keyed
def s_one_step(n: int, m: int, i: int) -> ZetaPolynomial:
    """S_{n,m}^(i) from the one-step recurrence in m (n, m >= 1, i >= 0).

    Rows with smaller m are taken from this same route where possible and
    from the closed boundary values otherwise.
    """
    if i < 0 or n < 1 or m < 1:
        raise DomainError("s_one_step needs n, m >= 1 and i >= 0")
    parts = []
    for r in range(1, n + 1):
        inner = sum_zp(_s_one_step_or_boundary(r, m - 1, j) for j in range(i + 1))
        parts.append((inner - _hook_tail(r + 1, m - 1)) / Fraction((i + 1) ** (n + 1 - r)))
    parts.append(ZetaPolynomial.const(zts_ones(i + 1, m) / Fraction((i + 1) ** (n + 1))))
    return sum_zp(parts)


def _s_one_step_or_boundary(n: int, m: int, i: int) -> ZetaPolynomial:
    if m == 0:
        return ZetaPolynomial.const(Fraction(1, (i + 1) ** (n + 1)))
    return s_one_step(n, m, i)


def toll(n: int, m: int, i: int) -> ZetaPolynomial:
    """Toll function t_{n,m,i} of the one-step recurrence."""
    if i < 0 or n < 1 or m < 1:
        raise DomainError("toll needs n, m >= 1 and i >= 0")
    parts = [
        -_hook_tail(r + 1, m - 1) / Fraction((i + 1) ** (n + 1 - r)) for r in range(1, n + 1)
    ]
    parts.append(ZetaPolynomial.const(zts_ones(i + 1, m) / Fraction((i + 1) ** (n + 1))))
    return sum_zp(parts)


def s_minus_one(n: int, m: int) -> ZetaPolynomial:
    """S_{n,m}^(-1) = zeta(n+2, {1}_(m-1))."""
    if m < 1:
        raise DivergentError("S_{n,0}^(-1) diverges")
    if n < 0:
        raise DomainError("n must be non-negative")
    return _hook_tail(n + 2, m - 1)


def t_value(n: int, m: int, i: int) -> ZetaPolynomial:
    """Hurwitz-shifted value T_{n,m}^(i) = sum_l zeta_{l-1}({1}_{m-1}) / (l+i+1)^(n+1)."""
    if m < 1 or i < -1:
        raise DomainError("t_value needs m >= 1 and i >= -1")
    if n < 1:
        raise DivergentError("T_{0,m}^(i) diverges")
    parts = [_hook_tail(n + 1, m - 1)]
    parts.extend(-s_value(n, m - 1, j) for j in range(i + 1))
    return sum_zp(parts)


@lru_cache(maxsize=None)
def _negative_boundary(m: int, i: int) -> ZetaPolynomial:
    # S_{0,m}^(-i) = sum_{u>=1} C(u+i-2, i-1) u^(-m-1), and
    # C(u+i-2, i-1) = u^(rising i-1) / (i-1)! = sum_k [i-1, k] u^k / (i-1)!
    parts = []
    for k in range(1, i):
        c = Fraction(stirling_cycle(i - 1, k), factorial(i - 1))
        parts.append(ZetaPolynomial.zeta(m + 1 - k).scale(c))
    return sum_zp(parts)


@lru_cache(maxsize=None)
def s_negative(n: int, m: int, i: int) -> ZetaPolynomial:
    """S_{n,m}^(-i) for 2 <= i <= m."""
    if not 2 <= i <= m:
        raise DomainError(f"s_negative needs 2 <= i <= m, got i={i}, m={m}")
    if n < 0:
        raise DomainError("n must be non-negative")
    if n == 0:
        return _negative_boundary(m, i)
    parts = [s_negative(n, m - 1, j) for j in range(2, i)]
    parts.append(-s_negative(n - 1, m, i))
    parts.append(_hook_tail(n + 1, m - 1))
    parts.append(_hook_tail(n + 2, m - 2))
    return sum_zp(parts) / (i - 1)


@_keyed
def s_value(n: int, m: int, i: int) -> ZetaPolynomial:
    """S_{n,m}^(i) for any convergent key, dispatching on the sign of i."""
    LogIntegralKey(n, m, i)
    if i >= 0:
        return s_exact(n, m, i)
    if i == -1:
        return s_minus_one(n, m)
    return s_negative(n, m, -i)


def normalization(n: int, m: int) -> int:
    """The factor (-1)^(n+m) n! m! taking S to I."""
    return (-1) ** (n + m) * factorial(n) * factorial(m)


@_keyed
def i_exact(n: int, m: int, i: int) -> ZetaPolynomial:
    """I_{n,m}^(i) = (-1)^(n+m) n! m! S_{n,m}^(i)."""
    return s_value(n, m, i).scale(normalization(n, m))


def variant_integral(n: int, m: int, i: int) -> ZetaPolynomial:
    """int_0^1 x^i ln^n(x) ln^m(1-x) / (1-x) dx, via integration by parts.

    Converges only for n >= 1: near x = 1 the factor ln^n(x) must cancel the
    pole, whatever the value of i.
    """
    if n < 1:
        raise DivergentError("the variant integral diverges at x = 1 when n = 0")
    if m < 0 or i < 0:
        raise DomainError("m and i must be non-negative")
    parts = []
    if i:
        parts.append(i_exact(n, m + 1, i - 1).scale(i))
    parts.append(i_exact(n - 1, m + 1, i - 1).scale(n))
    return sum_zp(parts) / (m + 1)
