"""Tiered binomial coefficients (n, m)_i and their identities.

(n, m)_i is the coefficient of x^n y^m in

    f_i(x, y) = (1/(i+1)) * prod_{j<=i} (1 - x/j) / prod_{j<=i+1} (1 - (x+y)/j)

and the constant term of the normalized logarithmic integral S_{n,m}^(i).
Three independent routes are provided: the explicit convolution formula
(default), the two-dimensional recurrence and series coefficient extraction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Tuple

from .algebra import TruncatedSeries, series_rational_expand
from .combinatorics import (
    bell_complete,
    euler_poly_coeffs,
    harmonic,
    legendre_coeffs,
    zt_ones,
    zts_ones,
)
from .errors import DomainError

ROUTES = ("explicit", "recurrence", "gf")
ROW_SUM_ROUTES = ("convolution", "legendre", "bell")


def _check(n, m, i):
    if n < 0 or m < 0 or i < 0:
        raise DomainError(f"tiered coefficients need n, m, i >= 0, got ({n}, {m}, {i})")


@lru_cache(maxsize=None)
def tiered_explicit(n: int, m: int, i: int) -> Fraction:
    _check(n, m, i)
    acc = Fraction(0)
    for k in range(n + 1):
        acc += (-1) ** k * comb(n - k + m, m) * zt_ones(i, k) * zts_ones(i + 1, n - k + m)
    return acc / (i + 1)


@lru_cache(maxsize=None)
def tiered_rec(n: int, m: int, i: int) -> Fraction:
    _check(n, m, i)
    if m == 0:
        return Fraction(1, (i + 1) ** (n + 1))
    if n == 0:
        return zts_ones(i + 1, m) / (i + 1)
    acc = tiered_rec(n - 1, m, i)
    for j in range(i + 1):
        acc += tiered_rec(n, m - 1, j)
    return acc / (i + 1)


@lru_cache(maxsize=None)
def tier_gf(i: int, order: int) -> TruncatedSeries:
    """Truncated expansion of f_i(x, y) up to total degree ``order``."""
    if i < 0:
        raise DomainError("tier must be non-negative")
    s = series_rational_expand(range(1, i + 1), range(1, i + 2), order)
    return s.scale(Fraction(1, i + 1))


def tiered_gf(n: int, m: int, i: int) -> Fraction:
    _check(n, m, i)
    return Fraction(tier_gf(i, n + m).coeff(n, m))


def tiered(n: int, m: int, i: int, route: str = "explicit") -> Fraction:
    """The tiered binomial coefficient (n, m)_i."""
    if route == "explicit":
        return tiered_explicit(n, m, i)
    if route == "recurrence":
        return tiered_rec(n, m, i)
    if route == "gf":
        return tiered_gf(n, m, i)
    raise DomainError(f"unknown route {route!r}; choose from {ROUTES}")


def _binom_ext(p: int, q: int) -> int:
    # C(-1, -1) = 1 and C(p, -1) = 0 for p >= 0
    if q == -1:
        return 1 if p == -1 else 0
    if q < 0 or p < 0:
        return 0
    return comb(p, q)


def tier1_closed(n: int, m: int) -> Fraction:
    """Closed form of the first tier."""
    if n < 0 or m < 0:
        raise DomainError("n, m must be non-negative")
    if n == m == 0:
        # the two boundary binomials would need opposite conventions here
        return Fraction(1, 2)
    return _binom_ext(n + m - 1, m - 1) - Fraction(1, 2 ** (n + m)) * (
        Fraction(comb(n + m, n), 2) - _binom_ext(n + m - 1, n - 1)
    )


def triangle(i: int, max_total: int) -> Iterator[Tuple[int, int, Fraction]]:
    """(n, m, value) for n + m <= max_total, by row N = n + m, then n ascending."""
    for N in range(max_total + 1):
        for n in range(N + 1):
            yield n, N - n, tiered(n, N - n, i)


# ---------------------------------------------------------------------------
# row sums
# ---------------------------------------------------------------------------


def row_sum_direct(N: int, i: int) -> Fraction:
    return sum((tiered(n, N - n, i) for n in range(N + 1)), Fraction(0))


def _row_sum_convolution(N: int, i: int) -> Fraction:
    acc = Fraction(0)
    for l in range(N + 1):
        acc += (-1) ** l * 2 ** (N - l) * zt_ones(i, l) * zts_ones(i + 1, N - l)
    return acc / (i + 1)


def _row_sum_legendre(N: int, i: int) -> Fraction:
    a = legendre_coeffs(i)
    acc = Fraction(0)
    for l in range(i // 2 + 1):
        acc += a[i - 2 * l] / Fraction((2 * l + 1) ** (N + 1))
    return acc * Fraction(2) ** (N - i)


def _row_sum_bell(N: int, i: int) -> Fraction:
    args = [
        factorial(k - 1) * ((2**k - 1) * harmonic(i, k) + Fraction(2**k, (i + 1) ** k))
        for k in range(1, N + 1)
    ]
    return Fraction(bell_complete(args)) / (factorial(N) * (i + 1))


def row_sum(N: int, i: int, route: str = "convolution") -> Fraction:
    """N_i = sum_{n+m=N} (n, m)_i."""
    if N < 0 or i < 0:
        raise DomainError("row sums need N, i >= 0")
    if route == "convolution":
        return _row_sum_convolution(N, i)
    if route == "legendre":
        return _row_sum_legendre(N, i)
    if route == "bell":
        return _row_sum_bell(N, i)
    raise DomainError(f"unknown route {route!r}; choose from {ROW_SUM_ROUTES}")


# ---------------------------------------------------------------------------
# alternating sums (Abel sums: generating function evaluated at -1)
# ---------------------------------------------------------------------------


def alt_sum_over_m(n: int, i: int) -> Fraction:
    """Abel sum of (-1)^m (n, m)_i over m."""
    if n < 0 or i < 0:
        raise DomainError("n, i must be non-negative")
    return Fraction(i + 1, (i + 2) ** (n + 1)) - Fraction(i, (i + 1) ** (n + 1))


def alt_sum_over_n(m: int, i: int) -> Fraction:
    """Abel sum of (-1)^n (n, m)_i over n."""
    if m < 1:
        raise DomainError("alt_sum_over_n needs m >= 1")
    if i < 0:
        raise DomainError("tier must be non-negative")
    return (zts_ones(i + 2, m) - zts_ones(i + 2, m - 1)) / (i + 2)


def _gf_at_minus_one(i: int, order: int, fixed: str) -> list:
    # f_i with one variable set to -1, expanded in the other:
    # prod_{j<=i} (j - x) / prod_{j<=i+1} (j - x - y)
    s = TruncatedSeries.one(order)
    for j in range(1, i + 1):
        if fixed == "y":
            s = s * TruncatedSeries.linear(order, j, -1, 0)
        else:
            s = s.scale(j + 1)
    for j in range(1, i + 2):
        if fixed == "y":
            s = s * TruncatedSeries.linear(order, j + 1, -1, 0).inverse()
        else:
            s = s * TruncatedSeries.linear(order, j + 1, 0, -1).inverse()
    if fixed == "y":
        return [Fraction(s.coeff(a, 0)) for a in range(order + 1)]
    return [Fraction(s.coeff(0, b)) for b in range(order + 1)]


def alt_sum_over_m_gf(n: int, i: int) -> Fraction:
    """[x^n] f_i(x, -1), extracted from the series."""
    return _gf_at_minus_one(i, n, "y")[n]


def alt_sum_over_n_gf(m: int, i: int) -> Fraction:
    """[y^m] f_i(-1, y), extracted from the series."""
    return _gf_at_minus_one(i, m, "x")[m]


# ---------------------------------------------------------------------------
# tier sums, symmetry, Euler relation, complete generating function
# ---------------------------------------------------------------------------


def tier_sum(n: int, m: int, N: int) -> Fraction:
    """sum_{i=0}^N (n, m)_i in closed form."""
    if min(n, m, N) < 0:
        raise DomainError("n, m, N must be non-negative")
    acc = Fraction(0)
    for j in range(n + 1):
        acc += (-1) ** j * comb(n + m + 1 - j, m + 1) * zt_ones(N + 1, j) * zts_ones(N + 1, n + m + 1 - j)
    return acc


def tier_sum_direct(n: int, m: int, N: int) -> Fraction:
    return sum((tiered(n, m, i) for i in range(N + 1)), Fraction(0))


def gen_symmetry_check(n: int, m: int, i: int) -> Tuple[Fraction, Fraction]:
    """((n, m)_i, sum_j C(i, j) (-1)^j (m, n)_j)."""
    rhs = sum((comb(i, j) * (-1) ** j * tiered(m, n, j) for j in range(i + 1)), Fraction(0))
    return tiered(n, m, i), rhs


def euler_central_check(n: int, k: int) -> Tuple[Fraction, Fraction]:
    """((n, n)_{2k+1}, -sum_j e_{2k+1,2j} (n, n)_{2j})."""
    e = euler_poly_coeffs(2 * k + 1)
    rhs = -sum((e[2 * j] * tiered(n, n, 2 * j) for j in range(k + 1)), Fraction(0))
    return tiered(n, n, 2 * k + 1), rhs


@lru_cache(maxsize=None)
def _complete_gf_term(i: int, order: int) -> TruncatedSeries:
    # (1/(1-x-y)) * (1-x)^(rising i) / (2-x-y)^(rising i)
    s = TruncatedSeries.linear(order, 1, -1, -1).inverse()
    for t in range(i):
        s = s * TruncatedSeries.linear(order, 1 + t, -1, 0)
        s = s * TruncatedSeries.linear(order, 2 + t, -1, -1).inverse()
    return s


def complete_gf_check(n: int, m: int, I: int) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """z^0..z^I coefficients of the complete generating function at x^n y^m,
    against (n, m)_0..(n, m)_I."""
    lhs = tuple(tiered(n, m, i) for i in range(I + 1))
    rhs = tuple(Fraction(_complete_gf_term(i, n + m).coeff(n, m)) for i in range(I + 1))
    return lhs, rhs


def complete_gf_without_prefactor(n: int, m: int, i: int) -> Fraction:
    """The z^i coefficient of the hypergeometric series without 1/(1-x-y)."""
    s = _complete_gf_term(i, n + m) * TruncatedSeries.linear(n + m, 1, -1, -1)
    return Fraction(s.coeff(n, m))
