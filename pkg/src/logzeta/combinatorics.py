"""Exact combinatorial scalars.

Stirling cycle numbers, generalized harmonic numbers, truncated multiple zeta
(star) values with all-ones indices, Bell polynomials, Bernoulli numbers,
Euler and Legendre polynomial coefficients, the binomial transform and
falling factorials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Sequence

from .errors import DomainError


@lru_cache(maxsize=None)
def stirling_cycle(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind [n, k]."""
    if n < 0 or k < 0:
        raise DomainError("Stirling numbers need non-negative arguments")
    if k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return stirling_cycle(n - 1, k - 1) + (n - 1) * stirling_cycle(n - 1, k)


def signed_stirling(n: int, k: int) -> int:
    return (-1) ** (n - k) * stirling_cycle(n, k)


_HARMONIC: dict = {}


def harmonic(n: int, r: int = 1) -> Fraction:
    """H_n^(r) = sum_{j=1}^n j^-r."""
    if r < 1:
        raise DomainError("harmonic order must be >= 1")
    if n <= 0:
        return Fraction(0)
    table = _HARMONIC.setdefault(r, [Fraction(0)])
    for j in range(len(table), n + 1):
        table.append(table[-1] + Fraction(1, j**r))
    return table[n]


@lru_cache(maxsize=None)
def zt_ones(n: int, k: int) -> Fraction:
    """Truncated multiple zeta value zeta_n({1}_k) via Stirling numbers."""
    if n < 0 or k < 0:
        raise DomainError("zt_ones needs non-negative arguments")
    if k == 0:
        return Fraction(1)
    if k > n:
        return Fraction(0)
    return Fraction(stirling_cycle(n + 1, k + 1), factorial(n))


def zt_ones_bell(n: int, k: int) -> Fraction:
    """zeta_n({1}_k) through the complete Bell polynomial in harmonic numbers."""
    args = [-factorial(j - 1) * harmonic(n, j) for j in range(1, k + 1)]
    return Fraction((-1) ** k, factorial(k)) * bell_complete(args)


@lru_cache(maxsize=None)
def zts_ones(n: int, k: int) -> Fraction:
    """Truncated zeta star value zeta*_n({1}_k) via the alternating binomial sum."""
    if n < 0 or k < 0:
        raise DomainError("zts_ones needs non-negative arguments")
    if k == 0:
        return Fraction(1)
    return sum(
        (Fraction(comb(n, j) * (-1) ** (j - 1), j**k) for j in range(1, n + 1)),
        Fraction(0),
    )


def zts_ones_gf(n: int, k: int) -> Fraction:
    """zeta*_n({1}_k) as [q^k] of prod_{j<=n} 1/(1 - q/j)."""
    # coefficients of the product, truncated at q^k
    coeffs = [Fraction(1)] + [Fraction(0)] * k
    for j in range(1, n + 1):
        r = Fraction(1, j)
        # multiply by sum_t (q/j)^t: running prefix recurrence
        for t in range(1, k + 1):
            coeffs[t] += r * coeffs[t - 1]
    return coeffs[k]


def bell_complete(args: Sequence):
    """Complete Bell polynomial B_s(x_1, ..., x_s) with s = len(args)."""
    s = len(args)
    B = [None] * (s + 1)
    B[0] = 1
    for n in range(s):
        acc = 0
        for i in range(n + 1):
            term = B[n - i] * args[i]
            acc = acc + term * comb(n, i)
        B[n + 1] = acc
    return B[s]


def bell_complete_all(args: Sequence) -> list:
    """[B_0, B_1, ..., B_s] for s = len(args)."""
    s = len(args)
    B = [1]
    for n in range(s):
        acc = 0
        for i in range(n + 1):
            acc = acc + B[n - i] * args[i] * comb(n, i)
        B.append(acc)
    return B


def bell_partial(s: int, j: int, args: Sequence):
    """Incomplete Bell polynomial B_{s,j}(x_1, ..., x_{s-j+1})."""
    if not 1 <= j <= s:
        raise DomainError(f"partial Bell polynomial needs 1 <= j <= s, got s={s}, j={j}")
    if len(args) < s - j + 1:
        raise DomainError("too few arguments for the partial Bell polynomial")
    # B_{s,j} never reads past x_{s-j+1}; pad so the full table can be built
    padded = list(args[: s - j + 1]) + [0] * (j - 1)
    return _bell_partial_table(s, padded)[s][j]


def _bell_partial_table(s: int, args: Sequence) -> list:
    # T[n][k] = B_{n,k}; B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i,k-1}
    T = [[0] * (s + 1) for _ in range(s + 1)]
    T[0][0] = 1
    for n in range(1, s + 1):
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, n - k + 2):
                prev = T[n - i][k - 1]
                if isinstance(prev, int) and prev == 0:
                    continue
                acc = acc + prev * args[i - 1] * comb(n - 1, i - 1)
            T[n][k] = acc
    return T


def cumulants_from_moment_list(mu: Sequence) -> list:
    """kappa_1..kappa_s from mu_1..mu_s (mu_0 = 1 implicit)."""
    s = len(mu)
    T = _bell_partial_table(s, mu)
    out = []
    for n in range(1, s + 1):
        acc = 0
        for j in range(1, n + 1):
            acc = acc + T[n][j] * ((-1) ** (j - 1) * factorial(j - 1))
        out.append(acc)
    return out


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number with B_1 = -1/2."""
    if n < 0:
        raise DomainError("Bernoulli index must be non-negative")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    # sum_{k=0}^{n} C(n+1, k) B_k = 0
    acc = sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0))
    return -acc / (n + 1)


@lru_cache(maxsize=None)
def euler_poly_coeffs(m: int) -> tuple:
    """Coefficients e_{m,0..m} of the Euler polynomial E_m(x)."""
    if m < 0:
        raise DomainError("Euler polynomial degree must be non-negative")
    out = []
    for j in range(m + 1):
        k = m + 1 - j
        out.append(Fraction(2, m + 1) * comb(m + 1, j) * (1 - 2**k) * bernoulli(k))
    return tuple(out)


@lru_cache(maxsize=None)
def legendre_coeffs(n: int) -> tuple:
    """Coefficients a_{n,0..n} of the Legendre polynomial P_n(x)."""
    if n < 0:
        raise DomainError("Legendre degree must be non-negative")
    out = [Fraction(0)] * (n + 1)
    for j in range(n // 2 + 1):
        out[n - 2 * j] = Fraction((-1) ** j * comb(n, j) * comb(2 * n - 2 * j, n), 2**n)
    return tuple(out)


def binomial_transform(a: Sequence) -> List[Fraction]:
    """s_i = sum_k (-1)^k C(i, k) a_k."""
    return [
        sum((Fraction((-1) ** k * comb(i, k)) * a[k] for k in range(i + 1)), Fraction(0))
        for i in range(len(a))
    ]


def falling_factorial(x, n: int):
    """x(x-1)...(x-n+1); for n < 0 the reciprocal 1/((x+|n|)^{underline |n|})."""
    if n >= 0:
        out = 1
        for t in range(n):
            out = out * (x - t)
        return out
    denom = falling_factorial(x - n, -n)
    if not denom:
        raise DomainError("falling factorial with negative index hits a zero divisor")
    return Fraction(1) / Fraction(denom)


def rising_factorial(x, n: int):
    out = 1
    for t in range(n):
        out = out * (x + t)
    return out


def multinomial(*ks: int) -> int:
    out = factorial(sum(ks))
    for k in ks:
        out //= factorial(k)
    return out


def compositions(total: int, parts: int):
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
