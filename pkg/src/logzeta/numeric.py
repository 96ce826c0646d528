"""Independent numeric oracles.

* ``quad_logint``: tanh-sinh quadrature of the defining integral, split at 1/2
* ``zeta_numeric``: Euler-Maclaurin summation of zeta(k)
* ``mzv_numeric``: Hoelder convolution at 1/2 of the iterated-integral form
* ``eval_zeta_polynomial``: substitution with an error bound

All routines work with ``prec + GUARD`` decimal digits and return a
``NumericValue`` carrying an a-posteriori error estimate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Sequence, Tuple

import mpmath
from mpmath import mp, mpf

from .algebra import ZetaPolynomial
from .combinatorics import bernoulli
from .errors import AccuracyError, DivergentError, DomainError

GUARD = 10
MAX_LEVEL = 12


def working_dps(prec: int) -> int:
    if prec < 1:
        raise DomainError("precision must be a positive number of digits")
    return prec + GUARD


@dataclass(frozen=True)
class NumericValue:
    """A real approximation with requested digits and an error estimate."""

    value: mpf
    prec: int
    error: mpf = field(default_factory=lambda: mpf(0))

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return mpmath.nstr(self.value, self.prec)

    def to_json(self) -> dict:
        return {
            "value": mpmath.nstr(self.value, self.prec),
            "prec": self.prec,
            "error": mpmath.nstr(self.error, 3),
        }


@dataclass(frozen=True)
class ComparisonReport:
    exact_rendered: NumericValue
    oracle: NumericValue
    relative_error: float
    passed: bool
    tolerance: float
    label: str = ""

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "exact": self.exact_rendered.to_json(),
            "oracle": self.oracle.to_json(),
            "relative_error": self.relative_error,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


# ---------------------------------------------------------------------------
# zeta values
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def zeta_numeric(k: int, prec: int = 30) -> NumericValue:
    """zeta(k), k >= 2, by Euler-Maclaurin summation with cutoff N."""
    if k < 2:
        raise DivergentError(f"zeta({k}) diverges")
    wp = working_dps(prec)
    with mp.workdps(wp):
        eps = mpf(10) ** (-wp)
        N = max(10, wp)
        s = mpmath.fsum(mpf(n) ** (-k) for n in range(1, N))
        s += mpf(N) ** (1 - k) / (k - 1) + mpf(N) ** (-k) / 2
        # B_{2j}/(2j)! * k(k+1)...(k+2j-2) * N^(-k-2j+1)
        rising = mpf(k)
        prev = None
        for j in range(1, 4 * wp):
            b = bernoulli(2 * j)
            term = mpf(b.numerator) / b.denominator / factorial(2 * j) * rising * mpf(N) ** (-k - 2 * j + 1)
            if prev is not None and abs(term) > abs(prev):
                raise AccuracyError(f"Euler-Maclaurin series for zeta({k}) stopped converging", best=s)
            s += term
            if abs(term) < eps * abs(s):
                # the remainder is bounded by the first omitted term, itself below |term|
                return NumericValue(s, prec, abs(term))
            rising *= (k + 2 * j - 1) * (k + 2 * j)
            prev = term
    raise AccuracyError(f"zeta({k}) did not converge", best=s)


def _index_to_word(index: Sequence[int]) -> Tuple[int, ...]:
    word = []
    for s in index:
        word.extend([0] * (s - 1))
        word.append(1)
    return tuple(word)


def _word_to_index(word: Tuple[int, ...]) -> Tuple[int, ...]:
    out, run = [], 0
    for letter in word:
        run += 1
        if letter == 1:
            out.append(run)
            run = 0
    assert run == 0, "word must end in 1"
    return tuple(out)


def _dual(word: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(1 - a for a in reversed(word))


@lru_cache(maxsize=None)
def _polylog_half(word: Tuple[int, ...], wp: int) -> mpf:
    # Li_{s_1..s_d}(1/2) = sum_{n_1 > ... > n_d} 2^-n_1 / prod n_j^s_j
    if not word:
        return mpf(1)
    index = _word_to_index(word)
    d = len(index)
    with mp.workdps(wp + 5):
        # tail after N: 2^-N (1 + ln N)^(d-1) * 2 bounds the omitted terms
        N = 8
        while mpf(2) ** (-N) * (2 + mpmath.log(N)) ** d >= mpf(10) ** (-wp - 2):
            N += 8
        inner = [mpf(1) / mpf(n) ** index[-1] for n in range(1, N + 1)]
        for s in reversed(index[:-1]):
            acc = mpf(0)
            nxt = []
            for n in range(1, N + 1):
                nxt.append(acc / mpf(n) ** s)
                acc += inner[n - 1]
            inner = nxt
        half = mpf(1) / 2
        return mpmath.fsum(inner[n - 1] * half**n for n in range(1, N + 1))


@lru_cache(maxsize=None)
def mzv_numeric(index: Tuple[int, ...], prec: int = 30) -> NumericValue:
    """zeta(s_1, ..., s_k) for an admissible index.

    The iterated integral over [0, 1] is split at 1/2; the part over [1/2, 1]
    becomes, after x -> 1 - x, the dual word evaluated at 1/2. Every piece is
    a multiple polylogarithm at 1/2, summed with a 2^-N tail.
    """
    index = tuple(int(s) for s in index)
    if not index or any(s < 1 for s in index):
        raise DomainError(f"invalid MZV index {index}")
    if index[0] < 2:
        raise DivergentError(f"inadmissible index {index}: first entry must be >= 2")
    wp = working_dps(prec)
    word = _index_to_word(index)
    with mp.workdps(wp):
        total = mpmath.fsum(
            _polylog_half(_dual(word[:j]), wp) * _polylog_half(word[j:], wp)
            for j in range(len(word) + 1)
        )
        err = (len(word) + 1) * mpf(10) ** (-wp) * max(1, abs(total))
    return NumericValue(total, prec, err)


def eval_zeta_polynomial(p, prec: int = 30) -> NumericValue:
    """Numeric value of a zeta polynomial (or rational) with an error bound."""
    p = ZetaPolynomial.lift(p)
    wp = working_dps(prec)
    with mp.workdps(wp):
        total = mpf(0)
        err = mpf(0)
        for mono, c in p.items():
            cval = mpf(c.numerator) / c.denominator
            val = cval
            rel = mpf(0)
            for k, e in mono.powers:
                z = zeta_numeric(k, prec)
                val *= z.value**e
                rel += e * z.error / z.value
            total += val
            # first-order propagation plus a rounding allowance
            err += abs(val) * (rel * mpf("1.01") + mpf(10) ** (-wp))
    return NumericValue(total, prec, err)


def compare(exact, oracle: NumericValue, tol: float, label: str = "") -> ComparisonReport:
    """Relative comparison (absolute when the exact value is zero)."""
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    rendered = eval_zeta_polynomial(exact, oracle.prec)
    with mp.workdps(working_dps(oracle.prec)):
        diff = abs(rendered.value - oracle.value)
        scale = abs(rendered.value)
        if scale <= rendered.error:
            rel = diff
        else:
            rel = diff / scale
        rel = float(rel)
    return ComparisonReport(rendered, oracle, rel, rel <= tol, tol, label)


# ---------------------------------------------------------------------------
# tanh-sinh quadrature on [0, 1/2], clustered at both ends
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _nodes(level: int, wp: int) -> tuple:
    """New nodes of a level as tuples (weight, x, 1 - x, ln x, ln(1 - x)).

    x = a / (1 + exp(-2y)), y = (pi/2) sinh t, a = 1/2, step h = 2^-level;
    level 0 holds all t = j, later levels only the odd multiples of h.
    """
    with mp.workdps(wp + 10):
        a = mpf(1) / 2
        h = mpf(2) ** (-level)
        halfpi = mp.pi / 2
        # beyond |y| = ymax the weight is below 10^-(2 wp) even after
        # multiplying by a power of ln x up to the eighth
        ymax = (2 * wp + 10) * mpmath.log(10) / 2 + 8 * mpmath.log(wp)
        tmax = mpmath.asinh(ymax / halfpi)
        out = []
        step = 1 if level == 0 else 2
        j = 0 if level == 0 else 1
        while True:
            t = j * h
            if t > tmax:
                break
            for sgn in ((1,) if j == 0 else (1, -1)):
                tt = sgn * t
                y = halfpi * mpmath.sinh(tt)
                ch = mpmath.cosh(y)
                w = a * halfpi * mpmath.cosh(tt) / (2 * ch * ch)
                if y < 0:
                    e = mpmath.exp(2 * y)
                    x = a * e / (1 + e)
                else:
                    x = a / (1 + mpmath.exp(-2 * y))
                out.append((w, x, 1 - x, mpmath.log(x), mpmath.log1p(-x)))
            j += step
        return tuple(out)


def _check_convergent(n: int, m: int, i: int):
    if n < 0 or m < 0:
        raise DomainError("n, m must be non-negative")
    if i == -1 and m == 0:
        raise DivergentError("the integral diverges at x = 0 for i = -1, m = 0")
    if i < -1 and -i > m:
        raise DivergentError(f"the integral diverges at x = 0 for i = {i}, m = {m}")


def quad_logint(n: int, m: int, i: int, prec: int = 30) -> NumericValue:
    """int_0^1 x^i ln^n(x) ln^m(1 - x) dx by tanh-sinh quadrature.

    The interval is split at 1/2. On the right half u = 1 - x moves the
    ln(1 - x) singularity to the origin, so both pieces share one node set.
    Levels halve the step until two successive estimates agree.
    """
    _check_convergent(n, m, i)
    wp = working_dps(prec)
    with mp.workdps(wp + 5):
        tol = mpf(10) ** (-prec - 2)
        acc = mpf(0)
        prev = None
        for level in range(MAX_LEVEL + 1):
            part = mpf(0)
            for w, x, omx, lx, l1x in _nodes(level, wp):
                left = x**i * lx**n * l1x**m
                right = omx**i * l1x**n * lx**m
                part += w * (left + right)
            acc += part
            est = acc * mpf(2) ** (-level)
            if prev is not None:
                diff = abs(est - prev)
                if diff <= tol * max(abs(est), mpf(10) ** (-prec)):
                    return NumericValue(est, prec, diff)
            prev = est
    raise AccuracyError(f"quadrature for ({n}, {m}, {i}) did not converge", best=NumericValue(prev, prec, mpf("inf")))
