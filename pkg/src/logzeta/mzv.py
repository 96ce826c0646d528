"""Reduction of hook-shaped multiple zeta values zeta(a+1, {1}_b).

The generating function

    sum_{a>=1, b>=0} zeta(a+1, {1}_b) x^a y^(b+1)
        = 1 - exp( sum_{k>=2} (x^k + y^k - (x+y)^k) / k * zeta(k) )

is expanded over the zeta-polynomial ring; every hook of a given weight is
read off one truncated series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from .algebra import TruncatedSeries, ZetaPolynomial, series_exp
from .combinatorics import compositions
from .errors import DomainError


@dataclass(frozen=True)
class HookIndex:
    """The index (a+1, {1}_b)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0:
            raise DomainError(f"hook index needs a >= 1 and b >= 0, got a={self.a}, b={self.b}")

    @property
    def weight(self) -> int:
        return self.a + 1 + self.b

    @property
    def index(self) -> Tuple[int, ...]:
        return (self.a + 1,) + (1,) * self.b


@lru_cache(maxsize=None)
def _hooks_of_weight(w: int) -> Dict[Tuple[int, int], ZetaPolynomial]:
    # only k <= w contributes to total degree w
    arg = {}
    for k in range(2, w + 1):
        z = ZetaPolynomial.zeta(k)
        for a in range(1, k):
            # x^k + y^k - (x+y)^k leaves -C(k,a) x^a y^(k-a) for 0 < a < k
            arg[(a, k - a)] = z.scale(Fraction(-comb(k, a), k))
    e = series_exp(TruncatedSeries(w, arg))
    out = {}
    for a in range(1, w):
        b = w - 1 - a
        out[(a, b)] = -ZetaPolynomial.lift(e.coeff(a, b + 1))
    return out


def zeta_hook(a: int, b: int = None) -> ZetaPolynomial:
    """zeta(a+1, {1}_b) as a polynomial in single zeta values.

    Accepts either ``zeta_hook(a, b)`` or ``zeta_hook(HookIndex(a, b))``.
    """
    if isinstance(a, HookIndex):
        h = a
    else:
        h = HookIndex(a, b)
    return _hooks_of_weight(h.weight)[(h.a, h.b)]


def mzv_leading(first: int, ones: int) -> ZetaPolynomial:
    """zeta(first, {1}_ones) for first >= 2."""
    if first < 2:
        raise DomainError(f"zeta({first}, ...) diverges")
    return zeta_hook(first - 1, ones)


def kaneko_sakata_terms(m: int, n: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """Signed indices whose MZVs sum to zeta(m+1, {1}_(n-1))."""
    if m < 1 or n < 1:
        raise DomainError("Kaneko-Sakata expansion needs m, n >= 1")
    out = []
    for depth in range(1, min(m, n) + 1):
        sign = 1 if depth % 2 else -1
        for cm in compositions(m, depth):
            for cn in compositions(n, depth):
                out.append((sign, tuple(x + y for x, y in zip(cm, cn))))
    return out
