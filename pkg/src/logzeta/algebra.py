"""Exact scalars, the free polynomial ring in zeta values, and truncated
bivariate power series.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`ZetaPolynomial` is the ring Q[zeta(2), zeta(3), ...]
with the generators treated as algebraically independent symbols, so no
relation such as zeta(2)^2 = 5/2 zeta(4) is ever applied.
"""

from __future__ import annotations

import operator
from math import comb
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import DomainError

Rational = Fraction

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` in {add, sub, mul, div} to two rationals."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise DomainError(f"unknown rational operation {op!r}") from None
    try:
        return Fraction(fn(Fraction(a), Fraction(b)))
    except ZeroDivisionError:
        raise DomainError("division by zero") from None


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a rational number: {text!r}") from None


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# zeta monomials and polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZetaMonomial:
    """A product zeta(k1)^e1 * zeta(k2)^e2 * ... with k1 < k2 < ...

    ``powers`` is a tuple of ``(k, e)`` pairs with ``k >= 2`` and ``e >= 1``;
    the empty tuple is the monomial 1.
    """

    powers: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for k, e in self.powers:
            if k <= last or e < 1:
                raise DomainError(f"malformed zeta monomial {self.powers!r}")
            last = k

    @classmethod
    def from_map(cls, exponents: Mapping[int, int]) -> "ZetaMonomial":
        return cls(tuple(sorted((int(k), int(e)) for k, e in exponents.items() if e)))

    @property
    def weight(self) -> int:
        return sum(k * e for k, e in self.powers)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    def sort_key(self):
        return (self.weight, self.powers)

    def __mul__(self, other: "ZetaMonomial") -> "ZetaMonomial":
        if not self.powers:
            return other
        if not other.powers:
            return self
        exps = dict(self.powers)
        for k, e in other.powers:
            exps[k] = exps.get(k, 0) + e
        return ZetaMonomial(tuple(sorted(exps.items())))

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(f"zeta({k})" if e == 1 else f"zeta({k})^{e}" for k, e in self.powers)


ONE_MONOMIAL = ZetaMonomial()

Scalar = Union[int, Fraction]


class ZetaPolynomial:
    """Immutable polynomial in zeta(2), zeta(3), ... with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ZetaMonomial, Scalar] | None = None):
        clean: Dict[ZetaMonomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[mono] = c
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "ZetaPolynomial":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def zeta(cls, k: int, power: int = 1) -> "ZetaPolynomial":
        if k < 2:
            raise DomainError(f"zeta({k}) is not a generator")
        return cls({ZetaMonomial(((k, power),)): 1})

    @staticmethod
    def lift(x) -> "ZetaPolynomial":
        if isinstance(x, ZetaPolynomial):
            return x
        return ZetaPolynomial.const(x)

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> Dict[ZetaMonomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[ZetaMonomial, Fraction]]:
        """Terms in canonical order: by weight, then lexicographically."""
        return iter(sorted(self._terms.items(), key=lambda t: t[0].sort_key()))

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def is_constant(self) -> bool:
        return all(m is ONE_MONOMIAL or not m.powers for m in self._terms)

    def weights(self) -> set:
        return {m.weight for m in self._terms}

    def max_weight(self) -> int:
        return max(self.weights(), default=0)

    def homogeneous_part(self, weight: int) -> "ZetaPolynomial":
        return ZetaPolynomial({m: c for m, c in self._terms.items() if m.weight == weight})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (ZetaPolynomial, int, Fraction)):
            return NotImplemented
        other = ZetaPolynomial.lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return ZetaPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return ZetaPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (ZetaPolynomial, int, Fraction)):
            return NotImplemented
        return self + (-ZetaPolynomial.lift(other))

    def __rsub__(self, other):
        return ZetaPolynomial.lift(other) - self

    def scale(self, c: Scalar) -> "ZetaPolynomial":
        c = Fraction(c)
        if not c:
            return ZetaPolynomial()
        return ZetaPolynomial({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ZetaPolynomial):
            return NotImplemented
        out: Dict[ZetaMonomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return ZetaPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DomainError("division by zero")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative powers are not ring elements")
        out = ZetaPolynomial.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZetaPolynomial.const(other)
        if not isinstance(other, ZetaPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # rendering ----------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self.items()):
            neg = c < 0
            a = -c if neg else c
            if not mono.powers:
                body = format_rational(a)
            elif a == 1:
                body = str(mono)
            else:
                body = f"{format_rational(a)}*{mono}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ZetaPolynomial({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": f"{c.numerator}/{c.denominator}", "mono": [[k, e] for k, e in m.powers]}
                for m, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ZetaPolynomial":
        terms: Dict[ZetaMonomial, Fraction] = {}
        for t in data["terms"]:
            mono = ZetaMonomial(tuple((int(k), int(e)) for k, e in t["mono"]))
            terms[mono] = terms.get(mono, 0) + parse_rational(t["coeff"])
        return cls(terms)


def zp_arith(p, q, op: str) -> ZetaPolynomial:
    """Ring operations; for ``scale`` the second argument is a rational."""
    p = ZetaPolynomial.lift(p)
    if op == "add":
        return p + ZetaPolynomial.lift(q)
    if op == "mul":
        return p * ZetaPolynomial.lift(q)
    if op == "scale":
        return p.scale(q)
    raise DomainError(f"unknown polynomial operation {op!r}")


def zeta(k: int) -> ZetaPolynomial:
    return ZetaPolynomial.zeta(k)


# ---------------------------------------------------------------------------
# truncated bivariate series
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Power series in x, y truncated at total degree ``order``.

    Coefficients may be rationals or :class:`ZetaPolynomial` values.
    """

    __slots__ = ("order", "_c")

    def __init__(self, order: int, coeffs: Mapping[Tuple[int, int], object] | None = None):
        if order < 0:
            raise DomainError("truncation order must be non-negative")
        self.order = order
        c = {}
        if coeffs:
            for (a, b), v in coeffs.items():
                if a < 0 or b < 0:
                    raise DomainError("negative exponent")
                if a + b <= order and v:
                    c[(a, b)] = v
        self._c = c

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, {(0, 0): Fraction(1)})

    @classmethod
    def linear(cls, order: int, c0=0, cx=0, cy=0) -> "TruncatedSeries":
        return cls(order, {(0, 0): c0, (1, 0): cx, (0, 1): cy})

    def coeff(self, a: int, b: int):
        if a < 0 or b < 0 or a + b > self.order:
            raise DomainError(f"coefficient x^{a} y^{b} lies beyond truncation order {self.order}")
        return self._c.get((a, b), Fraction(0))

    def items(self):
        return sorted(self._c.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0]))

    def __bool__(self):
        return bool(self._c)

    def _same_order(self, other):
        if isinstance(other, TruncatedSeries):
            return min(self.order, other.order)
        return self.order

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries(self.order, {(0, 0): other})
        d = self._same_order(other)
        out = {}
        for key, v in list(self._c.items()) + list(other._c.items()):
            if key[0] + key[1] <= d:
                out[key] = out[key] + v if key in out else v
        return TruncatedSeries(d, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.order, {k: v * c for k, v in self._c.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        d = self._same_order(other)
        out = {}
        for (a1, b1), v1 in self._c.items():
            room = d - a1 - b1
            if room < 0:
                continue
            for (a2, b2), v2 in other._c.items():
                if a2 + b2 > room:
                    continue
                key = (a1 + a2, b1 + b2)
                prod = v1 * v2
                out[key] = out[key] + prod if key in out else prod
        return TruncatedSeries(d, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant coefficient must be a nonzero rational."""
        c0 = self._c.get((0, 0), 0)
        if isinstance(c0, ZetaPolynomial):
            if not c0.is_constant():
                raise DomainError("constant coefficient is not invertible")
            c0 = c0.constant_term()
        if not c0:
            raise DomainError("series with zero constant term is not invertible")
        inv0 = 1 / Fraction(c0)
        # 1/(c0 (1 + u)) = inv0 * sum (-u)^j
        u = (self - TruncatedSeries(self.order, {(0, 0): c0})).scale(-inv0)
        out = TruncatedSeries.one(self.order)
        power = TruncatedSeries.one(self.order)
        for _ in range(self.order):
            power = power * u
            if not power:
                break
            out = out + power
        return out.scale(inv0)

    def __repr__(self):
        body = ", ".join(f"x^{a}y^{b}: {v}" for (a, b), v in self.items())
        return f"TruncatedSeries(order={self.order}, {{{body}}})"


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) as the finite sum of s^j/j!, for s without constant term."""
    if s._c.get((0, 0)):
        raise DomainError("series_exp requires a zero constant coefficient")
    out = TruncatedSeries.one(s.order)
    power = TruncatedSeries.one(s.order)
    fact = 1
    for j in range(1, s.order + 1):
        power = power * s
        if not power:
            break
        fact *= j
        out = out + power.scale(Fraction(1, fact))
    return out


def series_coeff(s: TruncatedSeries, a: int, b: int):
    return s.coeff(a, b)


def series_rational_expand(
    num_roots: Sequence, den_roots: Sequence, order: int
) -> TruncatedSeries:
    """Expand prod(1 - x/j for j in num_roots) / prod(1 - (x+y)/j for j in den_roots)."""
    out = TruncatedSeries.one(order)
    for j in num_roots:
        j = Fraction(j)
        if not j:
            raise DomainError("zero root in numerator product")
        out = out * TruncatedSeries.linear(order, 1, -1 / j, 0)
    for j in den_roots:
        j = Fraction(j)
        if not j:
            raise DomainError("zero root in denominator product")
        # 1/(1 - w/j) with w = x + y
        inv = {}
        r = 1 / j
        for a in range(order + 1):
            for b in range(order + 1 - a):
                inv[(a, b)] = comb(a + b, a) * r ** (a + b)
        out = out * TruncatedSeries(order, inv)
    return out


def univariate_coeffs(s: TruncatedSeries, var: str = "x") -> list:
    """Coefficients along one axis of a series in a single variable."""
    if var == "x":
        return [s.coeff(a, 0) for a in range(s.order + 1)]
    return [s.coeff(0, b) for b in range(s.order + 1)]


def as_zeta_polynomial(x) -> ZetaPolynomial:
    return ZetaPolynomial.lift(x)


def sum_zp(values: Iterable) -> ZetaPolynomial:
    out: Dict[ZetaMonomial, Fraction] = {}
    for v in values:
        v = ZetaPolynomial.lift(v)
        for m, c in v._terms.items():
            out[m] = out.get(m, 0) + c
    return ZetaPolynomial(out)
