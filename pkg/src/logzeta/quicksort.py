"""Moments, constant terms and cumulants of the Quicksort limit law Z, the
exact mean of the comparison count C_n, and a Monte Carlo simulator.

Z satisfies Z = U Z_1 + (1-U) Z_2 + C(U) in distribution, with the entropy
toll C(x) = 1 + 2x ln x + 2(1-x) ln(1-x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Sequence, Tuple

import numpy as np

from .algebra import ZetaPolynomial, sum_zp
from .combinatorics import (
    bell_complete_all,
    cumulants_from_moment_list,
    harmonic,
    multinomial,
)
from .errors import ConsistencyError, DomainError
from .logint import i_exact
from .tiered import tiered

CT_ROUTES = ("projection", "recurrence")


@dataclass(frozen=True)
class MomentTable:
    moments: Tuple[ZetaPolynomial, ...]

    def __post_init__(self):
        mu = tuple(ZetaPolynomial.lift(x) for x in self.moments)
        object.__setattr__(self, "moments", mu)
        if mu and mu[0] != 1:
            raise DomainError("mu_0 must be 1")
        if len(mu) > 1 and mu[1] != 0:
            raise DomainError("mu_1 must be 0 for the centered limit law")

    def __len__(self):
        return len(self.moments)

    def __getitem__(self, s):
        return self.moments[s]


@dataclass(frozen=True)
class CumulantTable:
    """kappa_1, kappa_2, ... (index s holds kappa_(s+1))."""

    cumulants: Tuple[ZetaPolynomial, ...]

    def kappa(self, s: int) -> ZetaPolynomial:
        if s < 1 or s > len(self.cumulants):
            raise DomainError(f"kappa_{s} not in table")
        return self.cumulants[s - 1]


def _compositions3(s: int):
    for k1 in range(s + 1):
        for k2 in range(s + 1 - k1):
            yield k1, k2, s - k1 - k2


@lru_cache(maxsize=None)
def entropy_integral(k1: int, k2: int, k3: int) -> ZetaPolynomial:
    """int_0^1 x^k1 (1-x)^k2 C(x)^k3 dx."""
    if min(k1, k2, k3) < 0:
        raise DomainError("exponents must be non-negative")
    parts = []
    for n, m, p in _compositions3(k3):
        w = multinomial(n, m, p) * 2 ** (n + m)
        for j in range(k2 + m + 1):
            c = w * comb(k2 + m, j) * (-1) ** j
            parts.append(i_exact(n, m, k1 + n + j).scale(c))
    return sum_zp(parts)


@lru_cache(maxsize=None)
def qs_moment(s: int) -> ZetaPolynomial:
    """mu_s = E(Z^s)."""
    if s < 0:
        raise DomainError("moment order must be non-negative")
    if s == 0:
        return ZetaPolynomial.const(1)
    if s == 1:
        return ZetaPolynomial.const(0)
    parts = []
    for k1, k2, k3 in _compositions3(s):
        if k1 == s or k2 == s:
            continue
        a, b = qs_moment(k1), qs_moment(k2)
        if not a or not b:
            continue
        parts.append((a * b * entropy_integral(k1, k2, k3)).scale(multinomial(k1, k2, k3)))
    return sum_zp(parts).scale(Fraction(s + 1, s - 1))


def moment_table(s: int) -> MomentTable:
    return MomentTable(tuple(qs_moment(k) for k in range(s + 1)))


@lru_cache(maxsize=None)
def _ct_recurrence(s: int) -> Fraction:
    if s == 0:
        return Fraction(1)
    if s == 1:
        return Fraction(0)
    acc = Fraction(0)
    for k1, k2, k3 in _compositions3(s):
        if k1 == s or k2 == s:
            continue
        cc = _ct_recurrence(k1) * _ct_recurrence(k2)
        if not cc:
            continue
        inner = Fraction(0)
        for n, m, p in _compositions3(k3):
            w = multinomial(n, m, p) * 2 ** (n + m) * (-1) ** (n + m) * factorial(n) * factorial(m)
            for j in range(m + k2 + 1):
                inner += w * comb(m + k2, j) * (-1) ** j * tiered(n, m, n + k1 + j)
        acc += multinomial(k1, k2, k3) * cc * inner
    return acc * Fraction(s + 1, s - 1)


def qs_constant_term(s: int, route: str = "projection") -> Fraction:
    """c_s, the constant term of mu_s."""
    if s < 0:
        raise DomainError("moment order must be non-negative")
    if route == "projection":
        return qs_moment(s).constant_term()
    if route == "recurrence":
        return _ct_recurrence(s)
    raise DomainError(f"unknown route {route!r}; choose from {CT_ROUTES}")


@lru_cache(maxsize=None)
def _normalized_recurrence(s: int) -> Fraction:
    if s == 0:
        return Fraction(1)
    if s == 1:
        return Fraction(0)
    acc = Fraction(0)
    for k1, k2, k3 in _compositions3(s):
        if k1 == s or k2 == s:
            continue
        cc = _normalized_recurrence(k1) * _normalized_recurrence(k2)
        if not cc:
            continue
        inner = Fraction(0)
        for n, m, p in _compositions3(k3):
            w = Fraction((-1) ** p, factorial(p) * 2**p)
            for j in range(m + k2 + 1):
                inner += w * comb(m + k2, j) * (-1) ** j * tiered(n, m, n + k1 + j)
        acc += cc * inner
    return acc * Fraction(s + 1, s - 1)


def qs_normalized_ct(s: int, route: str = "definition") -> Fraction:
    """c~_s = (-1)^s c_s / (s! 2^s), by definition or by its own recurrence."""
    if s < 0:
        raise DomainError("moment order must be non-negative")
    if route == "definition":
        return Fraction((-1) ** s, factorial(s) * 2**s) * qs_constant_term(s, "recurrence")
    if route == "recurrence":
        return _normalized_recurrence(s)
    raise DomainError(f"unknown route {route!r}; choose from ('definition', 'recurrence')")


def cumulants_from_moments(mt: MomentTable) -> CumulantTable:
    if not isinstance(mt, MomentTable):
        mt = MomentTable(tuple(mt))
    return CumulantTable(tuple(ZetaPolynomial.lift(k) for k in cumulants_from_moment_list(mt.moments[1:])))


def moments_from_cumulants(ct: CumulantTable) -> MomentTable:
    B = bell_complete_all(list(ct.cumulants))
    return MomentTable(tuple(ZetaPolynomial.lift(b) for b in B))


def qs_cumulant(s: int) -> ZetaPolynomial:
    return cumulants_from_moments(moment_table(s)).kappa(s)


def gumbel_cumulants(s: int) -> ZetaPolynomial:
    """kappa_s(G) for G = -2(X - gamma), X standard Gumbel."""
    if s < 1:
        raise DomainError("cumulant order must be >= 1")
    if s == 1:
        return ZetaPolynomial.const(0)
    return ZetaPolynomial.zeta(s).scale((-1) ** s * 2**s * factorial(s - 1))


def shifted_cumulants(s: int) -> Fraction:
    """a_s = kappa_s(Z + G), from the constant terms c_1..c_s.

    Cross-checked against kappa_s(Z) + kappa_s(G) computed in the zeta ring;
    any surviving zeta monomial raises ConsistencyError.
    """
    if s < 1:
        raise DomainError("cumulant order must be >= 1")
    cs = [qs_constant_term(k, "recurrence") for k in range(1, s + 1)]
    a = Fraction(cumulants_from_moment_list(cs)[s - 1])
    total = qs_cumulant(s) + gumbel_cumulants(s)
    if not total.is_constant() or total.constant_term() != a:
        raise ConsistencyError(f"kappa_{s}(Z) + kappa_{s}(G) = {total} does not reduce to a_{s} = {a}")
    return a


def hennequin_remainder(s: int) -> ZetaPolynomial:
    """kappa_s(Z) - (-1)^(s+1) 2^s (s-1)! zeta(s); rational for s >= 2."""
    if s < 2:
        raise DomainError("needs s >= 2")
    return qs_cumulant(s) - ZetaPolynomial.zeta(s).scale((-1) ** (s + 1) * 2**s * factorial(s - 1))


# ---------------------------------------------------------------------------
# finite n
# ---------------------------------------------------------------------------


def finite_expectation(n: int) -> Fraction:
    """E(C_n) = 2(n+1) H_n - 4n."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return 2 * (n + 1) * harmonic(n) - 4 * n


def finite_expectation_recurrence(N: int) -> List[Fraction]:
    """E(C_0..C_N) from E(C_n) = n - 1 + (2/n) sum_{k<n} E(C_k)."""
    out = [Fraction(0)]
    acc = Fraction(0)
    for n in range(1, N + 1):
        acc += out[-1]
        out.append(n - 1 + Fraction(2, n) * acc)
    return out


def quicksort_comparisons(a: Sequence) -> int:
    """Comparisons made by Quicksort with the first element as pivot."""
    count = 0
    stack = [list(a)]
    while stack:
        xs = stack.pop()
        if len(xs) < 2:
            continue
        pivot = xs[0]
        lo, hi = [], []
        for x in xs[1:]:
            count += 1
            (lo if x < pivot else hi).append(x)
        stack.append(lo)
        stack.append(hi)
    return count


CHUNK = 2048
RNG_ALGORITHM = "numpy PCG64, SeedSequence(seed).spawn per chunk of 2048 runs"


def _split_costs(n: int, runs: int, rng: np.random.Generator) -> np.ndarray:
    # The pivot rank of a uniform permutation is uniform and both sublists are
    # again uniform and independent, so C_n = n - 1 + C_U + C_(n-1-U).
    cost = np.zeros(runs, dtype=np.int64)
    owner = np.arange(runs, dtype=np.int64)
    size = np.full(runs, n, dtype=np.int64)
    while owner.size:
        np.add.at(cost, owner, size - 1)
        left = rng.integers(0, size)
        right = size - 1 - left
        owner = np.concatenate([owner, owner])
        size = np.concatenate([left, right])
        keep = size >= 2
        owner, size = owner[keep], size[keep]
    return cost


def _permutation_costs(n: int, runs: int, rng: np.random.Generator) -> np.ndarray:
    return np.array([quicksort_comparisons(rng.permutation(n)) for _ in range(runs)], dtype=np.int64)


@dataclass(frozen=True)
class SimulationReport:
    n: int
    runs: int
    seed: int
    method: str
    moments: Tuple[float, ...]
    standard_errors: Tuple[float, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "runs": self.runs,
            "seed": self.seed,
            "method": self.method,
            "rng": RNG_ALGORITHM,
            "moments": list(self.moments),
            "standard_errors": list(self.standard_errors),
        }


def simulate_costs(n: int, runs: int, seed: int, method: str = "split") -> np.ndarray:
    """Comparison counts C_n for ``runs`` independent random inputs."""
    if n < 0 or runs < 1:
        raise DomainError("needs n >= 0 and runs >= 1")
    if method not in ("split", "permutation"):
        raise DomainError(f"unknown method {method!r}")
    chunks = (runs + CHUNK - 1) // CHUNK
    seqs = np.random.SeedSequence(seed).spawn(chunks)
    out = []
    for c, ss in enumerate(seqs):
        rng = np.random.Generator(np.random.PCG64(ss))
        k = min(CHUNK, runs - c * CHUNK)
        if method == "split":
            out.append(_split_costs(n, k, rng))
        else:
            out.append(_permutation_costs(n, k, rng))
    return np.concatenate(out)


def simulate(n: int, runs: int, seed: int, max_moment: int = 4, method: str = "split") -> SimulationReport:
    """Sample moments E(Z_n^k), k = 1..max_moment, of Z_n = (C_n - E C_n)/(n+1).

    ``split`` samples the recursive size decomposition directly; ``permutation``
    sorts explicit random permutations and is meant for small n.
    """
    if n < 2:
        raise DomainError("simulate needs n >= 2")
    costs = simulate_costs(n, runs, seed, method)
    z = (costs - float(finite_expectation(n))) / (n + 1)
    moments, errors = [], []
    for k in range(1, max_moment + 1):
        zk = z**k
        moments.append(float(zk.mean()))
        errors.append(float(zk.std(ddof=1) / np.sqrt(runs)) if runs > 1 else float("nan"))
    return SimulationReport(n, runs, seed, method, tuple(moments), tuple(errors))
