"""Irreducibility certificates for F(n, k) = sum a_j c_j x^j.

Every family-wide criterion here looks only at primes p > k. Those primes
never divide a k-smooth a_j, so the p-adic valuations of a_j c_j equal
those of c_j, and the conclusion holds for every admissible a-vector at
once.

Criteria, cheapest first:

* Eisenstein at a prime p > k with v_p(n) = 1 (applied to the reciprocal)
  or v_p(n - k) = 1.
* The prime-gap window ``2 delta(n) < k < n - delta(n)``: the two largest
  primes below n each cut the factor degrees down to {u, k-u} and
  {v, k-v} with no overlap.
* ``d = gcd(k, e_1, ..., e_r)`` over the prime-power factorization of the
  part of n(n-k) prime to k!: factor degrees are multiples of k/d.
* When d = 2, a prime p > k dividing (n-1)(n-k+1) to an exponent not
  divisible by k-1 rules out the two-halves split.
* Intersection of the degree sets of all primes p > k dividing
  n(n-1)...(n-k).
* Mod-p degree patterns of the concrete polynomial (not family-wide).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .modp import DEFAULT_PRIME_BUDGET, certify_modp
from .newton import DegreeSet, cj_valuation_profile, dumas_degree_set, np_for_cj
from .poly import FnkSpec, build_fnk
from .primes import (DEFAULT_FACTOR_BOUND, CoprimeFactorization, coprime_part_factor,
                     prime_table, two_primes_below)


class Kind(str, enum.Enum):
    EISENSTEIN_N = "EisensteinN"
    EISENSTEIN_N_MINUS_K = "EisensteinNminusK"
    PRIME_GAP = "PrimeGapWindow"
    GCD = "GcdCriterion"
    LEMMA3 = "Lemma3Filter"
    DUMAS = "DumasIntersection"
    MODP = "ModPIntersection"
    LINEAR = "Linear"
    QUADRATIC = "QuadraticDiscriminant"
    NONE = "None"


class Scope(str, enum.Enum):
    FAMILY = "FamilyWide"
    POLYNOMIAL = "PolynomialSpecific"
    NONE = "None"


@dataclass(frozen=True)
class Certificate:
    kind: Kind
    scope: Scope
    witnesses: dict = field(default_factory=dict, compare=True, hash=False)

    @property
    def certified(self) -> bool:
        return self.kind is not Kind.NONE

    def witness_tokens(self) -> list[str]:
        """``p^e`` tokens for the primes this certificate leans on."""
        return [f"{p}^{e}" for p, e in self.witnesses.get("prime_powers", [])] or \
            [str(p) for p in self.witnesses.get("primes", [])]

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "scope": self.scope.value,
                "witnesses": self.witnesses}


NO_CERTIFICATE = Certificate(Kind.NONE, Scope.NONE, {})


def _check_range(n: int, k: int, upper: int) -> None:
    if not (1 <= k <= n - upper):
        raise ValueError(f"need 1 <= k <= n-{upper}, got n={n}, k={k}")


def thm2_eisenstein(n: int, k: int, factor_bound: int = DEFAULT_FACTOR_BOUND):
    """A prime p > k exactly dividing n or n - k makes F Eisenstein."""
    _check_range(n, k, 1)
    for target, kind in ((n, Kind.EISENSTEIN_N), (n - k, Kind.EISENSTEIN_N_MINUS_K)):
        if target < 2:
            continue
        for p, e in coprime_part_factor(target, k, factor_bound).parts:
            if e == 1:
                return Certificate(kind, Scope.FAMILY,
                                   {"prime_powers": [[p, 1]], "divides": "n" if kind is Kind.EISENSTEIN_N else "n-k"})
    return None


def prime_gap_cert(n: int, k: int):
    """Certificate from the two largest primes below n, when k sits in the
    window ``2 delta(n) < k < n - delta(n)``.

    Each step of the argument is checked rather than assumed.
    """
    if n < 4 or not (1 <= k <= n - 1):
        return None
    p, q = two_primes_below(n)
    d = n - q
    if not (2 * d < k < n - d):
        return None
    u, v = n - p, n - q
    if not (p > k and q > k and 1 <= u < v and k - v > u):
        return None
    set_p = dumas_degree_set(np_for_cj(n, k, p))
    set_q = dumas_degree_set(np_for_cj(n, k, q))
    if not (set_p & set_q).is_trivial:
        return None
    return Certificate(Kind.PRIME_GAP, Scope.FAMILY, {
        "prime_powers": [[p, 1], [q, 1]], "u": u, "v": v, "delta": d,
        "degree_sets": [set_p.sorted(), set_q.sorted()],
    })


@dataclass(frozen=True)
class GcdResult:
    d: int
    factorization: CoprimeFactorization

    @property
    def degree_set(self) -> DegreeSet:
        k = self.factorization.k
        return DegreeSet.multiples(k, k // self.d)


def lemma2_gcd(n: int, k: int, factor_bound: int = DEFAULT_FACTOR_BOUND) -> GcdResult:
    """``d = gcd(k, e_1, ..., e_r)`` for the part of n(n-k) prime to k!.

    ``d == k`` when that part is 1.
    """
    _check_range(n, k, 1)
    fac = coprime_part_factor(n * (n - k), k, factor_bound)
    return GcdResult(d=math.gcd(k, *fac.exponents), factorization=fac)


def lemma3_filter(n: int, k: int, factor_bound: int = DEFAULT_FACTOR_BOUND,
                  gcd_result: GcdResult | None = None):
    """Rule out a split into two halves when d = 2.

    Uses the part of (n-1)(n-k+1) prime to k!. That cofactor is an inference:
    the argument only ever looks at primes with p | n-1 or p | n-k+1.
    """
    res = gcd_result or lemma2_gcd(n, k, factor_bound)
    if res.d != 2:
        raise ValueError(f"lemma3_filter needs d = 2, got d = {res.d}")
    fac = coprime_part_factor((n - 1) * (n - k + 1), k, factor_bound)
    hits = [[p, e] for p, e in fac.parts if e % (k - 1)]
    if hits:
        return Certificate(Kind.LEMMA3, Scope.FAMILY, {"prime_powers": hits, "d": 2})
    return None


def dumas_intersection(n: int, k: int, start: DegreeSet | None = None):
    """Intersect degree sets over all primes p > k dividing n(n-1)...(n-k).

    Returns ``(degree_set, contributing primes)``.
    """
    allowed = DegreeSet.full(k) if start is None else start
    used = []
    for p in prime_table(n).upto(n):
        if p <= k:
            continue
        j0, e = cj_valuation_profile(n, k, p)
        if j0 is None:
            continue
        narrowed = allowed & dumas_degree_set(np_for_cj(n, k, p))
        if narrowed != allowed:
            used.append([p, e])
            allowed = narrowed
        if allowed.is_trivial:
            break
    return allowed, used


def _is_square(m: int) -> bool:
    return m >= 0 and math.isqrt(m) ** 2 == m


def _resolve_a(n: int, k: int, a) -> FnkSpec:
    if a is None or a == "ones":
        return FnkSpec.ones(n, k)
    if a == "factorial":
        return FnkSpec.factorial(n, k)
    if isinstance(a, FnkSpec):
        return a
    return FnkSpec(n, k, tuple(a))


def certify(n: int, k: int, a=None, prime_budget: int = DEFAULT_PRIME_BUDGET,
            factor_bound: int = DEFAULT_FACTOR_BOUND) -> Certificate:
    """Run every criterion in order and return the first certificate.

    ``a`` is ``None``/``"ones"``, ``"factorial"``, a sequence of k+1
    multipliers, or an :class:`FnkSpec`. It only matters for the k = 2
    discriminant test and the mod-p fallback.
    """
    _check_range(n, k, 1)
    spec = _resolve_a(n, k, a)
    if k == 1:
        return Certificate(Kind.LINEAR, Scope.FAMILY, {})
    if k == 2:
        f = build_fnk(spec)
        disc = f[1] ** 2 - 4 * f[0] * f[2]
        if _is_square(disc):
            return Certificate(Kind.NONE, Scope.NONE, {"discriminant": disc})
        return Certificate(Kind.QUADRATIC, Scope.POLYNOMIAL, {"discriminant": disc})

    cert = thm2_eisenstein(n, k, factor_bound) or prime_gap_cert(n, k)
    if cert:
        return cert
    g = lemma2_gcd(n, k, factor_bound)
    if g.d == 1:
        return Certificate(Kind.GCD, Scope.FAMILY, {
            "prime_powers": [list(x) for x in g.factorization.parts], "d": 1})
    if g.d == 2:
        cert = lemma3_filter(n, k, factor_bound, g)
        if cert:
            return cert
    allowed, used = dumas_intersection(n, k, g.degree_set)
    if allowed.is_trivial:
        return Certificate(Kind.DUMAS, Scope.FAMILY, {"prime_powers": used, "d": g.d})

    cert = certify_modp(build_fnk(spec), prime_budget, start=allowed)
    if cert:
        return cert
    return Certificate(Kind.NONE, Scope.NONE, {"degree_set": allowed.sorted()})
