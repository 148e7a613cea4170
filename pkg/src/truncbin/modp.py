"""Factor-degree patterns of integer polynomials modulo small primes.

A polynomial that factors over the integers keeps that factorization mod
p (when p does not divide the leading coefficient), so the degrees of its
factors must be sums of the mod-p irreducible factor degrees. Intersecting
these constraints over several primes can certify irreducibility of one
concrete polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .newton import DegreeSet
from .poly import IntPoly
from .primes import prime_table

DEFAULT_PRIME_BUDGET = 25


class NotSquarefreeModP(ValueError):
    """The reduction mod p has a repeated factor; try another prime."""


@dataclass(frozen=True)
class ModPoly:
    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Sequence[int]):
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class DegreePattern:
    """``pattern`` maps factor degree d to the total degree t of all
    degree-d irreducible factors."""

    p: int
    pattern: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return sum(t for _, t in self.pattern)

    def factor_degrees(self) -> list[int]:
        """Multiset of irreducible factor degrees, ascending."""
        return sorted(d for d, t in self.pattern for _ in range(t // d))


def _derivative(c: Sequence[int], p: int) -> list[int]:
    return [j * x % p for j, x in enumerate(c)][1:]


def _exact_quo(a: list[int], b: list[int], p: int) -> list[int]:
    """Quotient a / b mod p, b monic-able and dividing a."""
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        coef = a[i + len(b) - 1] * inv % p
        q[i] = coef
        if coef:
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - coef * bj) % p
    return q


def ddf(f: IntPoly | ModPoly, p: int | None = None) -> DegreePattern:
    """Distinct-degree factorization pattern of f mod p.

    Raises ``ValueError`` if p divides the leading coefficient and
    :class:`NotSquarefreeModP` if the reduction is not squarefree.
    """
    if isinstance(f, ModPoly):
        p = f.p
        lead_ok = True
        c = list(f.coeffs)
    else:
        if p is None:
            raise TypeError("a prime is required for integer polynomials")
        lead_ok = f.lc % p != 0
        c = [x % p for x in f.coeffs]
    if not lead_ok:
        raise ValueError(f"{p} divides the leading coefficient")
    while c and c[-1] == 0:
        c.pop()
    if len(c) < 2:
        raise ValueError("need a nonconstant polynomial")
    if len(kernels.polgcd(c, _derivative(c, p), p)) > 1:
        raise NotSquarefreeModP(f"reduction mod {p} is not squarefree")

    pattern = []
    rest = c
    h = [0, 1]
    i = 0
    while len(rest) - 1 >= 2 * (i + 1):
        i += 1
        h = kernels.polpowmod(h, p, rest, p)
        hx = list(h) + [0] * max(0, 2 - len(h))
        hx[1] = (hx[1] - 1) % p
        g = kernels.polgcd(hx, rest, p)
        if len(g) > 1:
            pattern.append((i, len(g) - 1))
            rest = _exact_quo(rest, g, p)
            h = kernels.polrem(h, rest, p)
    if len(rest) > 1:
        pattern.append((len(rest) - 1, len(rest) - 1))
    return DegreePattern(p=p, pattern=tuple(pattern))


def feasible_degrees_modp(pattern: DegreePattern, k: int | None = None) -> DegreeSet:
    k = pattern.degree if k is None else k
    mask = 1
    full = (1 << (k + 1)) - 1
    for d, t in pattern.pattern:
        for _ in range(t // d):
            mask |= (mask << d) & full
    return DegreeSet.from_mask(k, mask)


def usable_primes(f: IntPoly, limit: int):
    """Ascending primes not dividing the leading coefficient, skipping those
    with a non-squarefree reduction; yields (p, pattern)."""
    for p in prime_table(limit).primes:
        if p > limit:
            return
        if f.lc % p == 0:
            continue
        try:
            yield p, ddf(f, p)
        except NotSquarefreeModP:
            continue


def certify_modp(f: IntPoly, prime_budget: int = DEFAULT_PRIME_BUDGET,
                 start: DegreeSet | None = None):
    """Try to prove f irreducible over Q from mod-p degree patterns.

    ``start`` optionally carries constraints already known (for example from
    Newton polygons). Returns a certificate or ``None``; ``None`` never
    means reducible.
    """
    from .certify import Certificate, Kind, Scope

    f = f.primitive()
    k = f.degree
    if k < 1:
        raise ValueError("need a nonconstant polynomial")
    if k == 1:
        return Certificate(Kind.MODP, Scope.POLYNOMIAL, {"primes": [], "degree": 1})
    allowed = DegreeSet.full(k) if start is None else start
    used = []
    # a squarefree f has finitely many bad primes; the scan cap guards the rest
    for p, pat in usable_primes(f, limit=max(2000, 40 * prime_budget)):
        allowed = allowed & feasible_degrees_modp(pat, k)
        used.append({"p": p, "pattern": [list(x) for x in pat.pattern]})
        if allowed.is_trivial:
            return Certificate(Kind.MODP, Scope.POLYNOMIAL,
                               {"primes": [u["p"] for u in used], "patterns": used})
        if len(used) >= prime_budget:
            break
    return None


def brute_factor_modp(f: ModPoly) -> tuple[int, list[tuple[int, ...]]]:
    """Complete factorization by exhaustive trial division.

    Returns ``(unit, monic_factors)`` with factors ascending by degree.
    Test oracle only: limited to degree <= 8 and p <= 7.
    """
    p = f.p
    if f.degree > 8 or p > 7:
        raise ValueError("brute force limited to degree <= 8 and p <= 7")
    if f.degree < 0:
        raise ValueError("cannot factor the zero polynomial")
    unit = f.coeffs[-1]
    inv = pow(unit, -1, p)
    rest = [c * inv % p for c in f.coeffs]
    factors = []
    while len(rest) > 1:
        for cand in _monic_candidates(p, (len(rest) - 1) // 2):
            if not kernels.polrem(rest, list(cand), p):
                factors.append(cand)
                rest = _exact_quo(rest, list(cand), p)
                break
        else:
            factors.append(tuple(rest))
            rest = [1]
    return unit, sorted(factors, key=lambda c: (len(c), c))


def _monic_candidates(p: int, max_deg: int):
    for d in range(1, max_deg + 1):
        for tail in itertools.product(range(p), repeat=d):
            yield tuple(tail) + (1,)
