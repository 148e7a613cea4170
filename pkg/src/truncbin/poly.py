"""Exact integer polynomials and the truncated binomial families.

``P(n, k) = sum_{j<=k} C(n, j) x^j`` and its shifted, rescaled relatives
``F(n, k) = sum_j a_j c_j x^j`` where ``c_j`` are the coefficients of
``P(n, k)(x - 1)`` and each ``a_j`` is a nonzero k-smooth integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[j]`` is the coefficient of ``x**j``. Trailing zeros are
    stripped on construction, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Read the comma-separated ascending form, e.g. ``"3,-8,6"``."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def format(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __repr__(self) -> str:
        return f"IntPoly([{self.format()}])"

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(j * c for j, c in enumerate(self.coeffs) if j)

    def content(self) -> int:
        """Gcd of the coefficients, sign of the leading coefficient."""
        if not self:
            return 0
        g = reduce(math.gcd, self.coeffs)
        return -g if self.lc < 0 else g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self:
            return self
        g = self.content()
        return IntPoly(c // g for c in self.coeffs)

    def reciprocal(self) -> "IntPoly":
        """``x**deg * f(1/x)``."""
        return IntPoly(reversed(self.coeffs))

    def exact_div(self, d: int) -> "IntPoly":
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"{d} does not divide {self}")
            out.append(q)
        return IntPoly(out)


def binomial(n: int, j: int) -> int:
    """C(n, j) by the multiplicative formula; 0 when j > n."""
    if j < 0 or n < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if j > n:
        return 0
    j = min(j, n - j)
    acc = 1
    for i in range(1, j + 1):
        acc = acc * (n - j + i) // i
    return acc


def _check_nk(n: int, k: int) -> None:
    if not (1 <= k <= n - 1):
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")


def build_pnk(n: int, k: int) -> IntPoly:
    _check_nk(n, k)
    return IntPoly(binomial(n, j) for j in range(k + 1))


def shifted_coeffs(n: int, k: int) -> list[int]:
    """Coefficients ``c_j`` of ``P(n, k)(x - 1)``, from the closed form."""
    _check_nk(n, k)
    return [(-1) ** (k - j) * binomial(n, j) * binomial(n - j - 1, k - j)
            for j in range(k + 1)]


def is_smooth(m: int, k: int) -> bool:
    """True when ``|m|`` has no prime factor > k."""
    if m == 0:
        raise ValueError("smoothness of 0 is undefined")
    m = abs(m)
    p = 2
    while p <= k and m > 1:
        while m % p == 0:
            m //= p
        p += 1
    return m == 1


@dataclass(frozen=True)
class FnkSpec:
    """Parameters of one member of the F(n, k) family.

    Validated on construction: every ``a_j`` must be nonzero and k-smooth.
    """

    n: int
    k: int
    a: tuple[int, ...]

    def __post_init__(self):
        _check_nk(self.n, self.k)
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) != self.k + 1:
            raise ValueError(f"need {self.k + 1} multipliers, got {len(self.a)}")
        for j, aj in enumerate(self.a):
            if aj == 0 or not is_smooth(aj, self.k):
                raise ValueError(f"a_{j} = {aj} is not a nonzero {self.k}-smooth integer")

    @classmethod
    def ones(cls, n: int, k: int) -> "FnkSpec":
        return cls(n, k, (1,) * (k + 1))

    @classmethod
    def factorial(cls, n: int, k: int) -> "FnkSpec":
        """``a_j = (-1)**(k-j) j! (k-j)!``; gives ``n! / ((n-k-1)! (n-j))`` coefficients."""
        return cls(n, k, tuple((-1) ** (k - j) * math.factorial(j) * math.factorial(k - j)
                               for j in range(k + 1)))


def build_fnk(spec: FnkSpec) -> IntPoly:
    c = shifted_coeffs(spec.n, spec.k)
    return IntPoly(aj * cj for aj, cj in zip(spec.a, c))


def taylor_shift(f: IntPoly, a: int) -> IntPoly:
    """``f(x + a)`` by repeated synthetic division (Horner)."""
    c = list(f.coeffs)
    n = len(c)
    if a == 0 or n < 2:
        return IntPoly(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += a * c[j + 1]
    return IntPoly(c)


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """``lc(g)**(deg f - deg g + 1) * f mod g``, computed without fractions."""
    if not g:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(f.coeffs)
    dg = g.degree
    lg = g.lc
    delta = len(r) - 1 - dg
    if delta < 0:
        return f
    steps = 0
    while len(r) - 1 >= dg and r:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [c * lg for c in r]
        for i, gc in enumerate(g.coeffs):
            r[shift + i] -= lr * gc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        steps += 1
    # pad to the full lc(g)**(delta+1) multiplier
    return IntPoly(c * lg ** (delta + 1 - steps) for c in r)


def primitive_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Gcd over the rationals as a primitive integer polynomial.

    Uses the subresultant remainder sequence; degree-0 results are
    normalized to the constant 1.
    """
    if not f and not g:
        raise ValueError("gcd(0, 0) is undefined")
    if not g:
        return _normalize_gcd(f)
    if not f:
        return _normalize_gcd(g)
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    g_, h = 1, 1
    while True:
        delta = a.degree - b.degree
        r = pseudo_rem(a, b)
        if not r:
            return _normalize_gcd(b)
        if r.degree == 0:
            return IntPoly([1])
        a, b = b, r.exact_div(g_ * h ** delta)
        g_ = a.lc
        if delta == 0:
            continue
        num, den = g_ ** delta, h ** (delta - 1)
        h, rem = divmod(num, den)
        if rem:
            raise ArithmeticError("subresultant sequence lost exactness")


def _normalize_gcd(h: IntPoly) -> IntPoly:
    if h.degree <= 0:
        return IntPoly([1])
    return h.primitive()


def verify_simple_roots_identity(n: int, k: int) -> bool:
    """Check ``n P - (x + 1) P' == n C(n-1, k) x^k`` exactly."""
    p = build_pnk(n, k)
    lhs = p * n - IntPoly([1, 1]) * p.derivative()
    rhs = IntPoly([0] * k + [n * binomial(n - 1, k)])
    return lhs == rhs


def verify_alt_sum(a: int, b: int) -> bool:
    """Check ``sum_{j<=a} (-1)^j C(b, j) == (-1)^a C(b-1, a)``."""
    if not (0 <= a <= b):
        raise ValueError("need 0 <= a <= b")
    lhs = sum((-1) ** j * binomial(b, j) for j in range(a + 1))
    rhs = (-1) ** a * binomial(b - 1, a) if b >= 1 else (1 if a == 0 else 0)
    return lhs == rhs

