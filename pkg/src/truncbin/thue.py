"""Bounded searches of the Thue equations behind the fixed-k, large-n result.

For fixed k, a reducible F(n, k) with d = gcd(k, e_1, ..., e_r) >= 3 needs

    n = a x^d,  n - k = b y^d,   a, b | prod_{p <= k} p^(d-1)

so ``a x^d - b y^d = k``. With d = 2 it needs

    n - 1 = a x^(k-1),  n - k + 1 = b y^(k-1),   a, b | prod_{p <= k} p^(k-2)

so ``a x^(k-1) - b y^(k-1) = k - 2``. Each has finitely many solutions;
here they are only searched for ``1 <= x <= bound``, so results are
"solutions with x, y <= bound", never a completeness claim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernels
from .certify import Kind, certify, lemma2_gcd
from .primes import factorize, prime_table


def default_bound(d: int) -> int:
    """10**6 for cubes, shrinking so that x**d stays near 10**18."""
    if d <= 3:
        return 10**6
    return max(100, int(round(10 ** (18 / d))))


def smooth_modulus(k: int, exp: int) -> int:
    out = 1
    for p in prime_table(k).upto(k):
        out *= p**exp
    return out


def divisors(m: int) -> list[int]:
    fac = factorize(m) if m > 1 else []
    out = [1]
    for p, e in fac:
        out = [x * p**i for x in out for i in range(e + 1)]
    return sorted(out)


@dataclass(frozen=True)
class ThueSolution:
    x: int
    y: int
    n: int


def _iroot(m: int, d: int) -> int:
    """floor(m ** (1/d)) for m >= 0, exact."""
    if m < 2:
        return m
    # 2^ceil(bits/d) is an upper bound, so integer Newton descends monotonically
    r = 1 << -(-m.bit_length() // d)
    while True:
        s = ((d - 1) * r + m // r ** (d - 1)) // d
        if s >= r:
            break
        r = s
    while r**d > m:
        r -= 1
    while (r + 1) ** d <= m:
        r += 1
    return r


def solve_bounded(a: int, b: int, d: int, c: int, bound: int) -> list[tuple[int, int]]:
    """All (x, y) with 1 <= x <= bound, y >= 1 and a x^d - b y^d = c."""
    if bound < 1:
        return []
    if max(a, b, abs(c)) >= 1 << 62 or d > 60:
        return _solve_slow(a, b, d, c, bound)
    return sorted({(x, y) for x, y in kernels.thue_candidates(a, b, d, c, bound)
                   if a * x**d - b * y**d == c})


def _solve_slow(a, b, d, c, bound):
    out = []
    for x in range(1, bound + 1):
        t = a * x**d - c
        if t >= b and t % b == 0:
            y = _iroot(t // b, d)
            if b * y**d == t:
                out.append((x, y))
    return out


def _check_divides(val: int, m: int, name: str) -> None:
    if val < 1 or m % val:
        raise ValueError(f"{name} = {val} must be a positive divisor of {m}")


def scan_case3(k: int, d: int, a: int, b: int, bound: int | None = None) -> list[ThueSolution]:
    """Solutions of ``a x^d - b y^d = k`` with n = a x^d."""
    if d < 3 or k % d:
        raise ValueError(f"need d >= 3 dividing k, got d={d}, k={k}")
    m = smooth_modulus(k, d - 1)
    _check_divides(a, m, "a")
    _check_divides(b, m, "b")
    bound = default_bound(d) if bound is None else bound
    return [ThueSolution(x, y, a * x**d) for x, y in solve_bounded(a, b, d, k, bound)]


def scan_case2(k: int, a: int, b: int, bound: int | None = None) -> list[ThueSolution]:
    """Solutions of ``a x^(k-1) - b y^(k-1) = k - 2`` with n = a x^(k-1) + 1."""
    if k < 4 or k % 2:
        raise ValueError(f"need even k >= 4, got k={k}")
    m = smooth_modulus(k, k - 2)
    _check_divides(a, m, "a'")
    _check_divides(b, m, "b'")
    d = k - 1
    bound = default_bound(d) if bound is None else bound
    return [ThueSolution(x, y, a * x**d + 1) for x, y in solve_bounded(a, b, d, k - 2, bound)]


def case3_parameters(k: int):
    """Every (d, a, b) allowed for fixed k."""
    for d in range(3, k + 1):
        if k % d == 0:
            divs = divisors(smooth_modulus(k, d - 1))
            for a, b in itertools.product(divs, repeat=2):
                yield d, a, b


def case2_parameters(k: int):
    if k < 4 or k % 2:
        return
    divs = divisors(smooth_modulus(k, k - 2))
    for a, b in itertools.product(divs, repeat=2):
        yield k - 1, a, b


def scan_all(k: int, bound: int | None = None, cases=(2, 3)):
    """Yield one row per parameter choice: case, d, a, b, bound, solutions."""
    if 3 in cases:
        for d, a, b in case3_parameters(k):
            bd = default_bound(d) if bound is None else bound
            yield {"case": 3, "d": d, "a": a, "b": b, "bound": bd,
                   "solutions": scan_case3(k, d, a, b, bd)}
    if 2 in cases:
        for d, a, b in case2_parameters(k):
            bd = default_bound(d) if bound is None else bound
            yield {"case": 2, "d": d, "a": a, "b": b, "bound": bd,
                   "solutions": scan_case2(k, a, b, bd)}


@dataclass(frozen=True)
class N0Row:
    n: int
    d: int
    case: str
    kind: str
    resolved: bool


def classify_case(d: int) -> str:
    return "i" if d == 1 else "ii" if d == 2 else "iii"


def n0_scan(k: int, N: int, **certify_kw) -> tuple[list[N0Row], list[int]]:
    """Classify each n in k+2..N and record whether certification succeeds.

    Returns the rows and the unresolved n, an empirical upper bound on the
    exceptional set below N.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    rows = []
    for n in range(k + 2, N + 1):
        d = lemma2_gcd(n, k).d
        cert = certify(n, k, **certify_kw)
        rows.append(N0Row(n, d, classify_case(d), cert.kind.value, cert.kind is not Kind.NONE))
    return rows, [r.n for r in rows if not r.resolved]
