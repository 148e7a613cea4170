"""Primes, p-adic valuations, prime gaps and coprime-to-k! factorizations."""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from . import kernels

DEFAULT_FACTOR_BOUND = 10**14


class _Infinity:
    """Valuation of zero. Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("truncbin.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()


class PrimeTable:
    """All primes up to ``limit``; immutable after construction."""

    __slots__ = ("limit", "primes", "_set")

    def __init__(self, limit: int):
        if limit < 2:
            raise ValueError("limit must be >= 2")
        self.limit = limit
        self.primes = tuple(kernels.sieve(limit))
        self._set = frozenset(self.primes)

    def __contains__(self, m: int) -> bool:
        if m > self.limit:
            raise ValueError(f"{m} exceeds table limit {self.limit}")
        return m in self._set

    def __len__(self):
        return len(self.primes)

    def below(self, n: int) -> tuple[int, ...]:
        """Primes strictly less than n."""
        return self.primes[: bisect_left(self.primes, n)]

    def upto(self, n: int) -> tuple[int, ...]:
        return self.primes[: bisect_right(self.primes, n)]


def sieve(limit: int) -> PrimeTable:
    return PrimeTable(limit)


@lru_cache(maxsize=8)
def _table(limit: int) -> PrimeTable:
    return PrimeTable(limit)


def prime_table(at_least: int) -> PrimeTable:
    """Shared table covering ``at_least``, rounded up to a power of two."""
    limit = 1 << max(10, (max(at_least, 2) - 1).bit_length())
    return _table(limit)


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 1 << 20:
        return m in prime_table(m)
    return all(m % p for p in prime_table(math.isqrt(m)).upto(math.isqrt(m)))


def p_valuation(p: int, m: int) -> int:
    """Exponent of p in m. Raises for m == 0; see :func:`valuation`."""
    if m == 0:
        raise ValueError("valuation of 0 is infinite")
    m = abs(m)
    r = 0
    while m % p == 0:
        m //= p
        r += 1
    return r


def valuation(p: int, m: int):
    """Like :func:`p_valuation` but returns ``INF`` for zero."""
    return INF if m == 0 else p_valuation(p, m)


def two_primes_below(n: int) -> tuple[int, int]:
    """Largest and second-largest primes < n."""
    if n < 4:
        raise ValueError("need n >= 4 for two primes below n")
    below = prime_table(n).below(n)
    return below[-1], below[-2]


def delta(n: int) -> int:
    """Distance from n to the second-largest prime below n."""
    return n - two_primes_below(n)[1]


def deltas(N: int) -> list[int]:
    """``delta(n)`` for all n in 0..N; entries for n < 4 are 0."""
    out = [0] * (N + 1)
    primes = prime_table(N).primes
    # p_t < n <= p_{t+1} shares the same second-largest prime p_{t-1}
    for t in range(1, len(primes)):
        lo = primes[t] + 1
        hi = primes[t + 1] if t + 1 < len(primes) else None
        q = primes[t - 1]
        for n in range(lo, min(hi, N) + 1 if hi is not None else N + 1):
            out[n] = n - q
    return out


@dataclass(frozen=True)
class GapStats:
    N: int
    sum_d2: int
    max_gap: int
    histogram: tuple[tuple[int, int], ...]
    count: int

    def to_json(self) -> dict:
        return {"N": self.N, "sum_d2": self.sum_d2, "max_gap": self.max_gap,
                "histogram": [list(h) for h in self.histogram]}


def gap_stats(N: int) -> GapStats:
    """Statistics of d_t = p_{t+1} - p_t over every prime p_t <= N.

    The gap leaving the last prime <= N is included, so the sieve runs
    past N to find p_{t+1}.
    """
    if N < 3:
        raise ValueError("need N >= 3")
    # Bertrand: a prime lies in (N, 2N]
    primes = prime_table(2 * N + 2).primes
    t_max = bisect_right(primes, N)
    gaps = [primes[t + 1] - primes[t] for t in range(t_max)]
    hist = Counter(gaps)
    return GapStats(N=N, sum_d2=sum(g * g for g in gaps), max_gap=max(gaps),
                    histogram=tuple(sorted(hist.items())), count=len(gaps))


def smooth_check(m: int, k: int) -> bool:
    """True iff |m| has no prime factor > k."""
    if m == 0:
        raise ValueError("smoothness of 0 is undefined")
    if k < 1:
        raise ValueError("k must be >= 1")
    m = abs(m)
    for p in prime_table(k).upto(k):
        if m == 1:
            break
        while m % p == 0:
            m //= p
    return m == 1


@dataclass(frozen=True)
class CoprimeFactorization:
    """Factorization of the largest divisor of ``base`` coprime to k!."""

    base: int
    k: int
    parts: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.parts:
            out *= p**e
        return out

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.parts)


def factorize(m: int, bound: int = DEFAULT_FACTOR_BOUND) -> list[tuple[int, int]]:
    """Trial-division factorization of m >= 1, ascending primes."""
    if m < 1:
        raise ValueError("need m >= 1")
    if m > bound:
        raise ValueError(f"{m} exceeds the trial-division bound {bound}")
    out = []
    root = math.isqrt(m)
    for p in prime_table(max(root, 2)).upto(root):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        out.append((m, 1))
    return out


def coprime_part_factor(base: int, k: int,
                        bound: int = DEFAULT_FACTOR_BOUND) -> CoprimeFactorization:
    if base < 1 or k < 1:
        raise ValueError("need base >= 1 and k >= 1")
    parts = tuple((p, e) for p, e in factorize(base, bound) if p > k)
    return CoprimeFactorization(base=base, k=k, parts=parts)
