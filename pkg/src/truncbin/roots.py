"""Root simplicity and cross-k root distinctness of P(n, k), by exact gcds."""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import build_pnk, primitive_gcd


def simple_roots_check(n: int, k: int) -> bool:
    p = build_pnk(n, k)
    return primitive_gcd(p, p.derivative()).degree == 0


@dataclass
class DistinctReport:
    n: int
    all_distinct: bool
    offending_pairs: list[tuple[int, int]] = field(default_factory=list)
    pairs_checked: int = 0

    @property
    def distinct_root_count(self) -> int | None:
        # each P(n, k) has k simple roots; disjointness makes them all distinct
        return self.n * (self.n - 1) // 2 if self.all_distinct else None

    def to_json(self) -> dict:
        return {"n": self.n, "all_distinct": self.all_distinct,
                "offending_pairs": [list(p) for p in self.offending_pairs],
                "pairs_checked": self.pairs_checked,
                "distinct_roots": self.distinct_root_count}


def pairwise_distinct_check(n: int) -> DistinctReport:
    """Do P(n, k) and P(n, k') share a root for some 1 <= k < k' <= n-1?"""
    if n < 2:
        raise ValueError("need n >= 2")
    polys = [build_pnk(n, k) for k in range(1, n)]
    bad = []
    checked = 0
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            checked += 1
            if primitive_gcd(polys[i], polys[j]).degree > 0:
                bad.append((i + 1, j + 1))
    return DistinctReport(n=n, all_distinct=not bad, offending_pairs=bad,
                          pairs_checked=checked)
