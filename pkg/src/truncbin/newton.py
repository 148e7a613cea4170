"""Newton polygons over p and the factor degrees they allow.

A Newton polygon is the lower convex hull of ``(j, v_p(d_j))``. When a
polynomial factors, its polygon is assembled from translated copies of the
factors' edges, and translated edges start and end on lattice points. So
every factor degree is a sum of x-lengths of minimal lattice segments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import IntPoly
from .primes import INF, p_valuation, valuation


@dataclass(frozen=True)
class ValuationPoint:
    j: int
    v: object  # int or INF


@dataclass(frozen=True)
class Edge:
    start: tuple[int, int]
    end: tuple[int, int]

    @property
    def slope(self) -> Fraction:
        return Fraction(self.end[1] - self.start[1], self.end[0] - self.start[0])

    @property
    def width(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def segments(self) -> int:
        """Number of minimal lattice segments along the edge."""
        return math.gcd(self.width, abs(self.end[1] - self.start[1]))


@dataclass(frozen=True)
class NewtonPolygon:
    p: int
    vertices: tuple[tuple[int, int], ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    @property
    def degree(self) -> int:
        return self.vertices[-1][0]

    def height(self, x: int) -> Fraction:
        """Ordinate of the polygon above abscissa x."""
        for e in self.edges:
            if e.start[0] <= x <= e.end[0]:
                return e.start[1] + e.slope * (x - e.start[0])
        raise ValueError(f"x={x} outside the polygon")

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "vertices": [list(v) for v in self.vertices],
            "slopes": [_frac(e.slope) for e in self.edges],
            "lattice_points": [list(pt) for pt in edge_lattice_points(self)],
            "degree_set": sorted(dumas_degree_set(self).members),
        }


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Iterable[ValuationPoint | tuple], p: int) -> NewtonPolygon:
    """Lower convex hull of the finite points.

    Points with ordinate ``INF`` are skipped, but the first and last
    abscissae must be finite. Collinear points are dropped from the vertex
    list.
    """
    pts = []
    for pt in points:
        j, v = (pt.j, pt.v) if isinstance(pt, ValuationPoint) else pt
        pts.append((j, v))
    pts.sort()
    if len(pts) < 2:
        raise ValueError("need at least two points")
    if pts[0][1] is INF or pts[-1][1] is INF:
        raise ValueError("endpoint coefficients must be nonzero")
    finite = [pt for pt in pts if pt[1] is not INF]
    hull: list[tuple[int, int]] = []
    for pt in finite:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonPolygon(p=p, vertices=tuple(hull))


def newton_polygon(f: IntPoly | Sequence[int], p: int) -> NewtonPolygon:
    coeffs = f.coeffs if isinstance(f, IntPoly) else tuple(f)
    return lower_hull([(j, valuation(p, c)) for j, c in enumerate(coeffs)], p)


def edge_lattice_points(np_: NewtonPolygon) -> list[tuple[int, int]]:
    out = [np_.vertices[0]]
    for e in np_.edges:
        g = e.segments
        dx = e.width // g
        dy = (e.end[1] - e.start[1]) // g
        for i in range(1, g + 1):
            out.append((e.start[0] + i * dx, e.start[1] + i * dy))
    return out


@dataclass(frozen=True)
class DegreeSet:
    """Possible degrees of a factor of a degree-k polynomial."""

    k: int
    members: frozenset[int]

    @classmethod
    def full(cls, k: int) -> "DegreeSet":
        return cls(k, frozenset(range(k + 1)))

    @classmethod
    def from_mask(cls, k: int, mask: int) -> "DegreeSet":
        mask &= (1 << (k + 1)) - 1
        members = []
        while mask:
            low = mask & -mask
            members.append(low.bit_length() - 1)
            mask ^= low
        return cls(k, frozenset(members))

    @classmethod
    def multiples(cls, k: int, step: int) -> "DegreeSet":
        return cls(k, frozenset(range(0, k + 1, step)))

    @property
    def is_trivial(self) -> bool:
        """Only 0 and k survive: the polynomial is irreducible."""
        return self.members == {0, self.k}

    def __and__(self, other: "DegreeSet") -> "DegreeSet":
        if self.k != other.k:
            raise ValueError("degree sets for different degrees")
        return DegreeSet(self.k, self.members & other.members)

    def __contains__(self, m: int) -> bool:
        return m in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)


def subset_sums(k: int, parts: Iterable[int]) -> DegreeSet:
    mask = 1
    full = (1 << (k + 1)) - 1
    for w in parts:
        mask |= (mask << w) & full
    return DegreeSet.from_mask(k, mask)


def dumas_degree_set(np_: NewtonPolygon) -> DegreeSet:
    parts = []
    for e in np_.edges:
        g = e.segments
        parts.extend([e.width // g] * g)
    return subset_sums(np_.degree, parts)


def cj_valuation_profile(n: int, k: int, p: int) -> tuple[int | None, int]:
    """Index j0 with p | n - j0 (None if p divides none of n-k..n) and its
    exponent. Requires p > k so at most one such factor exists."""
    if p <= k:
        raise ValueError(f"prime {p} must exceed k={k}")
    r = n % p
    if r <= k:
        return r, p_valuation(p, n - r)
    return None, 0


def np_for_cj(n: int, k: int, p: int) -> NewtonPolygon:
    """Polygon of sum a_j c_j x^j at a prime p > k, read off the closed form.

    The numerator of c_j is prod_{i != j} (n - i) over 0 <= i <= k and its
    denominator j!(k-j)! is prime to p, so v_p(c_j) is e everywhere except
    0 at j0.
    """
    j0, e = cj_valuation_profile(n, k, p)
    if j0 is None:
        return NewtonPolygon(p=p, vertices=((0, 0), (k, 0)))
    pts = [(0, 0 if j0 == 0 else e), (j0, 0), (k, 0 if j0 == k else e)]
    return lower_hull(sorted(set(pts)), p)
