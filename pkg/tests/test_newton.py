import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from truncbin.newton import (DegreeSet, ValuationPoint, dumas_degree_set, edge_lattice_points,
                             lower_hull, newton_polygon, np_for_cj)
from truncbin.poly import FnkSpec, IntPoly, build_fnk, shifted_coeffs
from truncbin.primes import INF, prime_table, valuation


def test_polygon_x2_4x_4_at_2():
    np_ = newton_polygon(IntPoly([4, 4, 1]), 2)
    assert np_.vertices == ((0, 2), (2, 0))
    assert edge_lattice_points(np_) == [(0, 2), (1, 1), (2, 0)]
    assert dumas_degree_set(np_).sorted() == [0, 1, 2]


def test_interior_lattice_point_need_not_be_a_valuation_point():
    pts = {(j, valuation(2, c)) for j, c in enumerate([4, 4, 1])}
    assert (1, 1) not in pts and (1, 1) in edge_lattice_points(newton_polygon(IntPoly([4, 4, 1]), 2))


def test_linear_polygon():
    np_ = newton_polygon(IntPoly([3, 5]), 3)
    assert np_.vertices == ((0, 1), (1, 0))
    assert dumas_degree_set(np_).sorted() == [0, 1]


def test_two_segment_polygon_for_prime_near_n():
    # n = 100, k = 50, p = 97 = n - 3
    np_ = np_for_cj(100, 50, 97)
    assert np_.vertices == ((0, 1), (3, 0), (50, 1))
    assert [e.slope for e in np_.edges] == [Fraction(-1, 3), Fraction(1, 47)]
    assert edge_lattice_points(np_) == [(0, 1), (3, 0), (50, 1)]
    assert dumas_degree_set(np_).sorted() == [0, 3, 47, 50]


def test_single_edge_from_prime_dividing_n():
    # 7^2 | 98, k = 6: one edge (0,0) -> (6,2), gcd 2 so steps of 3
    np_ = np_for_cj(98, 6, 7)
    assert np_.vertices == ((0, 0), (6, 2))
    assert edge_lattice_points(np_) == [(0, 0), (3, 1), (6, 2)]
    assert dumas_degree_set(np_).sorted() == [0, 3, 6]


def test_np_for_cj_example():
    np_ = np_for_cj(10, 3, 7)
    assert np_.vertices == ((0, 1), (3, 0))
    assert dumas_degree_set(np_).sorted() == [0, 3]
    assert np_ == newton_polygon(IntPoly(shifted_coeffs(10, 3)), 7)


def test_np_for_cj_rejects_small_prime():
    with pytest.raises(ValueError):
        np_for_cj(10, 3, 3)


def test_np_for_cj_prime_dividing_nothing():
    np_ = np_for_cj(20, 3, 13)
    assert np_.vertices == ((0, 0), (3, 0))
    assert dumas_degree_set(np_) == DegreeSet.full(3)


def enumerate_lattice(start, end):
    (x0, y0), (x1, y1) = start, end
    return [(x, y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)) for x in range(x0, x1 + 1)
            if (Fraction(y1 - y0, x1 - x0) * (x - x0)).denominator == 1]


@pytest.mark.parametrize("k,e", [(6, 4), (12, 8), (7, 3), (10, 10), (9, 0)])
def test_single_edge_lattice_count(k, e):
    np_ = lower_hull([(0, 0), (k, e)], 2)
    pts = edge_lattice_points(np_)
    g = math.gcd(k, e)
    assert len(pts) == g + 1
    assert [(x, Fraction(y)) for x, y in pts] == enumerate_lattice((0, 0), (k, e))
    step = k // g
    assert dumas_degree_set(np_) == DegreeSet.multiples(k, step)


def test_infinite_points_skipped_but_not_endpoints():
    np_ = lower_hull([ValuationPoint(0, 3), ValuationPoint(1, INF), ValuationPoint(2, 0)], 5)
    assert np_.vertices == ((0, 3), (2, 0))
    with pytest.raises(ValueError):
        lower_hull([(0, INF), (1, 0), (2, 1)], 5)


coeff_lists = st.lists(st.integers(-10**6, 10**6), min_size=2, max_size=12).filter(
    lambda c: c[0] != 0 and c[-1] != 0)


@given(coeff_lists, st.sampled_from([2, 3, 5, 7]))
def test_hull_properties(coeffs, p):
    np_ = newton_polygon(IntPoly(coeffs), p)
    slopes = [e.slope for e in np_.edges]
    assert all(a < b for a, b in zip(slopes, slopes[1:]))
    assert np_.vertices[0] == (0, valuation(p, coeffs[0]))
    assert np_.vertices[-1] == (len(coeffs) - 1, valuation(p, coeffs[-1]))
    for j, c in enumerate(coeffs):
        v = valuation(p, c)
        if v is not INF:
            assert v >= np_.height(j)
    ds = dumas_degree_set(np_)
    k = len(coeffs) - 1
    assert 0 in ds and k in ds
    assert all((k - m) in ds for m in ds.members)


def random_factor(rng, deg):
    c = [rng.choice([-1, 1]) * rng.randint(1, 30)] + [rng.randint(-30, 30) for _ in range(deg - 1)]
    c.append(rng.choice([-1, 1]) * rng.randint(1, 30))
    return IntPoly(c)


def test_dumas_soundness_on_products():
    rng = random.Random(5)
    for _ in range(1500):
        d1 = rng.randint(1, 5)
        d2 = rng.randint(1, 6 - d1) if d1 < 6 else 1
        g, h = random_factor(rng, d1), random_factor(rng, d2)
        f = g * h
        for p in (2, 3, 5, 7):
            ds = dumas_degree_set(newton_polygon(f, p))
            assert d1 in ds and d2 in ds


def test_np_for_cj_agrees_with_exact_valuations():
    rng = random.Random(17)
    for n in range(4, 61):
        for k in range(1, n - 1):
            small = [q for q in prime_table(k).upto(k)] or [1]
            a = []
            for _ in range(k + 1):
                m = rng.choice([1, -1])
                for q in small:
                    if q > 1:
                        m *= q ** rng.randint(0, 2)
                a.append(m)
            f = build_fnk(FnkSpec(n, k, a))
            for p in prime_table(n).upto(n):
                if p > k:
                    assert np_for_cj(n, k, p) == newton_polygon(f, p)


def test_degree_set_operations():
    a = DegreeSet(6, frozenset({0, 2, 4, 6}))
    b = DegreeSet(6, frozenset({0, 3, 6}))
    assert (a & b).is_trivial
    assert not a.is_trivial
    with pytest.raises(ValueError):
        a & DegreeSet.full(5)
