import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from truncbin.poly import (FnkSpec, IntPoly, binomial, build_fnk, build_pnk, primitive_gcd,
                           pseudo_rem, shifted_coeffs, taylor_shift, verify_alt_sum,
                           verify_simple_roots_identity)

X = sympy.Symbol("x")


def pascal(rows):
    tri = [[1]]
    for _ in range(rows):
        prev = tri[-1]
        tri.append([1] + [a + b for a, b in zip(prev, prev[1:])] + [1])
    return tri


def naive_shift(f, a):
    # f(x + a) = sum_i c_i sum_m C(i, m) a^(i-m) x^m
    out = [0] * len(f.coeffs)
    for i, c in enumerate(f.coeffs):
        for m in range(i + 1):
            out[m] += c * math.comb(i, m) * a ** (i - m)
    return IntPoly(out)


def sympy_gcd(f, g):
    h = sympy.Poly(list(reversed(f.coeffs)), X).gcd(sympy.Poly(list(reversed(g.coeffs)), X))
    coeffs = [int(c) for c in reversed(h.all_coeffs())]
    return IntPoly(coeffs).primitive() if len(coeffs) > 1 else IntPoly([1])


polys = st.lists(st.integers(-50, 50), min_size=0, max_size=8).map(IntPoly)


class TestIntPoly:
    def test_trailing_zeros_stripped(self):
        assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPoly([0, 0]).degree == -1

    def test_text_round_trip(self):
        f = IntPoly.parse("3,-8,6")
        assert f.coeffs == (3, -8, 6)
        assert IntPoly.parse(f.format()) == f

    def test_arithmetic(self):
        f = IntPoly([1, 1])
        assert f * f == IntPoly([1, 2, 1])
        assert f * f - f == IntPoly([0, 1, 1])
        assert (f * 3).coeffs == (3, 3)
        assert IntPoly([1, 2, 3]).derivative() == IntPoly([2, 6])

    def test_primitive(self):
        assert IntPoly([-4, 6, -2]).primitive() == IntPoly([2, -3, 1])

    def test_reciprocal(self):
        assert IntPoly([1, 2, 3]).reciprocal() == IntPoly([3, 2, 1])


class TestBinomial:
    def test_examples(self):
        assert binomial(5, 0) == 1
        assert binomial(10, 5) == 252
        assert binomial(3, 5) == 0

    def test_against_pascal(self):
        tri = pascal(80)
        for n, row in enumerate(tri):
            assert [binomial(n, j) for j in range(n + 1)] == row
            assert binomial(n, n + 1) == 0


class TestBuild:
    def test_pnk_examples(self):
        assert build_pnk(3, 2) == IntPoly([1, 3, 3])
        cube = IntPoly([1, 1]) * IntPoly([1, 1]) * IntPoly([1, 1])
        assert build_pnk(3, 2) == cube - IntPoly([0, 0, 0, 1])
        assert build_pnk(7, 1) == IntPoly([1, 7])
        assert build_pnk(4, 2) == IntPoly([1, 4, 6])

    def test_pnk_full_row_is_difference_of_powers(self):
        for n in range(2, 25):
            full = IntPoly(math.comb(n, j) for j in range(n + 1))
            assert build_pnk(n, n - 1) == full - IntPoly([0] * n + [1])

    @pytest.mark.parametrize("n,k", [(3, 0), (3, 3), (1, 1)])
    def test_pnk_range(self, n, k):
        with pytest.raises(ValueError):
            build_pnk(n, k)

    def test_shifted_coeffs_example(self):
        assert shifted_coeffs(4, 2) == [3, -8, 6]

    def test_shifted_coeffs_endpoints(self):
        for n in range(2, 40):
            for k in range(1, n):
                c = shifted_coeffs(n, k)
                assert c[k] == math.comb(n, k)
                assert c[0] == (-1) ** k * math.comb(n - 1, k)

    def test_shifted_matches_shift_oracle(self):
        for n in range(2, 61):
            for k in range(1, n):
                assert list(naive_shift(build_pnk(n, k), -1).coeffs) == shifted_coeffs(n, k)

    def test_fnk_ones(self):
        assert build_fnk(FnkSpec.ones(4, 2)) == IntPoly([3, -8, 6])

    def test_fnk_factorial_reciprocal(self):
        # (n-k-1)!/n! * x^k F(1/x) == sum_i x^i / (n-k+i)
        from fractions import Fraction
        for n in range(3, 15):
            for k in range(1, n - 1):
                f = build_fnk(FnkSpec.factorial(n, k))
                scale = Fraction(math.factorial(n - k - 1), math.factorial(n))
                rec = [scale * c for c in f.reciprocal().coeffs]
                assert rec == [Fraction(1, n - k + i) for i in range(k + 1)]

    def test_fnk_rejects_rough_multiplier(self):
        with pytest.raises(ValueError):
            FnkSpec(10, 3, (1, 5, 1, 1))
        with pytest.raises(ValueError):
            FnkSpec(10, 3, (1, 0, 1, 1))
        with pytest.raises(ValueError):
            FnkSpec(10, 3, (1, 1, 1))

    def test_fnk_no_zero_coefficients(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(3, 60)
            k = rng.randint(1, n - 2)
            a = [rng.choice([1, -1, 2, -2]) if k >= 2 else rng.choice([1, -1])
                 for _ in range(k + 1)]
            f = build_fnk(FnkSpec(n, k, a))
            assert f.degree == k and all(f.coeffs)


class TestShift:
    def test_examples(self):
        assert taylor_shift(IntPoly([0, 0, 1]), 1) == IntPoly([1, 2, 1])
        assert taylor_shift(IntPoly([1, 4, 6]), -1) == IntPoly([3, -8, 6])
        f = IntPoly([5, -3, 2, 7])
        assert taylor_shift(f, 0) == f

    @given(polys, st.integers(-20, 20))
    def test_matches_naive(self, f, a):
        assert taylor_shift(f, a) == naive_shift(f, a)

    @given(polys, st.integers(-20, 20))
    def test_round_trip(self, f, a):
        assert taylor_shift(taylor_shift(f, a), -a) == f


class TestGcd:
    def test_examples(self):
        assert primitive_gcd(IntPoly([-1, 0, 1]), IntPoly([1, -2, 1])) == IntPoly([-1, 1])
        f = IntPoly([4, 8, 4])
        assert primitive_gcd(f, f) == IntPoly([1, 2, 1])
        assert primitive_gcd(build_pnk(5, 2), build_pnk(5, 3)) == IntPoly([1])

    def test_pseudo_remainder_identity(self):
        rng = random.Random(0)
        for _ in range(200):
            f = IntPoly(rng.randint(-9, 9) for _ in range(rng.randint(1, 8)))
            g = IntPoly(rng.randint(-9, 9) for _ in range(rng.randint(1, 5)))
            if not g or f.degree < g.degree:
                continue
            r = pseudo_rem(f, g)
            # lc(g)^(delta+1) f - r must be divisible by g over Q
            scaled = f * g.lc ** (f.degree - g.degree + 1) - r
            assert r.degree < g.degree
            if scaled:
                assert primitive_gcd(scaled, g).degree == g.degree

    @settings(max_examples=300)
    @given(polys, polys, polys)
    def test_against_sympy(self, a, b, c):
        f, g = a * c, b * c
        if not f or not g:
            return
        assert primitive_gcd(f, g) == sympy_gcd(f, g)

    def test_zero_arguments(self):
        assert primitive_gcd(IntPoly([2, 4]), IntPoly()) == IntPoly([1, 2])
        with pytest.raises(ValueError):
            primitive_gcd(IntPoly(), IntPoly())


class TestIdentities:
    def test_simple_roots_example(self):
        p = build_pnk(4, 2)
        assert p * 4 - IntPoly([1, 1]) * p.derivative() == IntPoly([0, 0, 12])
        assert verify_simple_roots_identity(4, 2)

    def test_simple_roots_all(self):
        for n in range(2, 61):
            for k in range(1, n):
                assert verify_simple_roots_identity(n, k)
                p = build_pnk(n, k)
                if n <= 30:
                    assert primitive_gcd(p, p.derivative()).degree == 0

    def test_alt_sum_examples(self):
        assert verify_alt_sum(0, 5)
        assert 1 - 4 + 6 == 3 == math.comb(3, 2)
        assert verify_alt_sum(2, 4)
        assert all(verify_alt_sum(b, b) for b in range(0, 30))

    def test_alt_sum_range(self):
        assert all(verify_alt_sum(a, b) for b in range(201) for a in range(b + 1))
