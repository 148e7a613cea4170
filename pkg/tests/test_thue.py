import pytest

from truncbin.certify import lemma2_gcd
from truncbin.primes import factorize
from truncbin.thue import (_iroot, case2_parameters, case3_parameters, divisors, n0_scan,
                           scan_all, scan_case2, scan_case3, smooth_modulus, solve_bounded)


def brute(a, b, d, c, bound, ymax):
    return [(x, y) for x in range(1, bound + 1) for y in range(1, ymax + 1)
            if a * x**d - b * y**d == c]


def test_case3_examples():
    assert scan_case3(3, 3, 1, 1, 100) == []
    assert scan_case3(7, 7, 1, 1, 100) == []
    assert scan_case3(3, 3, 1, 1, 0) == []
    assert scan_case3(6, 3, 4, 2, 0) == []


def test_case2_examples():
    assert scan_case2(4, 1, 1, 100) == []
    sols = scan_case2(4, 2, 1, 100)
    assert all(s.x >= 1 and s.y >= 1 for s in sols)
    assert sols == [s for s in sols if 2 * s.x**3 - s.y**3 == 2]
    assert scan_case2(4, 1, 1, 0) == []


def test_invalid_parameters():
    with pytest.raises(ValueError):
        scan_case3(4, 3, 1, 1, 10)  # 3 does not divide 4
    with pytest.raises(ValueError):
        scan_case3(3, 3, 5, 1, 10)  # 5 does not divide 2^2 3^2
    with pytest.raises(ValueError):
        scan_case2(5, 1, 1, 10)


def test_solver_matches_double_loop():
    for a, b, d, c in [(4, 1, 3, 3), (1, 3, 3, 3), (2, 1, 3, 3), (6, 3, 3, 3), (1, 12, 4, 4),
                       (2, 1, 3, 2), (1, 6, 3, 2)]:
        assert solve_bounded(a, b, d, c, 60) == brute(a, b, d, c, 60, 200)


def test_parameter_space_matches_divisor_conditions():
    for k in (3, 4, 6):
        params = list(case3_parameters(k))
        for d, a, b in params:
            m = smooth_modulus(k, d - 1)
            assert k % d == 0 and d >= 3 and m % a == 0 and m % b == 0
        expected = sum(len(divisors(smooth_modulus(k, d - 1))) ** 2
                       for d in range(3, k + 1) if k % d == 0)
        assert len(params) == expected
    assert smooth_modulus(3, 2) == 36 and divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    assert list(case2_parameters(5)) == []
    assert len(list(case2_parameters(4))) == 81


def test_iroot():
    for m in [0, 1, 7, 8, 9, 10**30, 10**30 - 1, 3**200]:
        for d in (2, 3, 5, 7):
            r = _iroot(m, d)
            assert r**d <= m < (r + 1) ** d


def test_solutions_resubstitute_and_have_large_d():
    for k in (3, 4, 6):
        for row in scan_all(k, bound=2000):
            c = k if row["case"] == 3 else k - 2
            for s in row["solutions"]:
                assert row["a"] * s.x ** row["d"] - row["b"] * s.y ** row["d"] == c
                if row["case"] == 3:
                    assert s.n == row["a"] * s.x ** row["d"]
                    if s.n - k >= 2:
                        assert lemma2_gcd(s.n, k).d >= 3
                else:
                    assert s.n == row["a"] * s.x ** row["d"] + 1


def test_n0_scan_k3():
    rows, unresolved = n0_scan(3, 200)
    assert [r.n for r in rows] == list(range(5, 201))
    for r in rows:
        if r.d == 1:
            assert r.resolved
        if r.d >= 3:
            # n = a m^d and n - k = b m'^d with a, b | prod_{p<=k} p^(d-1)
            m = smooth_modulus(3, r.d - 1)
            for val in (r.n, r.n - 3):
                a = 1
                for p, e in factorize(val):
                    a *= p ** (e % r.d)
                assert m % a == 0
    assert unresolved == []
