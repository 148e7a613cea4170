"""Pure-Python hot kernels.

Same call signatures as the compiled ``_ckernels`` module. Polynomials
mod p are ascending coefficient lists with residues in ``[0, p)`` and no
trailing zeros; the zero polynomial is ``[]``.
"""

import numpy as np

BACKEND = "python"


def sieve(limit):
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    i = 2
    while i * i <= limit:
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
        i += 1
    return [i for i, f in enumerate(flags) if f]


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def polrem(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    nb = len(b)
    inv = pow(b[-1], -1, p)
    while len(a) >= nb:
        q = a[-1] * inv % p
        shift = len(a) - nb
        if q:
            for i in range(nb):
                a[shift + i] = (a[shift + i] - q * b[i]) % p
        a.pop()
        _trim(a)
    return a


def polmulmod(a, b, m, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return polrem(prod, m, p)


def polpowmod(base, e, m, p):
    result = polrem([1], m, p)
    base = polrem(base, m, p)
    while e:
        if e & 1:
            result = polmulmod(result, base, m, p)
        e >>= 1
        if e:
            base = polmulmod(base, base, m, p)
    return result


def polgcd(a, b, p):
    """Monic gcd mod p."""
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, polrem(a, b, p)
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def thue_candidates(a, b, d, c, bound):
    """Pairs (x, y), 1 <= x <= bound, y >= 1, passing a mod-2**64 screen
    for a*x**d - b*y**d == c.

    y is taken from floor(((a x^d - c)/b)^(1/d)) +- 1 in floating point, so
    every true solution is among the candidates. Callers re-verify exactly.
    """
    if bound < 1:
        return []
    out = []
    chunk = 1 << 18
    mask = (1 << 64) - 1
    au, bu, cu = (np.uint64(a & mask), np.uint64(b & mask), np.uint64(c & mask))
    for start in range(1, bound + 1, chunk):
        x = np.arange(start, min(start + chunk, bound + 1), dtype=np.float64)
        t = (float(a) * x**d - float(c)) / float(b)
        ok = t >= 0.5
        if not ok.any():
            continue
        x, t = x[ok], t[ok]
        y0 = np.floor(t ** (1.0 / d))
        xu = x.astype(np.uint64)
        with np.errstate(over="ignore"):
            lhs = au * xu**np.uint64(d)
            for off in (-1.0, 0.0, 1.0):
                y = y0 + off
                good = y >= 1.0
                yu = np.where(good, y, 1.0).astype(np.uint64)
                rhs = bu * yu**np.uint64(d) + cu
                hit = good & (lhs == rhs)
                if hit.any():
                    out.extend(zip(xu[hit].tolist(), yu[hit].tolist()))
    return out
