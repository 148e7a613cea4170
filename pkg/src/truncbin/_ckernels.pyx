# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; mirrors ``_pykernels`` call for call.

Residue arithmetic uses 64-bit signed integers, so the modulus must stay
below 2**31.
"""

from libc.math cimport cbrt, floor, pow as cpow
from libc.stdlib cimport free, malloc

ctypedef long long i64
ctypedef unsigned long long u64

BACKEND = "cython"

cdef i64 MAX_MODULUS = 1 << 31


def sieve(i64 limit):
    cdef i64 i, j
    cdef unsigned char* flags
    if limit < 2:
        return []
    flags = <unsigned char*> malloc(limit + 1)
    if flags == NULL:
        raise MemoryError()
    try:
        for i in range(limit + 1):
            flags[i] = 1
        flags[0] = 0
        flags[1] = 0
        i = 2
        while i * i <= limit:
            if flags[i]:
                j = i * i
                while j <= limit:
                    flags[j] = 0
                    j += i
            i += 1
        return [i for i in range(2, limit + 1) if flags[i]]
    finally:
        free(flags)


cdef i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if r != 1:
        raise ZeroDivisionError("not invertible")
    return t + p if t < 0 else t


cdef i64* _load(list a, i64 p, int* n) except NULL:
    cdef int m = len(a)
    cdef int i
    cdef i64* buf = <i64*> malloc((m if m > 0 else 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = a[i] % p
    while m > 0 and buf[m - 1] == 0:
        m -= 1
    n[0] = m
    return buf


cdef list _dump(i64* a, int n):
    return [a[i] for i in range(n)]


cdef int _rem(i64* a, int na, i64* b, int nb, i64 p) except -1:
    cdef i64 inv, q
    cdef int i, shift
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv = _inv(b[nb - 1], p)
    while na >= nb:
        q = a[na - 1] * inv % p
        shift = na - nb
        if q:
            for i in range(nb):
                a[shift + i] = (a[shift + i] - q * b[i]) % p
                if a[shift + i] < 0:
                    a[shift + i] += p
        na -= 1
        while na > 0 and a[na - 1] == 0:
            na -= 1
    return na


cdef int _mulmod(i64* a, int na, i64* b, int nb, i64* m, int nm,
                 i64* out, i64 p) except -1:
    # out must hold na + nb - 1 entries
    cdef int i, j, n
    cdef i64 ai
    if na == 0 or nb == 0:
        return 0
    n = na + nb - 1
    for i in range(n):
        out[i] = 0
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] = (out[i + j] + ai * b[j]) % p
    while n > 0 and out[n - 1] == 0:
        n -= 1
    return _rem(out, n, m, nm, p)


def _check_modulus(i64 p):
    if p < 2 or p >= MAX_MODULUS:
        raise ValueError("modulus out of range for compiled kernels")


def polrem(list a, list b, i64 p):
    cdef int na, nb
    cdef i64* ab
    cdef i64* bb
    _check_modulus(p)
    ab = _load(a, p, &na)
    try:
        bb = _load(b, p, &nb)
        try:
            na = _rem(ab, na, bb, nb, p)
            return _dump(ab, na)
        finally:
            free(bb)
    finally:
        free(ab)


def polmulmod(list a, list b, list m, i64 p):
    return polpowmod_generic(a, b, m, p, 0)


cdef polpowmod_generic(list a, list b, list m, i64 p, object e):
    # e == 0: return a*b mod m; otherwise return a**e mod m (b ignored)
    cdef int na, nb, nm, nr, nt, i, cap
    cdef i64* ab = NULL
    cdef i64* bb = NULL
    cdef i64* mb = NULL
    cdef i64* rb = NULL
    cdef i64* tmp = NULL
    _check_modulus(p)
    try:
        mb = _load(m, p, &nm)
        if nm == 0:
            raise ZeroDivisionError("polynomial division by zero")
        cap = 2 * nm + 2
        tmp = <i64*> malloc(cap * sizeof(i64))
        rb = <i64*> malloc(cap * sizeof(i64))
        if tmp == NULL or rb == NULL:
            raise MemoryError()
        # reduced base lives in a cap-sized buffer so in-place squaring fits
        bb = _load(a, p, &na)
        na = _rem(bb, na, mb, nm, p)
        ab = <i64*> malloc(cap * sizeof(i64))
        if ab == NULL:
            raise MemoryError()
        for i in range(na):
            ab[i] = bb[i]
        free(bb)
        bb = NULL
        if e == 0:
            bb = _load(b, p, &nb)
            nb = _rem(bb, nb, mb, nm, p)
            nr = _mulmod(ab, na, bb, nb, mb, nm, tmp, p)
            return _dump(tmp, nr)
        rb[0] = 1
        nr = _rem(rb, 1, mb, nm, p)
        while e:
            if e & 1:
                nt = _mulmod(rb, nr, ab, na, mb, nm, tmp, p)
                for i in range(nt):
                    rb[i] = tmp[i]
                nr = nt
            e >>= 1
            if e:
                nt = _mulmod(ab, na, ab, na, mb, nm, tmp, p)
                for i in range(nt):
                    ab[i] = tmp[i]
                na = nt
        return _dump(rb, nr)
    finally:
        free(ab)
        free(bb)
        free(mb)
        free(rb)
        free(tmp)


def polpowmod(list base, e, list m, i64 p):
    if e < 0:
        raise ValueError("negative exponent")
    if e == 0:
        return polrem([1], m, p)
    return polpowmod_generic(base, [], m, p, e)


def polgcd(list a, list b, i64 p):
    cdef int na, nb, i
    cdef i64* ab
    cdef i64* bb
    cdef i64* swap
    cdef i64 inv
    _check_modulus(p)
    ab = _load(a, p, &na)
    bb = _load(b, p, &nb)
    try:
        # buffers swap roles, so both need room for the larger operand
        if nb > na:
            ab, bb = bb, ab
            na, nb = nb, na
        while nb:
            na = _rem(ab, na, bb, nb, p)
            ab, bb = bb, ab
            na, nb = nb, na
        if na == 0:
            return []
        inv = _inv(ab[na - 1], p)
        return [ab[i] * inv % p for i in range(na)]
    finally:
        free(ab)
        free(bb)


cdef inline u64 _upow(u64 x, int d):
    cdef u64 r = 1
    cdef int i
    for i in range(d):
        r *= x
    return r


cdef inline double _dpow(double x, int d):
    cdef double r = 1.0
    cdef int i
    for i in range(d):
        r *= x
    return r


def thue_candidates(a, b, int d, c, i64 bound):
    cdef u64 mask = (1 << 64) - 1
    cdef u64 au = a & mask, bu = b & mask, cu = c & mask
    cdef double af = float(a), bf = float(b), cf = float(c), inv_d = 1.0 / d
    cdef double t, root
    cdef i64 x, y, y0
    cdef u64 rhs
    cdef bint cube = d == 3
    out = []
    for x in range(1, bound + 1):
        t = (af * _dpow(<double> x, d) - cf) / bf
        if t < 0.5:
            continue
        root = cbrt(t) if cube else cpow(t, inv_d)
        y0 = <i64> floor(root)
        # b y^d must equal a x^d - c modulo 2^64
        rhs = au * _upow(<u64> x, d) - cu
        for y in range(y0 - 1, y0 + 2):
            if y >= 1 and bu * _upow(<u64> y, d) == rhs:
                out.append((x, y))
    return out
