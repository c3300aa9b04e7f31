# cython: language_level=3
"""Compiled hot kernels; same signatures and results as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t, int8_t
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) nogil:
    return <uint64_t>((<u128>a * b) % m)


cdef inline uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) nogil:
    cdef uint64_t r = 1 % m
    b %= m
    while e:
        if e & 1:
            r = mulmod(r, b, m)
        b = mulmod(b, b, m)
        e >>= 1
    return r


cdef uint64_t isqrt64(uint64_t n) nogil:
    cdef uint64_t x = n, y
    if n < 2:
        return n
    y = (x + 1) >> 1
    while y < x:
        x = y
        y = (x + n // x) >> 1
    return x


def cf_unit_mod(int64_t d, uint64_t modulus, int64_t period_bound):
    if d < 2 or d >= (1LL << 61):
        raise ValueError("d out of kernel range")
    cdef int64_t P, Q, Q0, s, a, L = 0
    cdef uint64_t M = modulus, h1, h0, k1, k0, tmp, t
    cdef bint fast
    if d % 4 == 1:
        P, Q = 1, 2
    else:
        P, Q = 0, 1
    Q0 = Q
    s = <int64_t>isqrt64(<uint64_t>d)
    h1, h0 = 1 % M, 0
    k1, k0 = 0, 1 % M
    # partial quotients satisfy a <= 2s + 1, so a * M must stay below 2^63
    fast = M < ((<uint64_t>1) << 63) // <uint64_t>(2 * s + 2)
    with nogil:
        while True:
            a = (P + s) // Q
            if fast:
                tmp = (<uint64_t>a * h1 + h0) % M
                h0 = h1
                h1 = tmp
                tmp = (<uint64_t>a * k1 + k0) % M
                k0 = k1
                k1 = tmp
            else:
                tmp = <uint64_t>((<u128>a * h1 + h0) % M)
                h0 = h1
                h1 = tmp
                tmp = <uint64_t>((<u128>a * k1 + k0) % M)
                k0 = k1
                k1 = tmp
            P = a * Q - P
            Q = (d - P * P) // Q
            L += 1
            if Q == Q0:
                break
            if L >= period_bound:
                L = -1
                break
    if L == -1:
        return 0, 0, -1, 0
    if Q0 == 2:
        t = <uint64_t>((2 * <u128>h1 + M - k1) % M)
    else:
        t = h1
    return int(t), int(k1), int(L), -1 if L & 1 else 1


def bernoulli_table_mod_p(int64_t nmax, int64_t p):
    if nmax > p - 2:
        raise ValueError("Akiyama-Tanigawa mod p needs nmax <= p - 2")
    if p >= (1LL << 31):
        raise ValueError("p too large for the compiled kernel")
    cdef int64_t *inv = <int64_t *>malloc((nmax + 2) * sizeof(int64_t))
    cdef int64_t *A = <int64_t *>malloc((nmax + 1) * sizeof(int64_t))
    cdef int64_t m, j, i
    out = np.empty(nmax + 1, dtype=np.int64)
    cdef int64_t[:] ov = out
    if inv == NULL or A == NULL:
        free(inv)
        free(A)
        raise MemoryError()
    try:
        inv[1] = 1
        for i in range(2, nmax + 2):
            inv[i] = (p - (p // i) * inv[p % i] % p) % p
        with nogil:
            for m in range(nmax + 1):
                A[m] = inv[m + 1]
                for j in range(m, 0, -1):
                    A[j - 1] = (j * ((A[j - 1] - A[j] + p) % p)) % p
                ov[m] = A[0]
    finally:
        free(inv)
        free(A)
    if nmax >= 1:
        ov[1] = (p - ov[1]) % p
    return out.tolist()


cdef int kron64(int64_t D, int64_t n) nogil:
    cdef int sign = 1, v = 0
    cdef int64_t a, t, dm8
    if n == 0:
        return 1 if (D == 1 or D == -1) else 0
    if n < 0:
        n = -n
        if D < 0:
            sign = -1
    while (n & 1) == 0:
        n >>= 1
        v += 1
    if v:
        if (D & 1) == 0:
            return 0
        dm8 = ((D % 8) + 8) % 8
        if (v & 1) and (dm8 == 3 or dm8 == 5):
            sign = -sign
    a = ((D % n) + n) % n
    while a:
        while (a & 1) == 0:
            a >>= 1
            if (n & 7) == 3 or (n & 7) == 5:
                sign = -sign
        t = a
        a = n
        n = t
        if (a & 3) == 3 and (n & 3) == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def kronecker(int64_t D, int64_t n):
    return kron64(D, n)


def kronecker_table(int64_t D, int64_t length):
    out = np.empty(length, dtype=np.int8)
    cdef int8_t[:] ov = out
    cdef int64_t a
    with nogil:
        for a in range(length):
            ov[a] = <int8_t>kron64(D, a)
    return out


def fermat_quotient_sum(const int8_t[:] table, int64_t p, int64_t F):
    if p >= (1LL << 31):
        raise ValueError("p too large for the compiled kernel")
    cdef uint64_t p2 = <uint64_t>p * p, x
    cdef int64_t n = table.shape[0], a, s = 0, c
    with nogil:
        for a in range(1, F + 1):
            c = table[a % n]
            if c == 0 or a % p == 0:
                continue
            x = powmod(<uint64_t>a, <uint64_t>(p - 1), p2)
            s = (s + c * <int64_t>((x - 1) // <uint64_t>p)) % p
    return int((s % p + p) % p)
