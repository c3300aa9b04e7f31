"""Pure-Python hot kernels. Reference semantics for ``_ckernels``; selected when the
extension is unavailable or ``AACM_PURE=1``."""

from math import isqrt

import numpy as np

from .arith import kronecker


def cf_unit_mod(d, modulus, period_bound):
    """Fundamental unit of Q(sqrt d) reduced mod ``modulus``.

    Runs the continued fraction of (1 + sqrt d)/2 (d = 1 mod 4) or sqrt d with the
    exact state (P, Q) and the convergents only mod ``modulus``.
    Returns ``(t_mod, u_mod, period, norm)``; ``period == -1`` when the bound is hit.
    """
    if d % 4 == 1:
        P, Q = 1, 2
    else:
        P, Q = 0, 1
    Q0 = Q
    s = isqrt(d)
    M = modulus
    h1, h0 = 1 % M, 0
    k1, k0 = 0, 1 % M
    L = 0
    while True:
        a = (P + s) // Q
        h1, h0 = (a * h1 + h0) % M, h1
        k1, k0 = (a * k1 + k0) % M, k1
        P = a * Q - P
        Q = (d - P * P) // Q
        L += 1
        if Q == Q0:
            break
        if L >= period_bound:
            return 0, 0, -1, 0
    if Q0 == 2:
        # unit = h - k * (1 - sqrt d)/2 = ((2h - k) + k sqrt d)/2
        t = (2 * h1 - k1) % M
    else:
        t = h1
    return t, k1, L, -1 if L & 1 else 1


def bernoulli_table_mod_p(nmax, p):
    """B_0..B_nmax mod p by Akiyama-Tanigawa (B_1 = -1/2). Needs nmax <= p - 2."""
    if nmax > p - 2:
        raise ValueError("Akiyama-Tanigawa mod p needs nmax <= p - 2")
    # inv[i] reads inv[p % i] with p % i < i, so entries up to nmax + 1 suffice
    inv = [0, 1] + [0] * nmax
    for i in range(2, nmax + 2):
        inv[i] = -(p // i) * inv[p % i] % p
    A = [0] * (nmax + 1)
    out = []
    for m in range(nmax + 1):
        A[m] = inv[m + 1]
        for j in range(m, 0, -1):
            A[j - 1] = j * (A[j - 1] - A[j]) % p
        out.append(A[0])
    if nmax >= 1:
        out[1] = -out[1] % p
    return out


def kronecker_table(D, length):
    """int8 array of (D/a) for a = 0 .. length-1."""
    return np.array([kronecker(D, a) for a in range(length)], dtype=np.int8)


def fermat_quotient_sum(table, p, F):
    """sum over 1 <= a <= F, p not dividing a, of table[a mod len] * (a^(p-1) - 1)/p, mod p."""
    p2 = p * p
    n = len(table)
    vals = table.tolist()
    s = 0
    for a in range(1, F + 1):
        c = vals[a % n]
        if c == 0 or a % p == 0:
            continue
        s += c * ((pow(a, p - 1, p2) - 1) // p)
    return s % p
