"""Bernoulli, Euler and generalized Bernoulli numbers, exactly and modulo p.

Euler numbers follow the 1/cosh convention (E_2 = -1, E_4 = 5, E_6 = -61).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from . import kernels
from .arith import fundamental_discriminant, is_fundamental_discriminant, legendre
from .errors import DomainError, PoleError, UnsupportedPrecisionError

EXACT_MAX = 64


@dataclass(frozen=True, eq=False)
class QuadChar:
    """Real primitive character n -> (disc/n), stored as a table over one period."""

    disc: int
    table: np.ndarray

    @property
    def modulus(self) -> int:
        return abs(self.disc)

    conductor = modulus

    @property
    def parity(self) -> str:
        return "even" if self.disc > 0 else "odd"

    @property
    def is_principal(self) -> bool:
        return self.disc == 1

    def __call__(self, a: int) -> int:
        return int(self.table[a % self.modulus])

    def __eq__(self, other):
        return isinstance(other, QuadChar) and other.disc == self.disc

    def __hash__(self):
        return hash(self.disc)

    def __repr__(self):
        return f"QuadChar(disc={self.disc})"


@lru_cache(maxsize=256)
def quadratic_character(D: int) -> QuadChar:
    """The Kronecker character of a fundamental discriminant D (1 = principal)."""
    if not is_fundamental_discriminant(D):
        raise DomainError(f"{D} is not a fundamental discriminant")
    if D == 1:
        return QuadChar(1, np.ones(1, dtype=np.int8))
    return QuadChar(D, kernels.kronecker_table(D, abs(D)))


def principal_character() -> QuadChar:
    return quadratic_character(1)


def p_star(p: int) -> int:
    """(-1)^((p-1)/2) p, the discriminant whose character is the Legendre symbol mod p."""
    return p if p % 4 == 1 else -p


def build_psi(d: int, p: int) -> QuadChar:
    """psi_m(n) = (n/p) chi_D(n) as a primitive character of conductor D/p.

    Values on one period of length D/p are built from the product formula, using a
    representative prime to p for each residue, and checked against (D/p*, n).
    """
    if p == 2 or d % p != 0:
        raise DomainError(f"p={p} must be an odd prime dividing d={d}")
    D = fundamental_discriminant(d).D
    f = D // p
    if f == 1:
        table = np.ones(1, dtype=np.int8)
    else:
        # representative of each residue class mod f that is prime to p
        rep = np.arange(f, dtype=np.int64)
        rep[0] = f
        bad = rep % p == 0
        while bad.any():
            rep[bad] += f
            bad = rep % p == 0
        leg = np.array([0] + [legendre(a, p) for a in range(1, p)], dtype=np.int8)
        chiD = kernels.kronecker_table(D, D)
        table = (leg[rep % p] * chiD[rep % D]).astype(np.int8)
    Dpsi = D // p_star(p)
    expected = quadratic_character(Dpsi)
    if abs(Dpsi) != f or not np.array_equal(expected.table, table):
        raise DomainError(f"psi for d={d}, p={p} does not have conductor D/p")
    return expected


def twist_by_legendre(chi: QuadChar, p: int) -> QuadChar:
    """chi times the Legendre symbol mod p, as a primitive character."""
    if chi.disc % p == 0:
        return quadratic_character(chi.disc // p_star(p))
    return quadratic_character(chi.disc * p_star(p))


# -- Bernoulli numbers ------------------------------------------------------

_exact_cache: list[Fraction] = [Fraction(1)]
_exact_lock = threading.Lock()


def bernoulli_exact(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > EXACT_MAX:
        raise UnsupportedPrecisionError(f"exact Bernoulli numbers are capped at n={EXACT_MAX}")
    with _exact_lock:
        for m in range(len(_exact_cache), n + 1):
            s = sum(comb(m + 1, k) * _exact_cache[k] for k in range(m))
            _exact_cache.append(-s / (m + 1))
        return _exact_cache[n]


_table_cache: dict[int, list[int]] = {}
_table_lock = threading.Lock()


def bernoulli_table_mod_p(nmax: int, p: int) -> list[int]:
    """[B_0, ..., B_nmax] mod p for nmax <= p - 2, memoized per p."""
    if nmax > p - 2:
        raise PoleError(f"B_{p - 1} has p={p} in its denominator; need nmax <= p-2")
    cached = _table_cache.get(p)
    if cached is not None and len(cached) > nmax:
        return cached[: nmax + 1]
    with _table_lock:
        cached = _table_cache.get(p)
        if cached is None or len(cached) <= nmax:
            # extend geometrically so repeated small requests stay cheap
            target = min(p - 2, max(nmax, 2 * len(cached or ())))
            cached = kernels.bernoulli_table_mod_p(target, p)
            _table_cache[p] = cached
    return cached[: nmax + 1]


def bernoulli_mod_p(n: int, p: int) -> int:
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return 1 % p
    if n % (p - 1) == 0:
        raise PoleError(f"(p-1) | n: B_{n} has p={p} in its denominator")
    if n >= 3 and n % 2 == 1:
        return 0
    if n <= p - 2:
        return bernoulli_table_mod_p(n, p)[n]
    if n <= EXACT_MAX:
        b = bernoulli_exact(n)
        return b.numerator * pow(b.denominator, -1, p) % p
    raise UnsupportedPrecisionError(f"B_{n} mod {p} needs n <= p-2 or n <= {EXACT_MAX}")


# -- Euler numbers ----------------------------------------------------------


def _check_convention(convention: str):
    if convention not in ("cosh", "cos"):
        raise DomainError("convention must be 'cosh' or 'cos'")


@lru_cache(maxsize=None)
def _euler_exact_list(n: int) -> tuple[int, ...]:
    E = [1]
    for r in range(1, n + 1):
        if r % 2:
            E.append(0)
        else:
            E.append(-sum(comb(r, j) * E[j] for j in range(0, r, 2)))
    return tuple(E)


def euler_exact(n: int, convention: str = "cosh") -> int:
    _check_convention(convention)
    e = _euler_exact_list(n)[n]
    if convention == "cos" and n % 4 == 2:
        e = -e
    return e


def euler_table_mod_p(n: int, p: int) -> list[int]:
    """[E_0, ..., E_n] mod p (1/cosh convention) via sum_j C(2m, 2j) E_2j = 0."""
    big = p >= 1 << 31
    dt = object if big else np.int64
    E = np.zeros(n + 1, dtype=dt)
    E[0] = 1 % p
    row = np.ones(1, dtype=dt)
    for r in range(1, n + 1):
        nxt = np.zeros(r + 1, dtype=dt)
        nxt[:-1] += row
        nxt[1:] += row
        row = nxt % p
        if r % 2 == 0:
            E[r] = -int((row[0:r:2] * E[0:r:2] % p).sum()) % p
    return [int(x) for x in E]


def euler_mod_p(n: int, p: int, convention: str = "cosh") -> int:
    _check_convention(convention)
    if n < 0:
        raise DomainError("n must be >= 0")
    e = euler_table_mod_p(n, p)[n]
    if convention == "cos" and n % 4 == 2:
        e = -e % p
    return e


# -- generalized Bernoulli numbers -----------------------------------------


def _char_power_sums_exact(chi: QuadChar, n: int) -> list[int]:
    f = chi.modulus
    S = [0] * (n + 1)
    for a in range(1, f + 1):
        c = chi(a)
        if c:
            x = c
            for k in range(n + 1):
                S[k] += x
                x *= a
    return S


def gen_bernoulli_exact(n: int, chi: QuadChar) -> Fraction:
    """B_{n,chi} = f^(n-1) sum_a chi(a) B_n(a/f), expanded as
    sum_j C(n,j) B_j f^(j-1) S_{n-j} with S_k = sum_a chi(a) a^k."""
    if n < 0:
        raise DomainError("n must be >= 0")
    f = chi.modulus
    S = _char_power_sums_exact(chi, n)
    total = Fraction(0)
    for j in range(n + 1):
        total += comb(n, j) * bernoulli_exact(j) * Fraction(f) ** (j - 1) * S[n - j]
    return total


def _char_power_sums_mod_p(chi: QuadChar, n: int, p: int) -> list[int]:
    f = chi.modulus
    big = p >= 1 << 31
    a = np.arange(1, f + 1, dtype=np.int64)
    c = chi.table[a % f].astype(np.int64)
    mask = c != 0
    a, c = a[mask] % p, c[mask]
    if big:
        a, c = a.astype(object), c.astype(object)
    pw = np.ones_like(a)
    S = [int(c.sum()) % p]
    for _ in range(n):
        pw = pw * a % p
        S.append(int((c * pw).sum()) % p)
    return S


def gen_bernoulli_mod_p(n: int, chi: QuadChar, p: int) -> int:
    if n < 0:
        raise DomainError("n must be >= 0")
    f = chi.modulus
    if f % p == 0:
        raise DomainError(f"conductor {f} is divisible by p={p}")
    if n > p - 2:
        if n > EXACT_MAX:
            raise PoleError(f"B_j mod {p} for j up to {n} crosses the (p-1) pole region")
        b = gen_bernoulli_exact(n, chi)
        if b.denominator % p == 0:
            raise PoleError(f"B_({n},chi) has p={p} in its denominator")
        return b.numerator * pow(b.denominator, -1, p) % p
    B = bernoulli_table_mod_p(n, p)
    S = _char_power_sums_mod_p(chi, n, p)
    finv = pow(f, -1, p)
    total = 0
    fpow = finv  # f^(j-1)
    binom = 1  # C(n, j) mod p; n < p keeps every j + 1 invertible
    for j in range(n + 1):
        total += binom * B[j] * fpow * S[n - j]
        fpow = fpow * f % p
        binom = binom * (n - j) * pow(j + 1, -1, p) % p
    return total % p
