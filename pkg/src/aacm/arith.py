"""Integer utilities: factorization, Kronecker symbols, discriminants, modular inverses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .errors import DomainError

MAX_FACTOR = 2**63

# wheel of increments over residues coprime to 30, starting at 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@dataclass(frozen=True)
class Factorization:
    n: int
    primes: tuple[tuple[int, int], ...]

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for _, e in self.primes)

    @property
    def prime_divisors(self) -> list[int]:
        return [q for q, _ in self.primes]

    @property
    def odd_prime_divisors(self) -> list[int]:
        return [q for q, _ in self.primes if q != 2]

    def value(self) -> int:
        out = 1
        for q, e in self.primes:
            out *= q**e
        return out


def factor(n: int) -> Factorization:
    """Trial division with a mod-30 wheel."""
    if n <= 0:
        raise DomainError(f"factor needs a positive integer, got {n}")
    if n > MAX_FACTOR:
        raise DomainError(f"{n} exceeds the trial-division bound 2^63")
    primes = []
    m = n
    for q in (2, 3, 5):
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            primes.append((q, e))
    q = 7
    i = 0
    while q * q <= m:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            primes.append((q, e))
        q += _WHEEL[i]
        i = (i + 1) & 7
    if m > 1:
        primes.append((m, 1))
    return Factorization(n, tuple(primes))


def is_squarefree(n: int) -> bool:
    return n >= 1 and factor(n).squarefree


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n (Eratosthenes)."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, isqrt(n) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return np.flatnonzero(sieve).tolist()


def valuation(n: int, p: int) -> int:
    """v_p(n); raises on n = 0 (infinite valuation)."""
    if n == 0:
        raise DomainError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ilog(n: int, p: int) -> int:
    """Largest e with p**e <= n, for n >= 1."""
    e, q = 0, p
    while q <= n:
        q *= p
        e += 1
    return e


def mod_inv(a: int, m: int) -> int:
    if m <= 0:
        raise DomainError("modulus must be positive")
    if gcd(a, m) != 1:
        raise DomainError(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m) if m > 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for arbitrary integers D, n."""
    if n == 0:
        return 1 if D in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if D < 0:
            sign = -1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if D % 2 == 0:
            return 0
        if v % 2 == 1 and D % 8 in (3, 5):
            sign = -sign
    # Jacobi symbol (D/n) for odd n > 0
    a = D % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1:
        return True
    if D in (0,):
        return False
    if D % 4 == 1:
        return is_squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False


@dataclass(frozen=True)
class DiscriminantData:
    d: int
    D: int
    delta: int


def fundamental_discriminant(d: int) -> DiscriminantData:
    """Discriminant D and delta for Q(sqrt d), d > 1 squarefree."""
    if d <= 1:
        raise DomainError(f"d must exceed 1, got {d}")
    if not is_squarefree(d):
        raise DomainError(f"{d} is not squarefree")
    if d % 4 == 1:
        return DiscriminantData(d, d, 1)
    return DiscriminantData(d, 4 * d, 2)


def imaginary_discriminant(m: int) -> int:
    """Discriminant of Q(sqrt(-m)) for squarefree m > 0."""
    if m <= 0 or not is_squarefree(m):
        raise DomainError(f"{m} must be a positive squarefree integer")
    return -m if (-m) % 4 == 1 else -4 * m


@dataclass(frozen=True)
class RationalModPk:
    numerator: int
    denominator: int
    p: int
    k: int
    reduced: int = field(init=False)

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("precision k must be >= 1")
        if self.denominator <= 0:
            raise DomainError("denominator must be positive")
        if self.denominator % self.p == 0:
            raise DomainError(f"denominator {self.denominator} divisible by p={self.p}")
        pk = self.p**self.k
        object.__setattr__(self, "reduced", self.numerator * pow(self.denominator, -1, pk) % pk)

    @classmethod
    def from_fraction(cls, x: Fraction, p: int, k: int = 1) -> RationalModPk:
        return cls(x.numerator, x.denominator, p, k)

    def __int__(self):
        return self.reduced
