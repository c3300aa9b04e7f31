"""Truncated p-adic integers: Teichmuller lifts, unit parts, and the p-adic logarithm."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import ilog, valuation
from .errors import DomainError


@dataclass(frozen=True)
class PAdicApprox:
    """An element of Z_p known modulo p^k."""

    p: int
    k: int
    value: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("precision must be >= 1")
        object.__setattr__(self, "value", self.value % self.p**self.k)

    @classmethod
    def from_int(cls, a: int, p: int, k: int) -> PAdicApprox:
        return cls(p, k, a)

    @classmethod
    def from_fraction(cls, x: Fraction, p: int, k: int) -> PAdicApprox:
        if x.denominator % p == 0:
            raise DomainError(f"{x} is not p-integral for p={p}")
        pk = p**k
        return cls(p, k, x.numerator * pow(x.denominator, -1, pk))

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def valuation(self) -> int:
        """Largest j <= k with p^j | value; k means zero at this precision."""
        if self.value == 0:
            return self.k
        return valuation(self.value, self.p)

    def is_unit(self) -> bool:
        return self.value % self.p != 0

    def reduce(self, k: int) -> PAdicApprox:
        if k > self.k:
            raise DomainError("cannot raise precision by reduction")
        return PAdicApprox(self.p, k, self.value)

    def _coerce(self, other) -> PAdicApprox:
        if isinstance(other, PAdicApprox):
            if other.p != self.p:
                raise DomainError("mixing different primes")
            return other
        if isinstance(other, int):
            return PAdicApprox(self.p, self.k, other)
        if isinstance(other, Fraction):
            return PAdicApprox.from_fraction(other, self.p, self.k)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        k = min(self.k, o.k)
        return PAdicApprox(self.p, k, self.value + o.value)

    __radd__ = __add__

    def __neg__(self):
        return PAdicApprox(self.p, self.k, -self.value)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        k = min(self.k, o.k)
        return PAdicApprox(self.p, k, self.value * o.value)

    __rmul__ = __mul__

    def inverse(self) -> PAdicApprox:
        if not self.is_unit():
            raise DomainError("only units are invertible")
        return PAdicApprox(self.p, self.k, pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PAdicApprox(self.p, self.k, pow(self.value, e, self.modulus))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.modulus
        if isinstance(other, PAdicApprox):
            return (self.p, self.k, self.value) == (other.p, other.k, other.value)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.k, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"PAdicApprox({self.value} mod {self.p}^{self.k})"


def _check_unit(a: int, p: int):
    if a % p == 0:
        raise DomainError(f"{a} is not a unit at p={p}")


def teichmuller(a: int, p: int, k: int) -> PAdicApprox:
    """The (p-1)-st root of unity congruent to a mod p, to precision p^k."""
    _check_unit(a, p)
    pk = p**k
    x = a % p
    # each Frobenius step x -> x^p gains one p-adic digit
    for _ in range(k - 1):
        x = pow(x, p, pk)
    return PAdicApprox(p, k, x)


def unit_part(a: int, p: int, k: int) -> PAdicApprox:
    """<a> = a / omega(a), a principal unit."""
    _check_unit(a, p)
    return PAdicApprox(p, k, a) / teichmuller(a, p, k)


def _log1p_terms(z: int, p: int, k: int) -> int:
    """log(1 + z) mod p^k for an integer z with v_p(z) >= 1."""
    # term n is z^n/n with valuation >= n - v_p(n) >= n - ilog(n); stop once that reaches k
    N = 1
    while (N + 1) - ilog(N + 1, p) < k:
        N += 1
    K = k + ilog(N, p)
    pK = p**K
    pk = p**k
    total = 0
    zn = 1
    for n in range(1, N + 1):
        zn = zn * z % pK
        v = valuation(n, p)
        num = zn // p**v if v else zn
        term = num * pow(n // p**v, -1, pk)
        total += -term if n % 2 == 0 else term
    return total % pk


def plog(x: PAdicApprox | int, p: int | None = None, k: int | None = None) -> PAdicApprox:
    """Iwasawa p-adic logarithm of a unit: log of its principal-unit part."""
    if not isinstance(x, PAdicApprox):
        if p is None or k is None:
            raise DomainError("plog of an int needs p and k")
        x = PAdicApprox(p, k, x)
    if not x.is_unit():
        raise DomainError("plog is only implemented on units")
    p, k = x.p, x.k
    y = (x / teichmuller(x.value, p, k)).value
    z = (y - 1) % p**k
    if z == 0:
        return PAdicApprox(p, k, 0)
    return PAdicApprox(p, k, _log1p_terms(z, p, k))


def plog_eps_over_sqrtd(d: int, t: int, u: int, p: int, k: int) -> PAdicApprox:
    """log_p(eps)/sqrt(d) from the odd-power series in u/t, which lives in Z_p.

    Requires p | d (d squarefree) and p not dividing t.
    """
    if p == 2 or d % p != 0:
        raise DomainError(f"p={p} must be an odd prime divisor of d={d}")
    if t % p == 0:
        raise DomainError(f"p={p} divides t")
    m = d // p
    pk = p**k
    r = u * pow(t, -1, pk) % pk
    r2 = r * r % pk
    total = 0
    rpow = r
    n = 0
    # term n: p^n m^n r^(2n+1) / (2n+1), valuation >= n - v_p(2n+1) >= n - ilog(2n+1)
    while n - ilog(2 * n + 1, p) < k:
        q = 2 * n + 1
        v = valuation(q, p)
        # exact cancellation: d^n / p^v keeps an integer because n >= v
        coef = p ** (n - v) * pow(m, n, pk) * pow(q // p**v, -1, pk)
        total += coef * rpow
        rpow = rpow * r2 % pk
        n += 1
    return PAdicApprox(p, k, total)
