"""Fundamental units and class numbers of quadratic fields."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from . import kernels
from .arith import factor, fundamental_discriminant, imaginary_discriminant, is_squarefree
from .bernoulli import gen_bernoulli_exact, quadratic_character
from .errors import DomainError, InternalConsistencyError, ResourceError

DEFAULT_PERIOD_BOUND = 10**8
CLASS_NUMBER_MAX_D = 10**6


@dataclass(frozen=True)
class FundamentalUnit:
    """eps = (t + u sqrt d)/2 if delta == 1, else t + u sqrt d."""

    d: int
    t: int
    u: int
    delta: int
    norm: int
    period_length: int = 0

    def __post_init__(self):
        target = 4 if self.delta == 1 else 1
        if self.t * self.t - self.d * self.u * self.u != self.norm * target:
            raise InternalConsistencyError(f"unit equation fails for d={self.d}")


@dataclass(frozen=True)
class UnitResidue:
    d: int
    p: int
    k: int
    t_mod: int
    u_mod: int
    delta: int
    norm: int
    period_length: int


def _check_d(d: int):
    if d <= 1:
        raise DomainError(f"d must exceed 1, got {d}")
    if not is_squarefree(d):
        raise DomainError(f"{d} is not squarefree")


def fundamental_unit(d: int, period_bound: int = DEFAULT_PERIOD_BOUND) -> FundamentalUnit:
    """Exact unit from the period of (1 + sqrt d)/2 (d = 1 mod 4) or sqrt d."""
    _check_d(d)
    delta = fundamental_discriminant(d).delta
    if delta == 1:
        P, Q = 1, 2
    else:
        P, Q = 0, 1
    Q0 = Q
    s = isqrt(d)
    h1, h0, k1, k0 = 1, 0, 0, 1
    L = 0
    while True:
        a = (P + s) // Q
        h1, h0 = a * h1 + h0, h1
        k1, k0 = a * k1 + k0, k1
        P = a * Q - P
        Q = (d - P * P) // Q
        L += 1
        if Q == Q0:
            break
        if L >= period_bound:
            raise ResourceError(f"continued fraction period of d={d} exceeds {period_bound}")
    t = 2 * h1 - k1 if delta == 1 else h1
    u = k1
    target = 4 if delta == 1 else 1
    norm = (t * t - d * u * u) // target
    return FundamentalUnit(d, t, u, delta, norm, L)


def fundamental_unit_mod(
    d: int, p: int, k: int = 1, period_bound: int = DEFAULT_PERIOD_BOUND
) -> UnitResidue:
    """(t, u) mod p^k without building the exact unit; the CF state stays exact."""
    _check_d(d)
    if p == 2 or p < 2:
        raise DomainError("p must be an odd prime")
    delta = fundamental_discriminant(d).delta
    t, u, L, norm = kernels.cf_unit_mod_checked(d, p**k, period_bound)
    if L < 0:
        raise ResourceError(f"continued fraction period of d={d} exceeds {period_bound}")
    return UnitResidue(d, p, k, t, u, delta, norm, L)


# -- real class numbers -----------------------------------------------------


def _divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factor(n).primes:
        divs = [x * q**i for x in divs for i in range(e + 1)]
    return divs


def reduced_indefinite_forms(D: int) -> list[tuple[int, int, int]]:
    """All reduced forms (a, b, c) of discriminant D > 0:
    0 < b < sqrt D and sqrt D - b < 2|a| < sqrt D + b."""
    s = isqrt(D)
    forms = []
    for b in range(2 if D % 2 == 0 else 1, s + 1, 2):
        if (b * b - D) % 4:
            continue
        n = (D - b * b) // 4  # = -a c > 0
        for a in _divisors(n):
            # strict inequalities against the irrational sqrt D, in integers
            if 2 * a + b > s and 2 * a - b <= s:
                c = -n // a
                forms.append((a, b, c))
                forms.append((-a, b, -c))
    return forms


def _rho(form: tuple[int, int, int], D: int, s: int) -> tuple[int, int, int]:
    a, b, c = form
    m = 2 * abs(c)
    b2 = s - (s + b) % m
    return (c, b2, (b2 * b2 - D) // (4 * c))


def narrow_class_number(D: int) -> int:
    """Number of cycles of reduced forms of discriminant D (= h+)."""
    s = isqrt(D)
    forms = set(reduced_indefinite_forms(D))
    seen = set()
    cycles = 0
    for f in forms:
        if f in seen:
            continue
        cycles += 1
        g = f
        while g not in seen:
            seen.add(g)
            g = _rho(g, D, s)
            if g not in forms:
                raise InternalConsistencyError(f"rho left the reduced set at {g}")
    return cycles


def class_number_real(d: int, unit: FundamentalUnit | None = None) -> int:
    """h(Q(sqrt d)) = h+ if N(eps) = -1 else h+/2."""
    _check_d(d)
    if d > CLASS_NUMBER_MAX_D:
        raise ResourceError(f"class numbers are computed only for d <= {CLASS_NUMBER_MAX_D}")
    D = fundamental_discriminant(d).D
    hplus = narrow_class_number(D)
    if unit is None:
        unit = fundamental_unit(d)
    if unit.norm == -1:
        return hplus
    if hplus % 2:
        raise InternalConsistencyError(f"odd narrow class number with N(eps)=+1 for d={d}")
    return hplus // 2


# -- imaginary class numbers ------------------------------------------------


def _check_imag(m: int) -> int:
    D = imaginary_discriminant(m)
    if D in (-3, -4):
        raise DomainError("discriminants -3 and -4 carry extra units; excluded")
    return D


def class_number_imag(m: int) -> int:
    """H(Q(sqrt -m)) = -B_{1,chi_D}, valid for D < -4."""
    D = _check_imag(m)
    b = gen_bernoulli_exact(1, quadratic_character(D))
    if b.denominator != 1:
        raise InternalConsistencyError(f"-B_1,chi is not an integer for D={D}")
    return -b.numerator


def class_number_imag_forms(m: int) -> int:
    """Count reduced positive definite forms |b| <= a <= c of discriminant D."""
    D = _check_imag(m)
    count = 0
    amax = isqrt(-D // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            count += 1
    return count
