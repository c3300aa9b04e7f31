import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import log_eps_over_sqrtd_oracle

from aacm.arith import kronecker
from aacm.errors import DomainError
from aacm.padic import PAdicApprox, plog, plog_eps_over_sqrtd, teichmuller, unit_part
from aacm.quadfield import fundamental_unit


def test_teichmuller_examples():
    for p in (3, 5, 7, 11):
        for k in (1, 2, 4):
            assert teichmuller(1, p, k).value == 1
            assert teichmuller(p - 1, p, k).value == p**k - 1
    assert teichmuller(2, 5, 2).value == 7
    assert pow(7, 4, 25) == 1
    with pytest.raises(DomainError):
        teichmuller(10, 5, 2)


@pytest.mark.parametrize("p", [3, 5, 7, 13, 31])
@pytest.mark.parametrize("k", [1, 2, 4])
def test_teichmuller_root_of_unity(p, k):
    pk = p**k
    for a in range(1, p):
        w = teichmuller(a, p, k).value
        assert pow(w, p - 1, pk) == 1
        assert w % p == a


def test_teichmuller_multiplicative():
    for p in (3, 5, 7, 11, 13):
        pk = p**3
        for a in range(1, p):
            for b in range(1, p):
                ab = teichmuller(a * b, p, 3).value
                assert ab == teichmuller(a, p, 3).value * teichmuller(b, p, 3).value % pk


def test_unit_part():
    assert unit_part(1, 7, 3).value == 1
    assert unit_part(2, 5, 2).value == 2 * pow(7, -1, 25) % 25
    for a in range(1, 200):
        if a % 7:
            u = unit_part(a, 7, 3)
            assert u.value % 7 == 1
            assert u.value * teichmuller(a, 7, 3).value % 343 == a % 343


def test_omega_half_is_legendre():
    p = 11
    for a in range(1, p):
        w = pow(teichmuller(a, p, 3).value, (p - 1) // 2, p**3)
        sign = 1 if w == 1 else (-1 if w == p**3 - 1 else None)
        assert sign == kronecker(-11, a)


def test_plog_examples():
    for p in (3, 5, 7):
        assert plog(1, p, 3).value == 0
        assert plog(1 + p, p, 2).value == p
    assert plog(7, 5, 2).value == 0
    with pytest.raises(DomainError):
        plog(10, 5, 2)


@given(st.integers(1, 10**9), st.integers(1, 10**9))
def test_plog_functional_equation(x, y):
    p, k = 7, 4
    if x % p == 0 or y % p == 0:
        return
    assert plog(x * y, p, k) == plog(x, p, k) + plog(y, p, k)


def test_plog_of_unit_part_mod_p2():
    for p in (3, 5, 7, 11):
        for a in range(1, 300):
            if a % p == 0:
                continue
            u = unit_part(a, p, 2)
            assert plog(u).value == (u.value - 1) % p**2


@given(st.integers(1, 10**12), st.sampled_from([3, 5, 7, 13]))
def test_precision_truncation_commutes(a, p):
    if a % p == 0:
        return
    assert plog(a, p, 6).reduce(2) == plog(a, p, 2)
    assert teichmuller(a, p, 6).reduce(2) == teichmuller(a, p, 2)


def test_padic_arithmetic():
    x = PAdicApprox(5, 3, 7)
    y = PAdicApprox(5, 3, 11)
    assert (x * y).value == 77
    assert (x - y).value == 121
    assert (x / y * y) == x
    assert PAdicApprox(5, 3, 50).valuation() == 2
    assert PAdicApprox(5, 3, 0).valuation() == 3
    with pytest.raises(DomainError):
        x / PAdicApprox(5, 3, 10)


def test_log_eps_first_order():
    # mod p the series is just u/t; mod 3 with d = 3m it is (1 + m) u/t
    for d, p in [(5, 5), (13, 13), (21, 7), (430, 43), (15, 5), (7, 7)]:
        e = fundamental_unit(d)
        assert plog_eps_over_sqrtd(d, e.t, e.u, p, 1).value == e.u * pow(e.t, -1, p) % p
    for m in (2, 5, 7, 10, 11, 13):
        d = 3 * m
        e = fundamental_unit(d)
        assert plog_eps_over_sqrtd(d, e.t, e.u, 3, 1).value == (1 + m) * e.u * pow(e.t, -1, 3) % 3


@pytest.mark.parametrize(
    "d,p,k",
    [(5, 5, 2), (5, 5, 4), (13, 13, 3), (15, 3, 3), (15, 5, 3), (21, 3, 4), (21, 7, 2), (430, 43, 2), (33, 3, 5)],
)
def test_log_eps_matches_ramified_oracle(d, p, k):
    e = fundamental_unit(d)
    assert plog_eps_over_sqrtd(d, e.t, e.u, p, k).value == log_eps_over_sqrtd_oracle(d, e.t, e.u, p, k)


def test_log_eps_errors():
    with pytest.raises(DomainError):
        plog_eps_over_sqrtd(5, 1, 1, 3, 1)
    with pytest.raises(DomainError):
        plog_eps_over_sqrtd(15, 3, 1, 3, 1)
