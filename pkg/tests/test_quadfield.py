import pytest
from oracles import class_number_real_analytic, pell_brute, pell_oracle

from aacm.arith import imaginary_discriminant, is_prime, is_squarefree
from aacm.errors import DomainError, ResourceError
from aacm.quadfield import (
    class_number_imag,
    class_number_imag_forms,
    class_number_real,
    fundamental_unit,
    fundamental_unit_mod,
    narrow_class_number,
)

SQUAREFREE_500 = [d for d in range(2, 501) if is_squarefree(d)]


def test_unit_examples():
    e = fundamental_unit(5)
    assert (e.t, e.u, e.delta, e.norm) == (1, 1, 1, -1)
    e = fundamental_unit(7)
    assert (e.t, e.u, e.delta, e.norm) == (8, 3, 2, 1)
    e = fundamental_unit(13)
    assert (e.t, e.u, e.delta, e.norm) == (3, 1, 1, -1)
    e = fundamental_unit(21)
    assert (e.t, e.u, e.delta, e.norm) == (5, 1, 1, 1)
    with pytest.raises(DomainError):
        fundamental_unit(12)


def test_units_vs_pell_oracle():
    for d in SQUAREFREE_500:
        e = fundamental_unit(d)
        c = 4 if e.delta == 1 else 1
        assert e.t > 0 and e.u > 0
        assert e.t * e.t - d * e.u * e.u == e.norm * c
        if e.delta == 1:
            assert (e.t - e.u) % 2 == 0
        assert (e.t, e.u, e.norm) == pell_oracle(d), d


def test_units_minimal_by_brute_force():
    # brute force is only feasible where u is small; the Pell oracle covers the rest
    checked = 0
    for d in SQUAREFREE_500:
        e = fundamental_unit(d)
        if e.u <= 20_000:
            assert pell_brute(d, e.u) == (e.t, e.u, e.norm), d
            checked += 1
    assert checked > 200


def test_unit_mod_examples():
    r = fundamental_unit_mod(5, 5, 2)
    assert (r.t_mod, r.u_mod) == (1, 1)
    assert fundamental_unit_mod(430, 43, 1).u_mod == 0
    assert fundamental_unit(430).u % 43 == 0


def test_unit_mod_matches_exact():
    for d in range(2, 301):
        if not is_squarefree(d):
            continue
        e = fundamental_unit(d)
        for p in (3, 5, 7):
            for k in (1, 2):
                r = fundamental_unit_mod(d, p, k)
                pk = p**k
                assert (r.t_mod, r.u_mod, r.norm, r.delta) == (e.t % pk, e.u % pk, e.norm, e.delta)
                assert r.period_length == e.period_length


def test_period_bound_is_loud():
    with pytest.raises(ResourceError):
        fundamental_unit_mod(94, 47, 1, period_bound=3)
    with pytest.raises(ResourceError):
        fundamental_unit(94, period_bound=3)


def test_class_number_examples():
    assert class_number_real(5) == 1
    assert class_number_real(10) == 2
    assert class_number_real(229) == 3
    assert class_number_real(79) == 3
    assert class_number_real(430) == 2


def test_class_number_real_vs_analytic():
    for d in SQUAREFREE_500:
        e = fundamental_unit(d)
        assert class_number_real(d, e) == class_number_real_analytic(d, e.t, e.u), d


def test_narrow_class_number():
    # h+ = 2h exactly when the unit has norm +1
    for d in (3, 6, 7, 15, 21, 34, 79):
        e = fundamental_unit(d)
        D = d if d % 4 == 1 else 4 * d
        factor_ = 1 if e.norm == -1 else 2
        assert narrow_class_number(D) == factor_ * class_number_real(d, e)


def test_class_number_below_prime():
    for p in range(3, 2001):
        if is_prime(p):
            assert class_number_real(p) < p


def test_class_number_imag_examples():
    assert class_number_imag(7) == 1
    assert class_number_imag(5) == 2
    assert class_number_imag(23) == 3
    assert class_number_imag(13) == 2
    for m in (1, 3):
        with pytest.raises(DomainError):
            class_number_imag(m)


def test_class_number_imag_two_methods():
    for m in range(1, 501):
        if is_squarefree(m) and imaginary_discriminant(m) not in (-3, -4):
            assert class_number_imag(m) == class_number_imag_forms(m), m
