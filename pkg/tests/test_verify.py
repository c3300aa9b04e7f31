import pytest

from aacm.arith import factor, is_prime, is_squarefree
from aacm.errors import DomainError
from aacm.report import VerificationReport
from aacm.verify import (
    check_caacm,
    residue_products,
    verify_all,
    verify_cor_aac,
    verify_cor_mordell,
    verify_cor_p3,
    verify_lemma51,
    verify_thm1,
    verify_thm2,
)


def _sides(r):
    return (r.lhs, r.rhs, r.verdict)


def test_thm1_examples():
    assert _sides(verify_thm1(5, 5)) == (1, 1, "pass")
    assert _sides(verify_thm1(21, 3)) == (2, 2, "pass")
    assert _sides(verify_thm1(13, 13)) == (9, 9, "pass")


def test_thm1_trivial_zero():
    r = verify_thm1(15, 3)
    assert r.verdict == "degenerate"
    assert "trivial zero" in r.witness["reason"]


def test_thm1_counterexample_is_degenerate():
    for p in (5, 43):
        r = verify_thm1(430, p)
        assert _sides(r) == (0, 0, "degenerate")
        assert r.witness["reason"] == "p | u"
        assert r.witness["u_mod_p_by_residue_path"] == 0


def test_thm1_rejects_bad_input():
    with pytest.raises(DomainError):
        verify_thm1(12, 3)
    with pytest.raises(DomainError):
        verify_thm1(10, 3)


def test_corollary_examples():
    assert _sides(verify_cor_aac(5)) == (1, 1, "pass")
    assert _sides(verify_cor_aac(13)) == (9, 9, "pass")
    assert verify_cor_aac(17).passed
    assert _sides(verify_cor_mordell(7)) == (3, 3, "pass")
    assert _sides(verify_cor_mordell(11)) == (8, 8, "pass")
    with pytest.raises(DomainError):
        verify_cor_aac(7)
    with pytest.raises(DomainError):
        verify_cor_mordell(3)


def test_cor_p3():
    r = verify_cor_p3(21)
    assert _sides(r) == (2, 2, "pass")
    r = verify_cor_p3(39)
    assert r.passed and r.witness["H"] == 2
    assert verify_cor_p3(15).verdict == "degenerate"


def test_thm2_examples():
    D, A, B = residue_products(5)
    assert (D, A, B) == (5, 4, 6)
    assert _sides(verify_thm2(5)) == (2, 2, "pass")
    D, A, B = residue_products(13)
    assert (A + B) % 169 == 234 % 169
    assert _sides(verify_thm2(13)) == (5, 5, "pass")
    assert _sides(verify_thm2(7)) == (5, 5, "pass")
    with pytest.raises(DomainError):
        verify_thm2(3)


def test_lemma51():
    for p in range(7, 1000):
        if is_prime(p) and p % 4 == 3:
            assert verify_lemma51(p).passed, p
    with pytest.raises(DomainError):
        verify_lemma51(13)


def test_composites_small_sweep():
    for d in range(6, 800):
        if not is_squarefree(d) or is_prime(d):
            continue
        for p in factor(d).odd_prime_divisors:
            r = verify_thm1(d, p)
            assert r.verdict in ("pass", "degenerate"), r.line()
            if r.verdict == "degenerate" and p > 3:
                assert r.witness["reason"] == "p | u"


def test_check_caacm_examples():
    (r,) = check_caacm(5)
    assert r.verdict == "pass" and r.witness["status"] == "holds"
    assert r.witness["lp_unit"] and r.witness["u_mod_p"] != 0
    reports = check_caacm(430)
    assert {r.p for r in reports} == {5, 43}
    assert all(r.witness["status"] == "counterexample" for r in reports)
    assert any(r.witness["u_mod_p"] == 0 and not r.witness["lp_unit"] for r in reports)
    assert all(r.verdict == "pass" for r in reports)


def test_check_caacm_large_counterexample():
    reports = check_caacm(4099215)
    assert reports[0].witness["status"] == "counterexample"
    assert reports[0].h_mod_p is None
    for r in reports:
        assert r.witness["u_mod_p"] == 0 and not r.witness["lp_unit"]


def test_check_caacm_agreement_sweep():
    # non-unit L_p(1) <=> p | h u, on every d below 1500
    for d in range(3, 1500):
        if not is_squarefree(d):
            continue
        for r in check_caacm(d):
            assert r.verdict in ("pass", "degenerate"), r.line()
            if r.verdict == "degenerate":
                assert r.p == 3 and (d // 3) % 3 == 2


def test_report_validation():
    with pytest.raises(ValueError):
        VerificationReport("Thm9", 5, 5, 0, 0, "pass")
    with pytest.raises(ValueError):
        VerificationReport("CAACM", 5, 5, 0, 0, "maybe")
    r = verify_thm1(5, 5)
    assert r.to_dict()["theorem_tag"] == "Thm1.1A"


def test_verify_all_dispatch():
    tags = {r.theorem_tag for r in verify_all(7)}
    assert tags == {"Thm1.1A", "Cor1.3", "Lemma5.1", "Thm2B", "CNF-mod-p", "CAACM"}
    tags = {r.theorem_tag for r in verify_all(5)}
    assert tags == {"Thm1.1A", "Cor1.2", "Thm2A", "CNF-mod-p", "CAACM"}
    tags = {r.theorem_tag for r in verify_all(21)}
    assert tags == {"Thm1.1A", "Thm1.1B", "Cor1.4", "CNF-mod-p", "CAACM"}
    only = verify_all(21, p=3, theorems=["Cor1.4"])
    assert [r.theorem_tag for r in only] == ["Cor1.4"]
    with pytest.raises(DomainError):
        verify_all(21, p=5)
    with pytest.raises(DomainError):
        verify_all(21, theorems=["nope"])
