import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from colorsuper.clifford import (Blade, Signature, blade_mul, check_sign_law, commutation_sign,
                                 gamma_of_grade, grade_of_blade, kappa, kappa_mask, mask_label,
                                 relative_sign, signatures)
from colorsuper.grading import GradeVec

from oracles import mask_word, word_mask, word_product

G = GradeVec.parse
B = Blade.parse


def test_gamma_of_grade():
    assert str(gamma_of_grade(G("000"))) == "+1"
    assert str(gamma_of_grade(G("110"))) == "+g1g2"
    assert str(gamma_of_grade(G("111"))) == "+g1g2g3"
    assert grade_of_blade(B("g1g3"), 3) == G("101")


def test_squares_follow_signature():
    assert blade_mul(B("g1"), B("g1"), Signature(2, 0)) == B("+1")
    assert blade_mul(B("g1"), B("g1"), Signature(0, 1)) == B("-1")


def test_swap():
    assert blade_mul(B("g2"), B("g1"), Signature(3, 0)) == B("-g1g2")


def test_kappa_examples():
    assert kappa(G("110"), G("010"), Signature(3, 0)) == 1
    assert kappa(G("110"), G("010"), Signature(0, 3)) == -1
    # frozen from the gamma-matrix oracle
    assert kappa(G("111"), G("111"), Signature(2, 1)) == 1


def test_relative_sign_counting_rule():
    assert relative_sign(0b001, 0b011) == -1


@pytest.mark.parametrize("sig,count", [(Signature(1, 0), 4), (Signature(2, 2), 256)])
def test_sign_law_counts(sig, count):
    r = check_sign_law(sig)
    assert r.ok and r.checked_count == count


@pytest.mark.parametrize("sig", list(signatures(5)), ids=str)
def test_kappa_matches_word_oracle(sig):
    for a, b in itertools.product(range(1 << sig.n), repeat=2):
        s, w = word_product(mask_word(a), mask_word(b), sig.p, sig.q)
        assert word_mask(w) == a ^ b
        assert kappa_mask(a, b, sig.negative_mask) == s


@st.composite
def three_blades(draw):
    n = draw(st.integers(1, 10))
    p = draw(st.integers(0, n))
    m = st.integers(0, (1 << n) - 1)
    return Signature(p, n - p), draw(m), draw(m), draw(m)


@given(three_blades())
def test_associativity(t):
    sig, a, b, c = t
    A, Bb, C = Blade(a), Blade(b), Blade(c)
    assert blade_mul(blade_mul(A, Bb, sig), C, sig) == blade_mul(A, blade_mul(Bb, C, sig), sig)


@given(three_blades())
def test_commutation_sign_matches_products(t):
    sig, a, b, _ = t
    n = sig.n
    lhs = kappa_mask(a, b, sig.negative_mask)
    rhs = kappa_mask(b, a, sig.negative_mask)
    assert lhs == commutation_sign(GradeVec(n, a), GradeVec(n, b)) * rhs
    assert commutation_sign(GradeVec(n, a), GradeVec(n, b)) == relative_sign(a, b)


def test_blade_parse_and_print():
    assert B("-g1g3") == Blade(0b101, -1)
    assert str(B("g2")) == "+g2"
    assert mask_label(0b110) == "g2g3"
    assert -B("g1") == B("-g1")
    for bad in ("g2g1", "g1g1", "x", "g0"):
        with pytest.raises(ValueError):
            B(bad)


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature(0, 0)
    with pytest.raises(ValueError):
        Signature(-1, 2)
    with pytest.raises(ValueError):
        blade_mul(B("g3"), B("g1"), Signature(2, 0))
    assert [str(s) for s in signatures(2)] == ["Cl(1,0)", "Cl(0,1)", "Cl(2,0)", "Cl(1,1)", "Cl(0,2)"]
