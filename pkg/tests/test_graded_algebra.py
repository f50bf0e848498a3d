import itertools
import json
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from colorsuper.clifford import Signature, signatures
from colorsuper.graded_algebra import (AlgebraError, BasisElement, ClosureError, ColorAlgebra, Element,
                                       FormatError, MalformedElementError, algebra_from_json_dict, audit,
                                       audit_ok, check_antisymmetry, check_closure, check_jacobi,
                                       clifford_as_color_algebra, format_scalar, jacobiator, load_algebra,
                                       parse_scalar, save_algebra)
from colorsuper.grading import GradeVec, PairingKind, PairingError
from colorsuper.superalgebra_io import osp12

from faults import (CLOSURE_FAULTS, DIAGONAL_FAULTS, JACOBI_FAULTS, JACOBI_INVISIBLE, SCALE_FAULTS,
                    algebras, retargeted, scaled)
from oracles import mask_word, word_mask, word_product

SYM = PairingKind.SYMPLECTIC


@pytest.fixture(scope="module")
def fixtures():
    return algebras()


def cl(p, q, pairing=PairingKind.DOT):
    return clifford_as_color_algebra(Signature(p, q), pairing)


def test_cl20_brackets():
    A = cl(2, 0)
    g1, g2, g12 = (A.element(x) for x in ("g1", "g2", "g1g2"))
    # dot((1,0),(0,1)) = 0: a commutator, and g1 g2 = -g2 g1
    assert A.bracket(g1, g2) == A.element("g1g2", 2)
    # dot(g1, g1g2) = 1, so this is an anticommutator and g1 g1g2 + g1g2 g1 = g2 - g2
    assert A.bracket(g1, g12) == 0
    assert A.bracket(g12, g12) == 0
    assert A.bracket(g1, Element()) == 0


def test_cl10_square():
    A = cl(1, 0)
    assert A.bracket(A.element("g1"), A.element("g1")) == A.element("1", 2)


def test_cl20_symplectic_self_bracket_is_a_commutator():
    A = cl(2, 0, SYM)
    g12 = A.element("g1g2")
    assert A.sign(A.index("g1g2"), A.index("g1g2")) == 1
    assert A.bracket(g12, g12) == 0


def _word_bracket(a, b, sig, pairing):
    """Bracket of two blades from explicit word products."""
    s1, w1 = word_product(mask_word(a), mask_word(b), sig.p, sig.q)
    s2, w2 = word_product(mask_word(b), mask_word(a), sig.p, sig.q)
    ga, gb = GradeVec(sig.n, a), GradeVec(sig.n, b)
    sign = -1 if pairing.evaluate(ga, gb) % 2 else 1
    assert w1 == w2
    return word_mask(w1), s1 - sign * s2


@pytest.mark.parametrize("pairing", [PairingKind.DOT, SYM], ids=lambda p: p.value)
@pytest.mark.parametrize("sig", list(signatures(4)), ids=str)
def test_clifford_table_matches_word_oracle(sig, pairing):
    if pairing is SYM and sig.n % 2:
        with pytest.raises(PairingError):
            clifford_as_color_algebra(sig, pairing)
        return
    A = clifford_as_color_algebra(sig, pairing)
    for a, b in itertools.product(range(1 << sig.n), repeat=2):
        target, coeff = _word_bracket(a, b, sig, pairing)
        want = Element({target: Fraction(coeff)})
        assert A.entry(a, b) == want


@pytest.mark.parametrize("sig", [Signature(2, 1), Signature(1, 2), Signature(3, 0)], ids=str)
def test_clifford_audits_clean(sig):
    assert audit_ok(clifford_as_color_algebra(sig))


def test_bf1_audits_clean(fixtures):
    assert audit_ok(fixtures["bf1"])


def test_fast_jacobi_agrees_with_reference(fixtures):
    for A in fixtures.values():
        fast = {v.at: v.residual for v in check_jacobi(A).violations}
        slow = {}
        for x, y, z in itertools.product(range(A.dim), repeat=3):
            r = jacobiator(A, x, y, z)
            if r:
                slow[x, y, z] = A.format(r)
        assert fast == slow == {}


@st.composite
def random_algebra(draw):
    n_bits = draw(st.integers(1, 2))
    dim = draw(st.integers(1, 5))
    basis = [BasisElement(f"e{i}", GradeVec(n_bits, draw(st.integers(0, (1 << n_bits) - 1))))
             for i in range(dim)]
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    table = {}
    for i in range(dim):
        for j in range(dim):
            want = basis[i].grade.mask ^ basis[j].grade.mask
            targets = [k for k in range(dim) if basis[k].grade.mask == want]
            if targets and draw(st.booleans()):
                table[i, j] = [(k, draw(coeff)) for k in draw(st.lists(st.sampled_from(targets), max_size=2))]
    return ColorAlgebra("random", n_bits, PairingKind.DOT, basis, table)


@settings(max_examples=150, deadline=None)
@given(random_algebra())
def test_fast_jacobi_agrees_on_random_tables(A):
    fast = {v.at: v.residual for v in check_jacobi(A).violations}
    slow = {}
    for x, y, z in itertools.product(range(A.dim), repeat=3):
        r = jacobiator(A, x, y, z)
        if r:
            slow[x, y, z] = A.format(r)
    assert fast == slow


def test_checked_counts(fixtures):
    A = fixtures["osp"]
    assert check_closure(A).checked_count == 25
    assert check_antisymmetry(A).checked_count == 15
    assert check_jacobi(A).checked_count == 125


@pytest.mark.parametrize("fault", SCALE_FAULTS, ids=lambda f: f"{f[0]}-{f[1]}-{f[2]}")
def test_antisymmetry_localizes_single_fault(fixtures, fault):
    name, left, right, factor = fault
    B, (i, j) = scaled(fixtures[name], left, right, factor)
    r = check_antisymmetry(B)
    assert [v.at for v in r.violations] == [(min(i, j), max(i, j))]


@pytest.mark.parametrize("fault", JACOBI_FAULTS, ids=lambda f: f"{f[0]}-{f[1]}-{f[2]}")
def test_jacobi_localizes_single_fault(fixtures, fault):
    name, left, right, factor = fault
    B, (i, j) = scaled(fixtures[name], left, right, factor)
    r = check_jacobi(B)
    assert r.violations
    assert all(i in v.at for v in r.violations)


@pytest.mark.parametrize("fault", DIAGONAL_FAULTS, ids=lambda f: f"{f[0]}-{f[1]}")
def test_diagonal_faults_escape_antisymmetry(fixtures, fault):
    name, left, right, factor = fault
    B, _ = scaled(fixtures[name], left, right, factor)
    assert check_antisymmetry(B).ok
    assert not check_jacobi(B).ok


@pytest.mark.parametrize("fault", JACOBI_INVISIBLE, ids=lambda f: f"{f[1]}-{f[2]}")
def test_some_faults_are_invisible_to_jacobi(fixtures, fault):
    name, left, right, factor = fault
    B, _ = scaled(fixtures[name], left, right, factor)
    assert check_jacobi(B).ok


@pytest.mark.parametrize("fault", CLOSURE_FAULTS, ids=lambda f: f"{f[0]}-{f[1]}-{f[2]}")
def test_closure_localizes_single_fault(fixtures, fault):
    name, left, right, target = fault
    B, ij = retargeted(fixtures[name], left, right, target)
    assert [v.at for v in check_closure(B).violations] == [ij]


def test_constructor_rejects_grade_violation():
    basis = [BasisElement("Q", GradeVec(1, 1)), BasisElement("T", GradeVec(1, 1))]
    with pytest.raises(ClosureError):
        ColorAlgebra("bad", 1, PairingKind.DOT, basis, {(0, 0): [(1, 1)]})
    with pytest.raises(MalformedElementError):
        ColorAlgebra("bad", 1, PairingKind.DOT, basis, {(0, 5): [(1, 1)]})
    with pytest.raises(AlgebraError):
        ColorAlgebra("bad", 1, PairingKind.DOT, basis + basis, {})


def test_bracket_rejects_foreign_indices():
    A = cl(1, 0)
    with pytest.raises(MalformedElementError):
        A.bracket(Element.basis(7), A.element("g1"))
    with pytest.raises(MalformedElementError):
        A.element("g9")


def test_scalars():
    assert parse_scalar("3/6") == Fraction(1, 2)
    assert parse_scalar(4) == 4
    assert format_scalar(Fraction(2)) == "2/1"
    for bad in ("x", "1/0", ""):
        with pytest.raises(FormatError):
            parse_scalar(bad)


def test_json_round_trip(tmp_path):
    for A in (osp12(), cl(2, 2, SYM), cl(1, 2)):
        path = tmp_path / "a.json"
        save_algebra(A, path)
        B = load_algebra(path)
        assert (B.name, B.n_bits, B.pairing, B.basis, B.table) == (A.name, A.n_bits, A.pairing, A.basis, A.table)


def _doc():
    return cl(2, 0).to_json_dict()


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("basis"),
    lambda d: d.update(extra=1),
    lambda d: d.update(grading_bits=0),
    lambda d: d.update(grading_bits=True),
    lambda d: d.update(pairing="wedge"),
    lambda d: d.update(grading_bits=3, pairing="symplectic"),
    lambda d: d["basis"].append({"label": "g1", "grade": "10"}),
    lambda d: d["basis"].append({"label": "z", "grade": "1"}),
    lambda d: d["basis"].__setitem__(0, {"label": "1"}),
    lambda d: d["brackets"].append({"left": "nope", "right": "g1", "terms": []}),
    lambda d: d["brackets"].append(dict(d["brackets"][0])),
    lambda d: d["brackets"][0]["terms"].append({"target": "q", "coeff": "1"}),
    lambda d: d["brackets"][0]["terms"].append({"target": "g1", "coeff": "one"}),
], ids=range(13))
def test_schema_errors(mutate):
    d = _doc()
    mutate(d)
    with pytest.raises(FormatError):
        algebra_from_json_dict(d)


def test_invalid_json_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(FormatError):
        load_algebra(p)
    p.write_text(json.dumps([1, 2]))
    with pytest.raises(FormatError):
        load_algebra(p)


def test_audit_keys():
    assert set(audit(cl(1, 0))) == {"closure", "antisymmetry", "jacobi"}
