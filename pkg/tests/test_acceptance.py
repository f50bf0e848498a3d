"""Acceptance sweep: one test per criterion, each with its wall-clock budget.

The terminal summary prints a PASS/FAIL line per criterion.
"""
import time

import pytest

from colorsuper.clifford import Signature, check_sign_law, signatures
from colorsuper.envelope import export_bf, verify_bf_relations
from colorsuper.graded_algebra import (audit, check_antisymmetry, check_closure, check_jacobi,
                                       clifford_as_color_algebra)
from colorsuper.grading import PairingKind, check_symplectic_reduction
from colorsuper.grassmann_rep import GradedPoly, check_zeta_realization, left_derive, verify_representation
from colorsuper.matrix_oracle import check_bf_on_fock, check_kappa_against_matrices
from colorsuper.superalgebra_io import builtin
from colorsuper.tensor_builder import build_color_super, expected_dimension, reverse_build
from faults import CLOSURE_FAULTS, JACOBI_FAULTS, SCALE_FAULTS, algebras, retargeted, scaled

CATALOG = ("fermionic_heisenberg", "osp(1|2)", "bf_source(1)")


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed <= self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def failures(reports):
    return [(r.command, r.parameters, r.violations[0]) for r in reports if not r.ok]


@pytest.fixture(scope="module")
def theorem_outputs():
    return {(name, sig): build_color_super(builtin(name), sig)
            for name in CATALOG for sig in signatures(4)}


@pytest.mark.criterion(1, "Clifford sign law, p+q <= 6, <= 5 s")
def test_criterion_01_sign_law():
    with Budget(5):
        reports = [check_sign_law(sig) for sig in signatures(6)]
    assert len(reports) == sum(n + 1 for n in range(1, 7))
    assert not failures(reports)
    assert sum(r.checked_count for r in reports) == sum((n + 1) * 4 ** n for n in range(1, 7))


@pytest.mark.criterion(2, "Clifford color superalgebra (dot pairing) audits, p+q <= 5, <= 60 s")
def test_criterion_02_dot_pairing():
    with Budget(60):
        reports = []
        for sig in signatures(5):
            A = clifford_as_color_algebra(sig, PairingKind.DOT)
            reports += audit(A).values()
            assert reports[-1].checked_count == 2 ** (3 * sig.n)
    assert not failures(reports)


@pytest.mark.criterion(3, "Clifford color algebra (symplectic pairing) audits, p+q in {2, 4}")
def test_criterion_03_symplectic_pairing():
    reports = []
    for sig in signatures(4):
        if sig.n in (2, 4):
            A = clifford_as_color_algebra(sig, PairingKind.SYMPLECTIC)
            reports += audit(A).values()
    assert len(reports) == 3 * 8
    assert not failures(reports)


@pytest.mark.criterion(4, "symplectic pairing reduction identity, N in {2, 4, 6}, <= 1 s")
def test_criterion_04_maprel():
    with Budget(1):
        reports = [check_symplectic_reduction(n) for n in (2, 4, 6)]
    assert [r.checked_count for r in reports] == [16, 256, 4096]
    assert not failures(reports)


@pytest.mark.criterion(5, "superalgebra (x) Clifford: audits and dimension 2^(N-1) dim g, p+q <= 4, <= 60 s")
def test_criterion_05_theorem(theorem_outputs):
    with Budget(60):
        reports = []
        for (name, sig), A in theorem_outputs.items():
            assert A.dim == expected_dimension(builtin(name), sig) == 2 ** (sig.n - 1) * builtin(name).dim
            reports += audit(A).values()
    assert len(theorem_outputs) == 3 * 14
    assert not failures(reports)


@pytest.mark.criterion(6, "reverse construction passes the super-Jacobi auditors")
def test_criterion_06_reverse(theorem_outputs):
    reports = []
    for (_, sig), A in theorem_outputs.items():
        S = reverse_build(A, sig)
        assert S.n_bits == 1 and S.dim == A.dim
        reports += audit(S).values()
    assert not failures(reports)


@pytest.mark.criterion(7, "bf relation table reproduced exactly, n in {1, 2, 3}, <= 30 s")
def test_criterion_07_bf_relations():
    with Budget(30):
        reports = [verify_bf_relations(n) for n in (1, 2, 3)]
    assert all(r.checked_count > 0 for r in reports)
    assert not failures(reports)


@pytest.mark.criterion(8, "bf(n) graded Jacobi for n in {1, 2}, 11-element basis, closed alpha-free part")
def test_criterion_08_bf_algebra():
    bf1, bf2 = export_bf(1), export_bf(2)
    assert not failures([check_jacobi(bf1), check_jacobi(bf2), check_closure(bf1), check_antisymmetry(bf2)])
    assert sorted(bf1.labels) == sorted(["1", "A_11", "Adag_11", "N_11", "alpha_1", "alphadag_1",
                                         "beta_1", "betadag_1", "a_1", "adag_1", "F"])
    keep = {bf1.index(x) for x in ("1", "A_11", "Adag_11", "N_11", "beta_1", "betadag_1", "a_1", "adag_1", "F")}
    assert len(keep) == 9
    for (i, j), entry in bf1.table.items():
        if i in keep and j in keep:
            assert {k for k, _ in entry} <= keep


@pytest.mark.criterion(9, "vector field representation, 121 pairs, x-degree <= 4, derivative examples, <= 10 s")
def test_criterion_09_representation():
    with Budget(10):
        r = verify_representation(4)
    assert r.checked_count == 121
    assert not failures([r])
    x, psi, th1, th2 = (GradedPoly.var(v) for v in ("x", "psi", "theta1", "theta2"))
    assert left_derive("theta2", x * th1 * th2) == -(x * th1)
    assert left_derive("psi", th1 * psi) == th1


@pytest.mark.criterion(10, "extended Grassmann numbers commute under the gamma (x) xi realization")
def test_criterion_10_zeta():
    reports = [check_zeta_realization(sig) for sig in signatures(2, 2)]
    assert all(r.checked_count == 64 for r in reports)
    assert not failures(reports)


@pytest.mark.criterion(11, "kappa vs gamma matrices (p+q <= 6); bf relations on Fock matrices (n <= 2, cutoff 8, margin 3)")
def test_criterion_11_cross_oracle():
    reports = [check_kappa_against_matrices(sig) for sig in signatures(6)]
    reports += [check_bf_on_fock(n, 8, margin=3) for n in (1, 2)]
    assert not failures(reports)


@pytest.mark.criterion(12, "single corrupted constants are caught and localized, >= 5 faults per auditor")
def test_criterion_12_fault_injection():
    fixtures = algebras()
    assert min(len(CLOSURE_FAULTS), len(SCALE_FAULTS), len(JACOBI_FAULTS)) >= 5
    for name, left, right, target in CLOSURE_FAULTS:
        B, ij = retargeted(fixtures[name], left, right, target)
        assert [v.at for v in check_closure(B).violations] == [ij]
    for name, left, right, factor in SCALE_FAULTS:
        B, (i, j) = scaled(fixtures[name], left, right, factor)
        assert [v.at for v in check_antisymmetry(B).violations] == [(min(i, j), max(i, j))]
    for name, left, right, factor in JACOBI_FAULTS:
        B, (i, j) = scaled(fixtures[name], left, right, factor)
        r = check_jacobi(B)
        assert r.violations and all(i in v.at for v in r.violations)
