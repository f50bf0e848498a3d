"""Superalgebra x Clifford -> Z2^N color superalgebra, and back.

``X_(alpha,a) = gamma_alpha (x) T_a`` is kept only when sigma(alpha) has the
parity of ``T_a``; its bracket is ``kappa(alpha, beta) C_ab^c X_(alpha+beta,c)``.
The reverse direction tensors each basis element with its own gamma again and
lands in an ordinary Lie superalgebra graded by sigma(alpha) mod 2.
"""
from __future__ import annotations

from fractions import Fraction

from .clifford import Signature, kappa_mask
from .grading import GradeVec, PairingKind, all_grades, popcount
from .graded_algebra import AlgebraError, BasisElement, ColorAlgebra
from .superalgebra_io import Superalgebra


def build_color_super(g: ColorAlgebra, sig: Signature) -> ColorAlgebra:
    if g.n_bits != 1:
        raise AlgebraError(f"{g.name} is not a Lie superalgebra (grading_bits={g.n_bits})")
    n = sig.n
    neg = sig.negative_mask
    basis: list[BasisElement] = []
    where: dict[tuple[int, int], int] = {}
    for alpha in all_grades(n):
        for a, b in enumerate(g.basis):
            if popcount(alpha.mask) % 2 == b.grade.mask:
                where[alpha.mask, a] = len(basis)
                basis.append(BasisElement(f"X[{alpha.compact()}|{b.label}]", alpha))
    table = {}
    for (am, a), i in where.items():
        for (bm, b), j in where.items():
            entry = g.table.get((a, b))
            if not entry:
                continue
            k = kappa_mask(am, bm, neg)
            table[i, j] = [(where[am ^ bm, c], k * coeff) for c, coeff in entry]
    return ColorAlgebra(f"{g.name}(x){sig}", n, PairingKind.DOT, basis, table)


def reverse_build(A: ColorAlgebra, sig: Signature) -> Superalgebra:
    if A.pairing is not PairingKind.DOT:
        raise AlgebraError("reverse construction needs the dot-product pairing")
    if A.n_bits != sig.n:
        raise AlgebraError(f"{A.name} has N={A.n_bits} but {sig} has p+q={sig.n}")
    neg = sig.negative_mask
    basis = [(f"T({b.label})", popcount(b.grade.mask) % 2) for b in A.basis]
    table = {}
    for (i, j), entry in A.table.items():
        k = kappa_mask(A.masks[i], A.masks[j], neg)
        table[i, j] = [(t, k * Fraction(c)) for t, c in entry]
    return Superalgebra(f"T[{A.name};{sig}]", basis, table)


def expected_dimension(g: ColorAlgebra, sig: Signature) -> int:
    return 2 ** (sig.n - 1) * g.dim


def x_label(alpha: GradeVec, label: str) -> str:
    return f"X[{alpha.compact()}|{label}]"
