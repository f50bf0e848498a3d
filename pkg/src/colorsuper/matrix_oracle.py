"""Brute-force matrix ground truth, independent of the rewriting engines.

* Gamma matrices for Cl(p, q) from Pauli tensor products (Jordan-Wigner
  pattern), with a factor ``i`` on the generators that square to -1.
* Truncated Fock-space matrices for the boson-fermion system, using the
  integer weighted shift ``a|k> = k|k-1>, a^+|k> = |k+1>`` so everything stays
  rational.

Entries are Gaussian rationals stored as two integer arrays over a common
denominator; Fock operators use scipy sparse storage.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np
import scipy.sparse as sp

from .clifford import Signature, kappa_mask, mask_label
from .envelope import Kind, all_generators, claimed_bracket, format_combo
from .grading import dot
from .report import Report, Violation


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __add__(self, o: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __sub__(self, o: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __mul__(self, o: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __str__(self) -> str:
        return f"{self.re.numerator}/{self.re.denominator} {self.im.numerator}/{self.im.denominator}"


I = GaussianRational(Fraction(0), Fraction(1))


def _is_sparse(m) -> bool:
    return sp.issparse(m)


def _nonzero_values(m) -> np.ndarray:
    return m.data if _is_sparse(m) else m[m != 0]


class ExactMatrix:
    """Square Gaussian-rational matrix ``(re + i im) / den`` with integer arrays."""

    __slots__ = ("re", "im", "den")

    def __init__(self, re, im=None, den: int = 1):
        if im is None:
            im = re * 0
        if den <= 0:
            raise ValueError("denominator must be positive")
        if _is_sparse(re) or _is_sparse(im):
            re, im = sp.csr_matrix(re, dtype=np.int64), sp.csr_matrix(im, dtype=np.int64)
        else:
            re, im = np.asarray(re, dtype=np.int64), np.asarray(im, dtype=np.int64)
        g = den
        for arr in (re, im):
            vals = _nonzero_values(arr)
            if vals.size:
                g = math.gcd(g, int(np.gcd.reduce(np.abs(vals))))
        if _is_sparse(re):
            re.eliminate_zeros()
            im.eliminate_zeros()
            if g > 1:
                re.data //= g
                im.data //= g
                den //= g
        elif g > 1:
            re, im, den = re // g, im // g, den // g
        self.re, self.im, self.den = re, im, den

    @classmethod
    def identity(cls, dim: int, sparse: bool = False) -> ExactMatrix:
        eye = sp.identity(dim, dtype=np.int64, format="csr") if sparse else np.eye(dim, dtype=np.int64)
        return cls(eye)

    @property
    def shape(self) -> tuple[int, int]:
        return self.re.shape

    def __matmul__(self, o: ExactMatrix) -> ExactMatrix:
        re = self.re @ o.re - self.im @ o.im
        im = self.re @ o.im + self.im @ o.re
        return ExactMatrix(re, im, self.den * o.den)

    def _align(self, o: ExactMatrix):
        d = self.den * o.den // math.gcd(self.den, o.den)
        a, b = d // self.den, d // o.den
        return d, a, b

    def __add__(self, o: ExactMatrix) -> ExactMatrix:
        d, a, b = self._align(o)
        return ExactMatrix(self.re * a + o.re * b, self.im * a + o.im * b, d)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(-self.re, -self.im, self.den)

    def __sub__(self, o: ExactMatrix) -> ExactMatrix:
        return self + (-o)

    def scale(self, c) -> ExactMatrix:
        """Multiply by a rational or by ``I``."""
        if isinstance(c, GaussianRational):
            if c == I:
                return ExactMatrix(-self.im, self.re, self.den)
            raise ValueError("only rational scalars or I are supported")
        c = Fraction(c)
        return ExactMatrix(self.re * c.numerator, self.im * c.numerator, self.den * c.denominator)

    def kron(self, o: ExactMatrix) -> ExactMatrix:
        k = sp.kron if _is_sparse(self.re) or _is_sparse(o.re) else np.kron
        re = k(self.re, o.re) - k(self.im, o.im)
        im = k(self.re, o.im) + k(self.im, o.re)
        return ExactMatrix(re, im, self.den * o.den)

    def restrict(self, idx: np.ndarray) -> ExactMatrix:
        return ExactMatrix(self.re[idx][:, idx], self.im[idx][:, idx], self.den)

    def columns(self, cols: np.ndarray) -> ExactMatrix:
        return ExactMatrix(self.re[:, cols], self.im[:, cols], self.den)

    def is_zero(self) -> bool:
        return _nonzero_values(self.re).size == 0 and _nonzero_values(self.im).size == 0

    def __eq__(self, o) -> bool:
        return isinstance(o, ExactMatrix) and (self - o).is_zero()

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        return GaussianRational(Fraction(int(self.re[i, j]), self.den), Fraction(int(self.im[i, j]), self.den))

    def scalar_value(self) -> GaussianRational | None:
        """The c with self == c * identity, if any."""
        c = self[0, 0]
        eye = ExactMatrix.identity(self.shape[0], _is_sparse(self.re))
        return c if eye.scale(c.re) + eye.scale(I).scale(c.im) == self else None

    def to_lists(self) -> list[list[str]]:
        re = self.re.toarray() if _is_sparse(self.re) else self.re
        im = self.im.toarray() if _is_sparse(self.im) else self.im
        return [[str(GaussianRational(Fraction(int(r), self.den), Fraction(int(m), self.den)))
                 for r, m in zip(rr, mm)] for rr, mm in zip(re, im)]


def _m(rows, imag=None) -> ExactMatrix:
    re = np.array(rows, dtype=np.int64)
    im = np.array(imag, dtype=np.int64) if imag is not None else np.zeros_like(re)
    return ExactMatrix(re, im)


PAULI_I = _m([[1, 0], [0, 1]])
PAULI_X = _m([[0, 1], [1, 0]])
PAULI_Y = _m([[0, 0], [0, 0]], [[0, -1], [1, 0]])
PAULI_Z = _m([[1, 0], [0, -1]])


def gamma_matrices(sig: Signature) -> list[ExactMatrix]:
    """Generators with ``{g_i, g_j} = 2 eta_ij``, size ``2^ceil(N/2)``."""
    n = sig.n
    if n > 8:
        raise ValueError("gamma oracle supports p+q <= 8")
    qubits = (n + 1) // 2
    out = []
    for idx in range(n):
        k, which = divmod(idx, 2)
        factors = [PAULI_Z] * k + [PAULI_X if which == 0 else PAULI_Y] + [PAULI_I] * (qubits - k - 1)
        g = reduce(ExactMatrix.kron, factors)
        if idx >= sig.p:
            g = g.scale(I)
        out.append(g)
    return out


def blade_matrix(mask: int, gammas: list[ExactMatrix]) -> ExactMatrix:
    """Ordered product of the gammas in ``mask`` (ascending index)."""
    m = ExactMatrix.identity(gammas[0].shape[0])
    for i, g in enumerate(gammas):
        if mask >> i & 1:
            m = m @ g
    return m


def check_defining_relations(sig: Signature) -> Report:
    gs = gamma_matrices(sig)
    eye = ExactMatrix.identity(gs[0].shape[0])
    violations = []
    for i, j in itertools.product(range(sig.n), repeat=2):
        anti = gs[i] @ gs[j] + gs[j] @ gs[i]
        eta = (1 if i < sig.p else -1) if i == j else 0
        want = eye.scale(2 * eta)
        if anti != want:
            violations.append(Violation(lhs=f"{{g{i + 1}, g{j + 1}}}", rhs=f"{2 * eta}*1",
                                        residual="matrix mismatch", at=(i, j)))
    return Report("oracle gamma", {"p": sig.p, "q": sig.q}, sig.n ** 2, violations)


def check_kappa_against_matrices(sig: Signature) -> Report:
    if sig.n > 6:
        raise ValueError("kappa cross-check supports p+q <= 6")
    gs = gamma_matrices(sig)
    blades = [blade_matrix(m, gs) for m in range(1 << sig.n)]
    neg = sig.negative_mask
    violations = []
    for a in range(1 << sig.n):
        for b in range(1 << sig.n):
            k = kappa_mask(a, b, neg)
            prod = blades[a] @ blades[b]
            if prod != blades[a ^ b].scale(k):
                violations.append(Violation(
                    lhs=f"M({mask_label(a)}) M({mask_label(b)})",
                    rhs=f"{k:+d} M({mask_label(a ^ b)})",
                    residual="matrix mismatch", at=(a, b)))
    return Report("oracle kappa", {"p": sig.p, "q": sig.q}, 1 << (2 * sig.n), violations)


# ------------------------------------------------------------------- Fock space

class FockSpace:
    """Bosons (cutoff D each), Jordan-Wigner fermions, and one extra qubit carrying F."""

    def __init__(self, n_modes: int, cutoff: int, pad: int = 2):
        if n_modes < 1:
            raise ValueError("need at least one mode")
        if cutoff < 4:
            raise ValueError("cutoff must be at least 4")
        self.n = n_modes
        self.cutoff = cutoff
        self.full = cutoff + pad
        dims = [self.full] * n_modes + [2] * n_modes + [2]
        self._dims = dims
        occ = np.array(list(itertools.product(*[range(d) for d in dims])), dtype=np.int64)
        self.occupations = occ
        keep = np.all(occ[:, :n_modes] < cutoff, axis=1)
        self.keep = np.flatnonzero(keep)
        kept = occ[self.keep]
        self.kept_occupations = kept

    def _embed(self, slot: int, op: ExactMatrix, string_slots=()) -> ExactMatrix:
        factors = []
        for s, d in enumerate(self._dims):
            if s == slot:
                factors.append(op)
            elif s in string_slots:
                factors.append(_sparse(PAULI_Z))
            else:
                factors.append(ExactMatrix.identity(d, sparse=True))
        return reduce(ExactMatrix.kron, factors)

    def boson_lower(self, i: int) -> ExactMatrix:
        d = self.full
        m = sp.csr_matrix((np.arange(1, d, dtype=np.int64), (np.arange(d - 1), np.arange(1, d))),
                          shape=(d, d), dtype=np.int64)
        return self._embed(i, ExactMatrix(m))

    def boson_raise(self, i: int) -> ExactMatrix:
        d = self.full
        m = sp.csr_matrix((np.ones(d - 1, dtype=np.int64), (np.arange(1, d), np.arange(d - 1))),
                          shape=(d, d), dtype=np.int64)
        return self._embed(i, ExactMatrix(m))

    def fermion_lower(self, i: int) -> ExactMatrix:
        low = _sparse(_m([[0, 1], [0, 0]]))
        return self._embed(self.n + i, low, string_slots=range(self.n, self.n + i))

    def fermion_raise(self, i: int) -> ExactMatrix:
        up = _sparse(_m([[0, 0], [1, 0]]))
        return self._embed(self.n + i, up, string_slots=range(self.n, self.n + i))

    def f_operator(self) -> ExactMatrix:
        return self._embed(2 * self.n, _sparse(PAULI_X), string_slots=range(self.n, 2 * self.n))

    def interior(self, margin: int = 3) -> np.ndarray:
        """Positions (in the truncated space) with every boson occupation <= D - margin."""
        occ = self.kept_occupations[:, :self.n]
        return np.flatnonzero(np.all(occ <= self.cutoff - margin, axis=1))

    def boundary(self) -> np.ndarray:
        occ = self.kept_occupations[:, :self.n]
        return np.flatnonzero(np.any(occ == self.cutoff - 1, axis=1))


def _sparse(m: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(sp.csr_matrix(m.re), sp.csr_matrix(m.im), m.den)


def _anti_half(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    return (x @ y + y @ x).scale(Fraction(1, 2))


def fock_matrices(n_modes: int, cutoff: int) -> dict[str, ExactMatrix]:
    """Truncated images of every bf generator, keyed by label.

    Composite generators are formed on a padded space and then restricted, so
    each returned matrix is the exact compression of the true operator.
    """
    space = FockSpace(n_modes, cutoff)
    a = [space.boson_lower(i) for i in range(n_modes)]
    ad = [space.boson_raise(i) for i in range(n_modes)]
    al = [space.fermion_lower(i) for i in range(n_modes)]
    ald = [space.fermion_raise(i) for i in range(n_modes)]
    F = space.f_operator()
    eye = ExactMatrix.identity(F.shape[0], sparse=True)
    out: dict[str, ExactMatrix] = {}
    for g in all_generators(n_modes):
        i, j = g.i - 1, g.j - 1
        k = g.kind
        if k is Kind.ONE:
            m = eye
        elif k is Kind.A:
            m = _anti_half(a[i], a[j])
        elif k is Kind.ADAG:
            m = _anti_half(ad[i], ad[j])
        elif k is Kind.N:
            m = _anti_half(ad[i], a[j])
        elif k is Kind.ALPHA:
            m = al[i]
        elif k is Kind.ALPHADAG:
            m = ald[i]
        elif k is Kind.BETA:
            m = _anti_half(a[i], F)
        elif k is Kind.BETADAG:
            m = _anti_half(ad[i], F)
        elif k is Kind.BOSON:
            m = a[i]
        elif k is Kind.BOSONDAG:
            m = ad[i]
        else:
            m = F
        out[g.label] = m.restrict(space.keep)
    return out


def fock_space(n_modes: int, cutoff: int) -> FockSpace:
    return FockSpace(n_modes, cutoff)


def check_bf_on_fock(n_modes: int, cutoff: int, margin: int = 3) -> Report:
    """Every bf relation, both sides applied to interior basis vectors."""
    if cutoff < 6:
        raise ValueError("cutoff must be at least 6")
    mats = fock_matrices(n_modes, cutoff)
    cols = FockSpace(n_modes, cutoff).interior(margin)
    violations = []
    gens = all_generators(n_modes)
    for a, x in enumerate(gens):
        for b, y in enumerate(gens):
            s = -1 if dot(x.grade, y.grade) & 1 else 1
            mx, my = mats[x.label], mats[y.label].columns(cols)
            lhs = mx @ my - mats[y.label] @ mats[x.label].columns(cols).scale(s)
            combo = claimed_bracket(x, y)
            rhs = ExactMatrix(sp.csr_matrix(lhs.re.shape, dtype=np.int64))
            for c, g in combo:
                rhs = rhs + mats[g.label].columns(cols).scale(c)
            if lhs != rhs:
                violations.append(Violation(lhs=f"[[{x}, {y}]]", rhs=format_combo(combo),
                                            residual="matrix mismatch on interior vectors", at=(a, b)))
    return Report("oracle fock", {"modes": n_modes, "cutoff": cutoff, "margin": margin},
                  len(gens) ** 2, violations)


def dump_matrices(mats: dict[str, ExactMatrix]) -> str:
    return json.dumps({k: v.to_lists() for k, v in mats.items()})

