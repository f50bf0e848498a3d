"""Z2xZ2-graded polynomials in (x, psi, theta1, theta2) and the bf(1) vector fields.

Variables and their grades::

    x      (0,0)   commuting
    psi    (0,1)
    theta1 (1,0)
    theta2 (1,0)

Two variables swap with sign ``(-1)^(a.b)``, so psi commutes with both thetas
while theta1 theta2 = -theta2 theta1, and every non-x variable squares to zero.

A monomial is ``(k, mask)``: ``x^k`` times the graded variables in ``mask``
(bit 0 psi, bit 1 theta1, bit 2 theta2) written in canonical order.  Derivative
words use the same shape, because the derivatives obey the same reordering
rule as the variables they differentiate.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .clifford import Signature, kappa_mask, mask_label
from .envelope import BfGenerator, Kind, bf_basis, claimed_bracket, format_combo
from .grading import GradeVec
from .report import Report, Violation

NAMES = ("psi", "theta1", "theta2")
GRADES = ((0, 1), (1, 0), (1, 0))
VARIABLES = ("x",) + NAMES

Monomial = tuple[int, int]
ONE: Monomial = (0, 0)


def _dot(g: tuple[int, int], h: tuple[int, int]) -> int:
    return (g[0] & h[0]) ^ (g[1] & h[1])


def mono_grade(m: Monomial) -> tuple[int, int]:
    g = (0, 0)
    for b, h in enumerate(GRADES):
        if m[1] >> b & 1:
            g = (g[0] ^ h[0], g[1] ^ h[1])
    return g


def _swap_parity(left: int, right: int) -> int:
    """Parity of sorting ``left`` followed by ``right`` into canonical order."""
    s = 0
    for u in range(3):
        if left >> u & 1:
            for v in range(u):
                if right >> v & 1:
                    s ^= _dot(GRADES[u], GRADES[v])
    return s


def mono_mul(m1: Monomial, m2: Monomial) -> tuple[int, Monomial] | None:
    if m1[1] & m2[1]:
        return None
    sign = -1 if _swap_parity(m1[1], m2[1]) else 1
    return sign, (m1[0] + m2[0], m1[1] | m2[1])


def mono_str(m: Monomial, derivative: bool = False) -> str:
    k, mask = m
    if derivative:
        parts = ["d/dx"] * k + [f"d/d{NAMES[b]}" for b in range(3) if mask >> b & 1]
        return " ".join(parts)
    parts = []
    if k == 1:
        parts.append("x")
    elif k > 1:
        parts.append(f"x^{k}")
    parts += [NAMES[b] for b in range(3) if mask >> b & 1]
    return "*".join(parts) or "1"


def _coeff_text(c: Fraction, body: str, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if body == "1":
        core = str(mag)
    elif mag == 1:
        core = body
    else:
        core = f"{mag}*{body}"
    return f"{sign}{core}" if first else f" {sign} {core}"


class GradedPoly:
    """Sparse exact polynomial; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, name: str) -> GradedPoly:
        if name == "x":
            return cls({(1, 0): 1})
        return cls({(0, 1 << NAMES.index(name)): 1})

    @classmethod
    def const(cls, c) -> GradedPoly:
        return cls({ONE: Fraction(c)})

    @classmethod
    def monomial(cls, k: int, psi: int = 0, theta1: int = 0, theta2: int = 0) -> GradedPoly:
        return cls({(k, psi | theta1 << 1 | theta2 << 2): 1})

    def __add__(self, o: GradedPoly) -> GradedPoly:
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPoly(out)

    def __neg__(self) -> GradedPoly:
        return GradedPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, o: GradedPoly) -> GradedPoly:
        return self + (-o)

    def __mul__(self, o) -> GradedPoly:
        if not isinstance(o, GradedPoly):
            return GradedPoly({m: c * Fraction(o) for m, c in self.terms.items()})
        return mul(self, o)

    __rmul__ = __mul__

    def __eq__(self, o) -> bool:
        if isinstance(o, GradedPoly):
            return self.terms == o.terms
        return self.terms == GradedPoly.const(o).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def grades(self) -> set[tuple[int, int]]:
        return {mono_grade(m) for m in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "".join(_coeff_text(c, mono_str(m), i == 0)
                       for i, (m, c) in enumerate(sorted(self.terms.items())))

    __repr__ = __str__


def mul(p: GradedPoly, q: GradedPoly) -> GradedPoly:
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            r = mono_mul(m1, m2)
            if r:
                s, m = r
                out[m] = out.get(m, 0) + s * c1 * c2
    return GradedPoly(out)


def _derive_mono(v: int, m: Monomial) -> tuple[Fraction, Monomial] | None:
    """Left derivative by variable ``v`` (0 = x, 1.. = NAMES) of a bare monomial."""
    k, mask = m
    if v == 0:
        return (Fraction(k), (k - 1, mask)) if k else None
    b = v - 1
    if not mask >> b & 1:
        return None
    s = _swap_parity(1 << b, mask & ((1 << b) - 1))
    return Fraction(-1 if s else 1), (k, mask & ~(1 << b))


def left_derive(v: str, p: GradedPoly) -> GradedPoly:
    idx = VARIABLES.index(v)
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        r = _derive_mono(idx, m)
        if r:
            s, m2 = r
            out[m2] = out.get(m2, 0) + s * c
    return GradedPoly(out)


# ------------------------------------------------------------------ operators

Term = tuple[Monomial, Monomial]  # (coefficient monomial, derivative word)


class DiffOperator:
    """Sum of ``coefficient * derivative-word`` with derivatives to the right."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Term, Fraction] | None = None):
        self.terms = {t: Fraction(c) for t, c in (terms or {}).items() if c}

    @classmethod
    def identity(cls) -> DiffOperator:
        return cls({(ONE, ONE): 1})

    @classmethod
    def multiply_by(cls, p: GradedPoly) -> DiffOperator:
        return cls({(m, ONE): c for m, c in p.terms.items()})

    @classmethod
    def d(cls, v: str) -> DiffOperator:
        return cls({(ONE, GradedPoly.var(v).terms.popitem()[0]): 1})

    @property
    def grade(self) -> GradeVec:
        gs = {_add(mono_grade(c), mono_grade(w)) for c, w in self.terms}
        if len(gs) > 1:
            raise ValueError(f"operator {self} is not homogeneous")
        g = gs.pop() if gs else (0, 0)
        return GradeVec.from_bits(g)

    def __add__(self, o: DiffOperator) -> DiffOperator:
        out = dict(self.terms)
        for t, c in o.terms.items():
            out[t] = out.get(t, 0) + c
        return DiffOperator(out)

    def __neg__(self) -> DiffOperator:
        return DiffOperator({t: -c for t, c in self.terms.items()})

    def __sub__(self, o: DiffOperator) -> DiffOperator:
        return self + (-o)

    def scale(self, c) -> DiffOperator:
        return DiffOperator({t: v * Fraction(c) for t, v in self.terms.items()})

    def __matmul__(self, o: DiffOperator) -> DiffOperator:
        return compose(self, o)

    def __call__(self, p: GradedPoly) -> GradedPoly:
        return apply(self, p)

    def __eq__(self, o) -> bool:
        return isinstance(o, DiffOperator) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        chunks = []
        for i, ((c, w), v) in enumerate(items):
            if w == ONE:
                body = mono_str(c)
            elif c == ONE:
                body = mono_str(w, derivative=True)
            else:
                body = f"{mono_str(c)} {mono_str(w, derivative=True)}"
            chunks.append(_coeff_text(v, body, i == 0))
        return "".join(chunks)

    __repr__ = __str__


def _add(g, h):
    return (g[0] ^ h[0], g[1] ^ h[1])


def _word_letters(w: Monomial) -> list[int]:
    """Derivative word as variable indices, leftmost first."""
    k, mask = w
    return [0] * k + [b + 1 for b in range(3) if mask >> b & 1]


def _letter_grade(v: int) -> tuple[int, int]:
    return (0, 0) if v == 0 else GRADES[v - 1]


def _letter_mono(v: int) -> Monomial:
    return (1, 0) if v == 0 else (0, 1 << (v - 1))


def _push_derivative(v: int, op: Mapping[Term, Fraction]) -> dict[Term, Fraction]:
    """``d_v o op`` via the graded Leibniz rule."""
    out: dict[Term, Fraction] = {}
    gv = _letter_grade(v)
    for (c, w), val in op.items():
        r = _derive_mono(v, c)
        if r:
            s, c2 = r
            out[c2, w] = out.get((c2, w), 0) + s * val
        r = mono_mul(_letter_mono(v), w)
        if r:
            s, w2 = r
            if _dot(gv, mono_grade(c)):
                s = -s
            out[c, w2] = out.get((c, w2), 0) + s * val
    return out


def compose(X: DiffOperator, Y: DiffOperator) -> DiffOperator:
    out: dict[Term, Fraction] = {}
    for (c1, w1), v1 in X.terms.items():
        acc = dict(Y.terms)
        for letter in reversed(_word_letters(w1)):
            acc = _push_derivative(letter, acc)
        for (c2, w2), v2 in acc.items():
            r = mono_mul(c1, c2)
            if r:
                s, c = r
                out[c, w2] = out.get((c, w2), 0) + s * v1 * v2
    return DiffOperator(out)


def apply(X: DiffOperator, p: GradedPoly) -> GradedPoly:
    out = GradedPoly()
    for (c, w), v in X.terms.items():
        q = p
        for letter in reversed(_word_letters(w)):
            q = left_derive(VARIABLES[letter], q)
        out = out + mul(GradedPoly({c: v}), q)
    return out


def op_bracket(X: DiffOperator, Y: DiffOperator) -> DiffOperator:
    s = -1 if _dot(tuple(X.grade.bits), tuple(Y.grade.bits)) else 1
    return compose(X, Y) - compose(Y, X).scale(s)


# ------------------------------------------------------------ bf(1) fields

def _op(*pieces: tuple[int | Fraction, str, str]) -> DiffOperator:
    """Build from ``(coefficient, "x*psi", "theta1")`` triples; "" means 1 / no derivative."""
    out = DiffOperator()
    for c, coef, deriv in pieces:
        poly = GradedPoly.const(1)
        for name in filter(None, coef.split("*")):
            poly = poly * GradedPoly.var(name)
        term = DiffOperator.multiply_by(poly.__mul__(c))
        if deriv:
            term = compose(term, DiffOperator.d(deriv))
        out = out + term
    return out


def bf_vector_fields() -> dict[BfGenerator, DiffOperator]:
    K = Kind
    g = {k: BfGenerator(k, 1, 1) if k in (K.A, K.ADAG, K.N) else
         (BfGenerator(k, 1) if k not in (K.ONE, K.F) else BfGenerator(k)) for k in K}
    return {
        g[K.ONE]: DiffOperator.identity(),
        g[K.ADAG]: _op((-1, "", "x")),
        g[K.BOSONDAG]: _op((-1, "", "psi"), (1, "psi", "x")),
        g[K.ALPHADAG]: _op((-1, "", "theta2")),
        g[K.BETADAG]: _op((-1, "", "theta1"), (1, "theta1", "x")),
        g[K.N]: _op((-2, "x", "x"), (-1, "psi", "psi"), (-1, "theta1", "theta1")),
        g[K.F]: _op((2, "theta1", "psi"), (2, "psi", "theta1")),
        g[K.A]: _op((-4, "x*x", "x"), (-4, "x*psi", "psi"), (-4, "x*theta1", "theta1")),
        g[K.BOSON]: _op((-2, "x", "psi"), (2, "x*psi", "x"), (2, "psi*theta1", "theta1")),
        g[K.ALPHA]: _op((-1, "theta2", "")),
        g[K.BETA]: _op((2, "x*theta1", "x"), (2, "psi*theta1", "psi"), (-2, "x", "theta1")),
    }


def monomials(max_x_degree: int) -> list[GradedPoly]:
    return [GradedPoly({(k, mask): 1}) for k in range(max_x_degree + 1) for mask in range(8)]


def verify_representation(max_x_degree: int = 4) -> Report:
    if max_x_degree < 2:
        raise ValueError("max_x_degree must be at least 2")
    fields = bf_vector_fields()
    basis = bf_basis(1)
    probes = monomials(max_x_degree)
    violations = []
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            lhs = op_bracket(fields[x], fields[y])
            combo = claimed_bracket(x, y)
            rhs = DiffOperator()
            for c, g in combo:
                rhs = rhs + fields[g].scale(c)
            for p in probes:
                got, want = lhs(p), rhs(p)
                if got != want:
                    violations.append(Violation(
                        lhs=f"[[{x}, {y}]]({p})", rhs=f"({format_combo(combo)})({p}) = {want}",
                        residual=str(got - want), at=(i, j)))
                    break
    return Report("rep verify", {"max_degree": max_x_degree, "monomials": len(probes)},
                  len(basis) ** 2, violations)


def show(name: str | BfGenerator) -> str:
    from .envelope import parse_generator

    g = parse_generator(name) if isinstance(name, str) else name
    fields = bf_vector_fields()
    if g not in fields:
        raise KeyError(f"no vector field for {g}; only the one-mode generators are realized")
    return f"{g} = {fields[g]}"


# ----------------------------------------------------- extended Grassmann

@dataclass(frozen=True)
class Zeta:
    """``sign * gamma_blade (x) xi_{indices}`` with a commuting real factor."""

    grade: tuple[int, int]
    sign: int
    blade: int
    xis: tuple[int, ...]
    label: str


def _grassmann_concat(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    seq = list(a + b)
    if len(set(seq)) != len(seq):
        return None
    inversions = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return (-1) ** inversions, tuple(sorted(seq))


def _zeta_product(u: Zeta, v: Zeta, sig: Signature):
    k = kappa_mask(u.blade, v.blade, sig.negative_mask)
    r = _grassmann_concat(u.xis, v.xis)
    if r is None:
        return None
    s, xis = r
    return u.sign * v.sign * k * s, u.blade ^ v.blade, xis


def zeta_family(copies: int = 2) -> list[Zeta]:
    """``copies`` realizations per grade, every Grassmann factor with its own index."""
    out, xi = [], 0
    for grade, blade, odd in (((0, 0), 0, False), ((1, 0), 1, True), ((0, 1), 2, True), ((1, 1), 3, False)):
        for i in range(1, copies + 1):
            if odd:
                xi += 1
                out.append(Zeta(grade, 1, blade, (xi,), f"{mask_label(blade)}(x)xi{xi}"))
            else:
                out.append(Zeta(grade, 1, blade, (), f"{mask_label(blade)}(x)x{i}"))
    return out


def check_zeta_realization(sig: Signature, copies: int = 2) -> Report:
    if sig.n != 2:
        raise ValueError(f"zeta realization needs p+q = 2, got {sig}")
    fam = zeta_family(copies)
    violations = []
    for i, u in enumerate(fam):
        for j, v in enumerate(fam):
            s = -1 if _dot(u.grade, v.grade) else 1
            uv, vu = _zeta_product(u, v, sig), _zeta_product(v, u, sig)
            ok = (uv is None and vu is None) or (
                uv is not None and vu is not None and uv[1:] == vu[1:] and uv[0] == s * vu[0])
            if not ok:
                violations.append(Violation(lhs=f"[[{u.label}, {v.label}]]", rhs="0",
                                            residual=f"{uv} vs {s:+d}*{vu}", at=(i, j)))
    return Report("rep zeta", {"p": sig.p, "q": sig.q, "copies": copies}, len(fam) ** 2, violations)


def grade_of_term(c: Monomial, w: Monomial) -> tuple[int, int]:
    return _add(mono_grade(c), mono_grade(w))


def operators_grade_consistent(fields: Mapping[BfGenerator, DiffOperator]) -> Iterable[BfGenerator]:
    """Generators whose vector field grade differs from their algebra grade."""
    return [g for g, op in fields.items() if op.terms and op.grade != g.grade]
