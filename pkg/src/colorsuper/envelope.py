"""Normal ordering in the n-mode boson-fermion enveloping algebra with F.

Relations: ``[a_i, a_j^+] = d_ij``, ``{alpha_i, alpha_j^+} = d_ij``,
``{alpha_i, alpha_j} = {alpha_i^+, alpha_j^+} = 0``, ``F^2 = 1``, F commutes
with bosons and anticommutes with fermions.

A normal word is

    a1^+^p1 .. an^+^pn  alpha1^+^r1 .. alphan^+^rn  alphan^sn .. alpha1^s1  an^qn .. a1^q1  F^d

Every product is rewritten into a combination of normal words, which makes
equality in the algebra decidable.  The same engine produces the regraded
Z2 x Z2 color superalgebra bf(n) and its ordinary Z2 parent bf_source(n).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .grading import GradeVec, PairingKind, dot
from .graded_algebra import BasisElement, ClosureError, ColorAlgebra, Element
from .report import Report, Violation


@dataclass(frozen=True, order=True)
class NormalWord:
    bc: tuple[int, ...]   # boson creation exponents
    ba: tuple[int, ...]   # boson annihilation exponents
    fc: tuple[int, ...]   # fermion creation bits
    fa: tuple[int, ...]   # fermion annihilation bits
    f: int = 0

    @classmethod
    def one(cls, n: int) -> NormalWord:
        z = (0,) * n
        return cls(z, z, z, z, 0)

    @property
    def modes(self) -> int:
        return len(self.bc)

    @property
    def fermion_parity(self) -> int:
        return (sum(self.fc) + sum(self.fa) + self.f) & 1

    def letters(self) -> list[tuple[str, int]]:
        n = self.modes
        out = []
        for i in range(n):
            out += [("adag", i)] * self.bc[i]
        for i in range(n):
            out += [("alphadag", i)] * self.fc[i]
        for i in reversed(range(n)):
            out += [("alpha", i)] * self.fa[i]
        for i in reversed(range(n)):
            out += [("a", i)] * self.ba[i]
        if self.f:
            out.append(("F", 0))
        return out

    def __str__(self) -> str:
        if not any(self.bc + self.ba + self.fc + self.fa) and not self.f:
            return "1"
        parts = []
        for name, i in self.letters():
            sym = name if name == "F" else f"{name}{i + 1}"
            if parts and parts[-1][0] == sym:
                parts[-1][1] += 1
            else:
                parts.append([sym, 1])
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in parts)


def _set(t: tuple[int, ...], i: int, v: int) -> tuple[int, ...]:
    return t[:i] + (v,) + t[i + 1:]


def _times_letter(w: NormalWord, letter: tuple[str, int]) -> list[tuple[NormalWord, int]]:
    """Normal form of ``w * letter`` as (word, integer coefficient) pairs."""
    kind, i = letter
    if kind == "F":
        return [(NormalWord(w.bc, w.ba, w.fc, w.fa, 1 - w.f), 1)]
    if kind == "a":
        return [(NormalWord(w.bc, _set(w.ba, i, w.ba[i] + 1), w.fc, w.fa, w.f), 1)]
    if kind == "adag":
        out = [(NormalWord(_set(w.bc, i, w.bc[i] + 1), w.ba, w.fc, w.fa, w.f), 1)]
        q = w.ba[i]
        if q:
            out.append((NormalWord(w.bc, _set(w.ba, i, q - 1), w.fc, w.fa, w.f), q))
        return out
    sign = -1 if w.f else 1  # passing F
    if kind == "alpha":
        if w.fa[i]:
            return []
        if sum(w.fa[:i]) & 1:
            sign = -sign
        return [(NormalWord(w.bc, w.ba, w.fc, _set(w.fa, i, 1), w.f), sign)]
    if kind == "alphadag":
        out = []
        if w.fa[i]:
            # contraction alpha_i alpha_i^+ -> 1, after passing alpha_j (j < i)
            s = sign * (-1 if sum(w.fa[:i]) & 1 else 1)
            out.append((NormalWord(w.bc, w.ba, w.fc, _set(w.fa, i, 0), w.f), s))
        if not w.fc[i]:
            s = sign * (-1 if sum(w.fa) & 1 else 1) * (-1 if sum(w.fc[i + 1:]) & 1 else 1)
            out.append((NormalWord(w.bc, w.ba, _set(w.fc, i, 1), w.fa, w.f), s))
        return out
    raise ValueError(f"unknown letter {letter!r}")


class EnvElement:
    """Sparse combination of normal words with exact rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[NormalWord, Fraction] | None = None):
        self.n = n
        self.terms = {w: Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, n: int, c=1) -> EnvElement:
        return cls(n, {NormalWord.one(n): Fraction(c)})

    @classmethod
    def letter(cls, n: int, kind: str, i: int = 0) -> EnvElement:
        return cls(n, {_letter_word(n, kind, i): Fraction(1)})

    def __add__(self, other: EnvElement) -> EnvElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return EnvElement(self.n, out)

    def __neg__(self) -> EnvElement:
        return EnvElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: EnvElement) -> EnvElement:
        return self + (-other)

    def __mul__(self, other) -> EnvElement:
        if isinstance(other, EnvElement):
            return normal_mul(self, other)
        return EnvElement(self.n, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, scalar) -> EnvElement:
        return EnvElement(self.n, {w: c * scalar for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, EnvElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            ws = str(w)
            if ws == "1":
                body = str(abs(c))
            else:
                body = ws if abs(c) == 1 else f"{abs(c)} {ws}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __repr__ = __str__


def _letter_word(n: int, kind: str, i: int) -> NormalWord:
    w = NormalWord.one(n)
    return _times_letter(w, (kind, i))[0][0]


def normal_mul(x: EnvElement, y: EnvElement) -> EnvElement:
    if x.n != y.n:
        raise ValueError(f"mode counts differ: {x.n} vs {y.n}")
    out: dict[NormalWord, Fraction] = {}
    for wy, cy in y.terms.items():
        letters = wy.letters()
        for wx, cx in x.terms.items():
            cur = {wx: cx * cy}
            for letter in letters:
                nxt: dict[NormalWord, Fraction] = {}
                for w, c in cur.items():
                    for w2, k in _times_letter(w, letter):
                        nxt[w2] = nxt.get(w2, 0) + c * k
                cur = {w: c for w, c in nxt.items() if c}
            for w, c in cur.items():
                out[w] = out.get(w, 0) + c
    return EnvElement(x.n, out)


# ---------------------------------------------------------------- bf generators

class Kind(enum.Enum):
    ONE = "1"
    A = "A"
    ADAG = "Adag"
    N = "N"
    ALPHA = "alpha"
    ALPHADAG = "alphadag"
    BETA = "beta"
    BETADAG = "betadag"
    BOSON = "a"
    BOSONDAG = "adag"
    F = "F"


_PAIR_KINDS = {Kind.A, Kind.ADAG, Kind.N}
_SINGLE_KINDS = {Kind.ALPHA, Kind.ALPHADAG, Kind.BETA, Kind.BETADAG, Kind.BOSON, Kind.BOSONDAG}

# Z2 x Z2 degrees after regrading the bosons.
COLOR_GRADE = {
    Kind.ONE: (0, 0), Kind.A: (0, 0), Kind.ADAG: (0, 0), Kind.N: (0, 0),
    Kind.ALPHA: (1, 0), Kind.ALPHADAG: (1, 0), Kind.BETA: (1, 0), Kind.BETADAG: (1, 0),
    Kind.BOSON: (0, 1), Kind.BOSONDAG: (0, 1),
    Kind.F: (1, 1),
}

# Ordinary Z2 parity of the same elements in the boson-fermion superalgebra.
SUPER_PARITY = {
    Kind.ONE: 0, Kind.A: 0, Kind.ADAG: 0, Kind.N: 0, Kind.BOSON: 0, Kind.BOSONDAG: 0,
    Kind.ALPHA: 1, Kind.ALPHADAG: 1, Kind.BETA: 1, Kind.BETADAG: 1, Kind.F: 1,
}


class IndexRangeError(ValueError):
    pass


@dataclass(frozen=True)
class BfGenerator:
    kind: Kind
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind in (Kind.A, Kind.ADAG) and self.i > self.j:
            # symmetric by definition; store the i <= j representative
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)

    @property
    def grade(self) -> GradeVec:
        return GradeVec.from_bits(COLOR_GRADE[self.kind])

    @property
    def parity(self) -> int:
        return SUPER_PARITY[self.kind]

    @property
    def label(self) -> str:
        k = self.kind.value
        if self.kind in _PAIR_KINDS:
            return f"{k}_{self.i}{self.j}"
        if self.kind in _SINGLE_KINDS:
            return f"{k}_{self.i}"
        return k

    def check(self, n: int) -> None:
        idx = []
        if self.kind in _PAIR_KINDS:
            idx = [self.i, self.j]
        elif self.kind in _SINGLE_KINDS:
            idx = [self.i]
        if any(not 1 <= t <= n for t in idx):
            raise IndexRangeError(f"{self.label}: indices must lie in 1..{n}")

    def __str__(self) -> str:
        return self.label


def bf_basis(n: int) -> list[BfGenerator]:
    """Basis of bf(n): 1, A_ij (i<=j), A+_ij (i<=j), N_ij, alpha, alpha+, beta, beta+, a, a+, F."""
    modes = range(1, n + 1)
    out = [BfGenerator(Kind.ONE)]
    out += [BfGenerator(Kind.A, i, j) for i in modes for j in modes if i <= j]
    out += [BfGenerator(Kind.ADAG, i, j) for i in modes for j in modes if i <= j]
    out += [BfGenerator(Kind.N, i, j) for i in modes for j in modes]
    for kind in (Kind.ALPHA, Kind.ALPHADAG, Kind.BETA, Kind.BETADAG, Kind.BOSON, Kind.BOSONDAG):
        out += [BfGenerator(kind, i) for i in modes]
    out.append(BfGenerator(Kind.F))
    return out


def all_generators(n: int) -> list[BfGenerator]:
    """Basis generators with every index combination, including both orders of A, A+."""
    modes = range(1, n + 1)
    out = [BfGenerator(Kind.ONE)]
    for kind in (Kind.A, Kind.ADAG, Kind.N):
        out += [BfGenerator(kind, i, j) for i in modes for j in modes]
    for kind in (Kind.ALPHA, Kind.ALPHADAG, Kind.BETA, Kind.BETADAG, Kind.BOSON, Kind.BOSONDAG):
        out += [BfGenerator(kind, i) for i in modes]
    out.append(BfGenerator(Kind.F))
    return out


def parse_generator(text: str) -> BfGenerator:
    """Parse labels such as ``N_12``, ``betadag_1``, ``F``, ``1``; bare names mean mode 1."""
    name, _, idx = text.strip().partition("_")
    try:
        kind = Kind(name)
    except ValueError:
        raise ValueError(f"unknown bf generator {text!r}") from None
    if kind in _PAIR_KINDS:
        idx = idx or "11"
        if len(idx) != 2 or not idx.isdigit():
            raise ValueError(f"{text!r}: pair generators need two single-digit indices")
        return BfGenerator(kind, int(idx[0]), int(idx[1]))
    if kind in _SINGLE_KINDS:
        return BfGenerator(kind, int(idx or 1))
    if idx:
        raise ValueError(f"{text!r} takes no index")
    return BfGenerator(kind)


def _sym(x: EnvElement, y: EnvElement) -> EnvElement:
    return (x * y + y * x) * Fraction(1, 2)


def realize(g: BfGenerator, n: int) -> EnvElement:
    """Expand a bf generator from its defining (anti)commutator."""
    g.check(n)
    L = lambda kind, i=0: EnvElement.letter(n, kind, i)  # noqa: E731
    i, j = g.i - 1, g.j - 1
    k = g.kind
    if k is Kind.ONE:
        return EnvElement.scalar(n)
    if k is Kind.A:
        return _sym(L("a", i), L("a", j))
    if k is Kind.ADAG:
        return _sym(L("adag", i), L("adag", j))
    if k is Kind.N:
        return _sym(L("adag", i), L("a", j))
    if k is Kind.ALPHA:
        return L("alpha", i)
    if k is Kind.ALPHADAG:
        return L("alphadag", i)
    if k is Kind.BETA:
        return _sym(L("a", i), L("F"))
    if k is Kind.BETADAG:
        return _sym(L("adag", i), L("F"))
    if k is Kind.BOSON:
        return L("a", i)
    if k is Kind.BOSONDAG:
        return L("adag", i)
    return L("F")


def env_bracket(x: EnvElement, y: EnvElement, sign: int) -> EnvElement:
    """``xy - sign * yx``."""
    return x * y - (y * x) * sign


def graded_bracket(x: BfGenerator, y: BfGenerator, n: int) -> EnvElement:
    """Z2 x Z2 color bracket computed in the enveloping algebra."""
    sign = -1 if dot(x.grade, y.grade) & 1 else 1
    return env_bracket(realize(x, n), realize(y, n), sign)


def super_bracket(x: BfGenerator, y: BfGenerator, n: int) -> EnvElement:
    """Ordinary Z2 bracket of the boson-fermion superalgebra."""
    sign = -1 if x.parity & y.parity else 1
    return env_bracket(realize(x, n), realize(y, n), sign)


# ------------------------------------------------------- the claimed relation table

Combo = list[tuple[Fraction, BfGenerator]]


def _d(a: int, b: int) -> int:
    return 1 if a == b else 0


def _listed(x: BfGenerator, y: BfGenerator) -> Combo | None:
    """Right-hand side of the listed relation ``[[x, y]]``, or None if not listed."""
    K = Kind
    G = BfGenerator
    X, Y = x.kind, y.kind
    i, j = x.i, x.j
    if X is K.A and Y is K.ADAG:
        k, l = y.i, y.j
        return [(_d(j, k), G(K.N, l, i)), (_d(i, l), G(K.N, k, j)),
                (_d(i, k), G(K.N, l, j)), (_d(j, l), G(K.N, k, i))]
    if X is K.A and Y is K.N:
        k, l = y.i, y.j
        return [(_d(i, k), G(K.A, j, l)), (_d(j, k), G(K.A, i, l))]
    if X is K.ADAG and Y is K.N:
        k, l = y.i, y.j
        return [(-_d(i, l), G(K.ADAG, k, j)), (-_d(j, l), G(K.ADAG, i, k))]
    if X is K.N and Y is K.N:
        k, l = y.i, y.j
        return [(_d(j, k), G(K.N, i, l)), (-_d(i, l), G(K.N, k, j))]
    if X is K.A and Y is K.BETADAG:
        k = y.i
        return [(_d(i, k), G(K.BETA, j)), (_d(j, k), G(K.BETA, i))]
    if X is K.ADAG and Y is K.BETA:
        k = y.i
        return [(-_d(i, k), G(K.BETADAG, j)), (-_d(j, k), G(K.BETADAG, i))]
    if X is K.N and Y is K.BETA:
        return [(-_d(i, y.i), G(K.BETA, j))]
    if X is K.N and Y is K.BETADAG:
        return [(_d(j, y.i), G(K.BETADAG, i))]
    if X is K.A and Y is K.BOSONDAG:
        k = y.i
        return [(_d(i, k), G(K.BOSON, j)), (_d(j, k), G(K.BOSON, i))]
    if X is K.ADAG and Y is K.BOSON:
        k = y.i
        return [(-_d(i, k), G(K.BOSONDAG, j)), (-_d(j, k), G(K.BOSONDAG, i))]
    if X is K.N and Y is K.BOSON:
        return [(-_d(i, y.i), G(K.BOSON, j))]
    if X is K.N and Y is K.BOSONDAG:
        return [(_d(j, y.i), G(K.BOSONDAG, i))]
    if X is K.ALPHA and Y is K.ALPHADAG:
        return [(_d(i, y.i), G(K.ONE))]
    if X is K.BETA and Y is K.BETA:
        return [(2, G(K.A, i, y.i))]
    if X is K.BETA and Y is K.BETADAG:
        return [(2, G(K.N, y.i, i))]
    if X is K.BETADAG and Y is K.BETADAG:
        return [(2, G(K.ADAG, i, y.i))]
    if X is K.BETA and Y is K.BOSONDAG:
        return [(_d(i, y.i), G(K.F))]
    if X is K.BETADAG and Y is K.BOSON:
        return [(-_d(i, y.i), G(K.F))]
    if X is K.BETA and Y is K.F:
        return [(2, G(K.BOSON, i))]
    if X is K.BETADAG and Y is K.F:
        return [(2, G(K.BOSONDAG, i))]
    if X is K.BOSON and Y is K.BOSON:
        return [(2, G(K.A, i, y.i))]
    if X is K.BOSON and Y is K.BOSONDAG:
        return [(2, G(K.N, y.i, i))]
    if X is K.BOSONDAG and Y is K.BOSONDAG:
        return [(2, G(K.ADAG, i, y.i))]
    if X is K.BOSON and Y is K.F:
        return [(2, G(K.BETA, i))]
    if X is K.BOSONDAG and Y is K.F:
        return [(2, G(K.BETADAG, i))]
    return None


def claimed_bracket(x: BfGenerator, y: BfGenerator) -> Combo:
    """The bf relation table, completed by graded antisymmetry; unlisted pairs are zero."""
    rhs = _listed(x, y)
    if rhs is None:
        rev = _listed(y, x)
        if rev is not None:
            s = -1 if dot(x.grade, y.grade) & 1 else 1
            rhs = [(-s * c, g) for c, g in rev]
        else:
            rhs = []
    return [(Fraction(c), g) for c, g in rhs if c]


def realize_combo(combo: Iterable[tuple[Fraction, BfGenerator]], n: int) -> EnvElement:
    total = EnvElement(n)
    for c, g in combo:
        total = total + realize(g, n) * c
    return total


def format_combo(combo: Iterable[tuple[Fraction, BfGenerator]]) -> str:
    parts = [f"{c}*{g}" if c != 1 else str(g) for c, g in combo]
    return " + ".join(parts) if parts else "0"


# -------------------------------------------------------------- span reduction

class Span:
    """Exact decomposition of enveloping-algebra elements over a finite basis."""

    def __init__(self, elements: list[EnvElement]):
        self.size = len(elements)
        self._rows: list[tuple[NormalWord, dict[NormalWord, Fraction], dict[int, Fraction]]] = []
        for idx, e in enumerate(elements):
            vec = dict(e.terms)
            combo = {idx: Fraction(1)}
            vec, combo = self._reduce(vec, combo)
            if not vec:
                raise ValueError(f"basis element {idx} is linearly dependent")
            pivot = max(vec)
            inv = 1 / vec[pivot]
            vec = {w: c * inv for w, c in vec.items()}
            combo = {k: c * inv for k, c in combo.items()}
            self._rows.append((pivot, vec, combo))

    def _reduce(self, vec, combo):
        for pivot, rvec, rcombo in self._rows:
            c = vec.get(pivot)
            if c:
                for w, v in rvec.items():
                    vec[w] = vec.get(w, 0) - c * v
                for k, v in rcombo.items():
                    combo[k] = combo.get(k, 0) - c * v
                vec = {w: v for w, v in vec.items() if v}
        return vec, combo

    def decompose(self, e: EnvElement) -> dict[int, Fraction] | None:
        """Coefficients over the basis, or None if ``e`` is outside the span."""
        vec, combo = self._reduce(dict(e.terms), {})
        if vec:
            return None
        # combo expresses  e - sum(coeff * basis) = 0  with the sign flipped
        return {k: -c for k, c in combo.items() if c}


def _span_algebra(name: str, gens: list[BfGenerator], n: int, n_bits: int,
                  grade_of, bracket) -> ColorAlgebra:
    span = Span([realize(g, n) for g in gens])
    table = {}
    for a, x in enumerate(gens):
        for b, y in enumerate(gens):
            br = bracket(x, y, n)
            if not br:
                continue
            coeffs = span.decompose(br)
            if coeffs is None:
                raise ClosureError(f"[[{x}, {y}]] = {br} leaves the span of {name}")
            table[a, b] = list(coeffs.items())
    basis = [BasisElement(g.label, grade_of(g)) for g in gens]
    return ColorAlgebra(name, n_bits, PairingKind.DOT, basis, table)


def export_bf(n: int) -> ColorAlgebra:
    """bf(n) as a Z2 x Z2 color superalgebra with structure constants read off the envelope."""
    if n < 1:
        raise ValueError("need at least one mode")
    return _span_algebra(f"bf({n})", bf_basis(n), n, 2, lambda g: g.grade, graded_bracket)


def bf_source_algebra(n: int) -> ColorAlgebra:
    """Same span with the ordinary Z2 parity (N=1 color superalgebra)."""
    if n < 1:
        raise ValueError("need at least one mode")
    return _span_algebra(f"bf_source({n})", bf_basis(n), n, 1,
                         lambda g: GradeVec(1, g.parity), super_bracket)


# ---------------------------------------------------------------- verification

def _pair_violation(x, y, lhs: EnvElement, rhs_text: str, rhs: EnvElement, at) -> Violation:
    return Violation(lhs=f"[[{x}, {y}]] = {lhs}", rhs=f"{rhs_text} = {rhs}",
                     residual=str(lhs - rhs), at=at)


def verify_bf_relations(n: int) -> Report:
    """Recompute every bf bracket and compare with the relation table; also check closure."""
    if n < 1:
        raise ValueError("need at least one mode")
    gens = all_generators(n)
    span = Span([realize(g, n) for g in bf_basis(n)])
    cache = {g: realize(g, n) for g in gens}
    violations = []
    count = 0
    for a, x in enumerate(gens):
        for b, y in enumerate(gens):
            count += 1
            s = -1 if dot(x.grade, y.grade) & 1 else 1
            lhs = env_bracket(cache[x], cache[y], s)
            combo = claimed_bracket(x, y)
            rhs = realize_combo(combo, n)
            if lhs != rhs:
                violations.append(_pair_violation(x, y, lhs, format_combo(combo), rhs, (a, b)))
            elif lhs and span.decompose(lhs) is None:
                violations.append(Violation(lhs=f"[[{x}, {y}]] = {lhs}", rhs="span of bf basis",
                                            residual="not in span", at=(a, b)))
    return Report("bf verify", {"modes": n}, count, violations)


def verify_jacobi_in_envelope(n: int = 1) -> Report:
    """Graded Jacobi on every basis triple, evaluated directly on normal forms."""
    gens = bf_basis(n)
    real = [realize(g, n) for g in gens]
    sign = [[-1 if dot(x.grade, y.grade) & 1 else 1 for y in gens] for x in gens]
    br = {}
    for a in range(len(gens)):
        for b in range(len(gens)):
            br[a, b] = env_bracket(real[a], real[b], sign[a][b])
    violations = []
    count = 0
    for x in range(len(gens)):
        for y in range(len(gens)):
            for z in range(len(gens)):
                count += 1
                total = EnvElement(n)
                for o, p, r in ((x, y, z), (y, z, x), (z, x, y)):
                    inner = br[p, r]
                    if inner:
                        total = total + env_bracket(real[o], inner, sign[o][p] * sign[o][r]) * sign[o][r]
                if total:
                    violations.append(Violation(
                        lhs=f"[[{gens[x]},[[{gens[y]},{gens[z]}]]]] + cyclic", rhs="0",
                        residual=str(total), at=(x, y, z)))
    return Report("bf jacobi (envelope)", {"modes": n}, count, violations)


# --------------------------------------------------------- triangular decomposition

class Part(enum.Enum):
    RAISING = "raising"
    CARTAN = "cartan"
    LOWERING = "lowering"


@dataclass(frozen=True)
class Triangular:
    part: Part
    decoupled_fermion: bool = False


class UnsupportedError(ValueError):
    pass


_TRIANGULAR = {
    Kind.ADAG: Part.RAISING, Kind.BOSONDAG: Part.RAISING,
    Kind.ALPHADAG: Part.RAISING, Kind.BETADAG: Part.RAISING,
    Kind.ONE: Part.CARTAN, Kind.N: Part.CARTAN, Kind.F: Part.CARTAN,
    Kind.A: Part.LOWERING, Kind.BOSON: Part.LOWERING, Kind.ALPHA: Part.LOWERING, Kind.BETA: Part.LOWERING,
}


def classify_triangular(g: BfGenerator) -> Triangular:
    """Placement of a single-mode generator in bf = bf_+ + bf_0 + bf_-."""
    if max(g.i, g.j) > 1:
        raise UnsupportedError("the triangular decomposition is defined for one mode only")
    return Triangular(_TRIANGULAR[g.kind], g.kind in (Kind.ALPHA, Kind.ALPHADAG))


def ad_eigenvalue(h: BfGenerator, g: BfGenerator, n: int = 1) -> Fraction | None:
    """λ with [[h, g]] = λ g in the envelope, or None if g is not an eigenvector."""
    br = graded_bracket(h, g, n)
    if not br:
        return Fraction(0)
    base = realize(g, n)
    w = max(base.terms)
    lam = br.terms.get(w, Fraction(0)) / base.terms[w]
    return lam if br == base * lam else None


def iter_pairs(items: list) -> Iterator[tuple[int, int]]:
    for a in range(len(items)):
        for b in range(len(items)):
            yield a, b
