"""Finite-dimensional Z2^N color (super)algebras over exact rationals.

An algebra is a list of homogeneous basis elements plus a sparse table of
structure constants ``[[e_i, e_j]] = sum_k c_k e_k``; absent entries are zero.
The three auditors check grading closure, graded antisymmetry and the graded
Jacobi identity

    [[x,[[y,z]]]] (-1)^(x.z) + [[y,[[z,x]]]] (-1)^(y.x) + [[z,[[x,y]]]] (-1)^(z.y) = 0

exhaustively, with ``.`` the algebra's pairing.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np
import scipy.sparse as sp

from .clifford import Signature, kappa_mask, mask_label
from .grading import GradeVec, PairingKind, PairingError, popcount
from .report import Report, Violation


class AlgebraError(ValueError):
    pass


class MalformedElementError(AlgebraError):
    pass


class ClosureError(AlgebraError):
    pass


class FormatError(AlgebraError):
    pass


def parse_scalar(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad coefficient {text!r}") from exc


def format_scalar(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


class Element:
    """Sparse linear combination of basis indices with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for k, c in items:
            acc[k] = acc.get(k, 0) + c
        self.terms = {k: Fraction(c) for k, c in acc.items() if c}

    @classmethod
    def basis(cls, i: int, coeff=1) -> Element:
        return cls({i: Fraction(coeff)})

    def __add__(self, other: Element) -> Element:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Element(out)

    def __neg__(self) -> Element:
        return Element({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __mul__(self, scalar) -> Element:
        return Element({k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Element({self.terms})"


@dataclass(frozen=True)
class BasisElement:
    label: str
    grade: GradeVec


class ColorAlgebra:
    def __init__(self, name: str, n_bits: int, pairing: PairingKind,
                 basis: Iterable[BasisElement],
                 table: Mapping[tuple[int, int], Iterable[tuple[int, Fraction]]],
                 validate: bool = True):
        self.name = name
        self.n_bits = n_bits
        self.pairing = pairing
        self.basis = tuple(basis)
        pairing.check_length(n_bits)
        labels = [b.label for b in self.basis]
        if len(set(labels)) != len(labels):
            raise AlgebraError(f"duplicate basis labels in {name}")
        for b in self.basis:
            if b.grade.n != n_bits:
                raise AlgebraError(f"{b.label} has grade length {b.grade.n}, expected {n_bits}")
        self._index = {label: i for i, label in enumerate(labels)}
        self.masks = [b.grade.mask for b in self.basis]
        dim = len(self.basis)
        clean: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
        for (i, j), terms in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise MalformedElementError(f"table entry ({i},{j}) out of range")
            acc: dict[int, Fraction] = {}
            for k, c in terms:
                if not 0 <= k < dim:
                    raise MalformedElementError(f"table target {k} out of range")
                acc[k] = acc.get(k, 0) + Fraction(c)
            entry = tuple(sorted((k, c) for k, c in acc.items() if c))
            if entry:
                clean[i, j] = entry
        self.table = clean
        if validate:
            bad = check_closure(self)
            if not bad.ok:
                v = bad.violations[0]
                raise ClosureError(f"{name}: {v.lhs} lands outside grade: {v.residual}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def labels(self) -> list[str]:
        return [b.label for b in self.basis]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise MalformedElementError(f"{self.name} has no basis element {label!r}") from None

    def grade(self, i: int) -> GradeVec:
        return self.basis[i].grade

    def element(self, label: str, coeff=1) -> Element:
        return Element.basis(self.index(label), coeff)

    def sign(self, i: int, j: int) -> int:
        """(-1)^(pairing of grades i, j)."""
        return -1 if self.pairing.parity_mask(self.masks[i], self.masks[j]) else 1

    def entry(self, i: int, j: int) -> Element:
        return Element(self.table.get((i, j), ()))

    def bracket(self, x: Element, y: Element) -> Element:
        for e in (x, y):
            if any(not 0 <= k < self.dim for k in e.terms):
                raise MalformedElementError(f"element {e!r} has indices outside 0..{self.dim - 1}")
        return Element(self._bracket_raw(x.terms, y.terms))

    def _bracket_raw(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        table = self.table
        for i, ci in x.items():
            for j, cj in y.items():
                entry = table.get((i, j))
                if entry:
                    c = ci * cj
                    for k, ck in entry:
                        out[k] = out.get(k, 0) + c * ck
        return {k: c for k, c in out.items() if c}

    def with_entry(self, i: int, j: int, terms: Iterable[tuple[int, Fraction]]) -> ColorAlgebra:
        """Copy with one table entry replaced; closure is not re-validated (fault injection)."""
        table = dict(self.table)
        table[i, j] = tuple(terms)
        return ColorAlgebra(self.name, self.n_bits, self.pairing, self.basis, table, validate=False)

    def format(self, e: Element | Mapping[int, Fraction]) -> str:
        terms = e.terms if isinstance(e, Element) else e
        if not terms:
            return "0"
        parts = []
        for k in sorted(terms):
            c = terms[k]
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            parts.append(("-" if c < 0 else "+") + " " + coef + self.basis[k].label)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_json_dict(self) -> dict:
        brackets = []
        for (i, j), entry in sorted(self.table.items()):
            brackets.append({
                "left": self.basis[i].label,
                "right": self.basis[j].label,
                "terms": [{"target": self.basis[k].label, "coeff": format_scalar(c)} for k, c in entry],
            })
        return {
            "name": self.name,
            "grading_bits": self.n_bits,
            "pairing": self.pairing.value,
            "basis": [{"label": b.label, "grade": b.grade.compact()} for b in self.basis],
            "brackets": brackets,
        }

    def __repr__(self) -> str:
        return f"ColorAlgebra({self.name!r}, N={self.n_bits}, {self.pairing.value}, dim={self.dim})"


def parse_algebra_dict(data) -> tuple[str, int, PairingKind, list[BasisElement], dict]:
    """Validate the JSON algebra schema; returns constructor arguments."""
    if not isinstance(data, dict):
        raise FormatError("algebra document must be a JSON object")
    for key in ("name", "grading_bits", "basis"):
        if key not in data:
            raise FormatError(f"missing required field {key!r}")
    unknown = set(data) - {"name", "grading_bits", "pairing", "basis", "brackets"}
    if unknown:
        raise FormatError(f"unknown fields {sorted(unknown)}")
    name = data["name"]
    n = data["grading_bits"]
    if not isinstance(name, str):
        raise FormatError("name must be a string")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("grading_bits must be a positive integer")
    try:
        pairing = PairingKind(data.get("pairing", "dot"))
        pairing.check_length(n)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    basis = []
    if not isinstance(data["basis"], list):
        raise FormatError("basis must be a list")
    for item in data["basis"]:
        if not isinstance(item, dict) or set(item) != {"label", "grade"}:
            raise FormatError(f"basis entries need exactly label and grade: {item!r}")
        try:
            g = GradeVec.parse(str(item["grade"]))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
        if g.n != n:
            raise FormatError(f"grade {item['grade']!r} of {item['label']!r} is not {n} bits")
        basis.append(BasisElement(str(item["label"]), g))
    index = {b.label: i for i, b in enumerate(basis)}
    if len(index) != len(basis):
        raise FormatError("duplicate basis labels")
    table: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
    for br in data.get("brackets", []):
        if not isinstance(br, dict) or set(br) != {"left", "right", "terms"}:
            raise FormatError(f"bracket entries need left, right, terms: {br!r}")
        try:
            i, j = index[br["left"]], index[br["right"]]
        except KeyError as exc:
            raise FormatError(f"bracket refers to unknown label {exc.args[0]!r}") from None
        if (i, j) in table:
            raise FormatError(f"duplicate bracket [{br['left']}, {br['right']}]")
        terms = []
        for t in br["terms"]:
            if not isinstance(t, dict) or set(t) != {"target", "coeff"}:
                raise FormatError(f"term needs target and coeff: {t!r}")
            if t["target"] not in index:
                raise FormatError(f"unknown target label {t['target']!r}")
            terms.append((index[t["target"]], parse_scalar(t["coeff"])))
        table[i, j] = terms
    return name, n, pairing, basis, table


def algebra_from_json_dict(data, validate: bool = True) -> ColorAlgebra:
    name, n, pairing, basis, table = parse_algebra_dict(data)
    return ColorAlgebra(name, n, pairing, basis, table, validate=validate)


def load_algebra(path, validate: bool = True) -> ColorAlgebra:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    return algebra_from_json_dict(data, validate=validate)


def save_algebra(A: ColorAlgebra, path) -> None:
    Path(path).write_text(json.dumps(A.to_json_dict(), indent=2) + "\n")


# ---------------------------------------------------------------- auditors

def check_closure(A: ColorAlgebra) -> Report:
    violations = []
    for (i, j), entry in sorted(A.table.items()):
        want = A.masks[i] ^ A.masks[j]
        stray = {k: c for k, c in entry if A.masks[k] != want}
        if stray:
            violations.append(Violation(
                lhs=f"[[{A.basis[i].label}, {A.basis[j].label}]]",
                rhs=f"grade {GradeVec(A.n_bits, want)}",
                residual=A.format(stray),
                at=(i, j),
            ))
    return Report("closure", {"algebra": A.name}, A.dim * A.dim, violations)


def check_antisymmetry(A: ColorAlgebra) -> Report:
    violations = []
    count = 0
    for i in range(A.dim):
        for j in range(i, A.dim):
            count += 1
            res = dict(A.table.get((i, j), ()))
            s = A.sign(i, j)
            for k, c in A.table.get((j, i), ()):
                res[k] = res.get(k, 0) + s * c
            res = {k: c for k, c in res.items() if c}
            if res:
                li, lj = A.basis[i].label, A.basis[j].label
                violations.append(Violation(
                    lhs=f"[[{li}, {lj}]] = {A.format(A.entry(i, j))}",
                    rhs=f"{-s:+d}*[[{lj}, {li}]] = {A.format(A.entry(j, i) * (-s))}",
                    residual=A.format(res),
                    at=(i, j),
                ))
    return Report("antisymmetry", {"algebra": A.name}, count, violations)


def jacobiator(A: ColorAlgebra, x: int, y: int, z: int) -> Element:
    """Left-hand side of the graded Jacobi identity on basis indices (Fraction path)."""
    def nested(o, p, r):
        inner = A.table.get((p, r), ())
        return A._bracket_raw({o: Fraction(1)}, dict(inner))

    total = Element()
    for (o, p, r) in ((x, y, z), (y, z, x), (z, x, y)):
        total = total + Element(nested(o, p, r)) * A.sign(o, r)
    return total


def _integer_structure(A: ColorAlgebra):
    """COO arrays of the table scaled to integers by the common denominator."""
    rows, cols, tgts, vals = [], [], [], []
    den = 1
    for entry in A.table.values():
        for _, c in entry:
            den = den * c.denominator // math.gcd(den, c.denominator)
    for (i, j), entry in A.table.items():
        for k, c in entry:
            rows.append(i)
            cols.append(j)
            tgts.append(k)
            vals.append(int(c * den))
    return (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64),
            np.array(tgts, dtype=np.int64), vals, den)


def _jacobi_sums(A: ColorAlgebra):
    """Exact Jacobiator components via one sparse integer product.

    ``T[(p,r),(o,m)] = sum_k C[p,r,k] C[o,k,m]`` is the m-th component of
    [[o,[[p,r]]]].  Each nonzero, signed by (-1)^(o.r), feeds the three cyclic
    triples (o,p,r), (r,o,p), (p,r,o).  Returns ``None`` if int64 could overflow.
    """
    n = A.dim
    i, j, k, vals, den = _integer_structure(A)
    if not vals:
        return {}, den
    big = max(abs(v) for v in vals)
    if 3 * n * big * big >= 2 ** 62 or n ** 4 >= 2 ** 62:
        return None
    v = np.array(vals, dtype=np.int64)
    inner = sp.csr_matrix((v, (i * n + j, k)), shape=(n * n, n), dtype=np.int64)
    outer = sp.csr_matrix((v, (j, i * n + k)), shape=(n, n * n), dtype=np.int64)
    t = (inner @ outer).tocoo()
    keep = t.data != 0
    pr, om, val = t.row[keep].astype(np.int64), t.col[keep].astype(np.int64), t.data[keep]
    p, r = pr // n, pr % n
    o, m = om // n, om % n
    masks = np.array(A.masks, dtype=np.int64)
    mo, mr = masks[o], masks[r]
    if A.pairing is PairingKind.DOT:
        par = _popcount_array(mo & mr) & 1
    else:
        first = int("01" * 8, 2)
        par = (_popcount_array((mo & first) & ((mr >> 1) & first))
               + _popcount_array(((mo >> 1) & first) & (mr & first))) & 1
    sval = np.where(par == 1, -val, val)
    keys = np.concatenate([
        ((o * n + p) * n + r) * n + m,
        ((r * n + o) * n + p) * n + m,
        ((p * n + r) * n + o) * n + m,
    ])
    svals = np.concatenate([sval, sval, sval])
    if keys.size == 0:
        return {}, den
    order = np.argsort(keys, kind="stable")
    keys, svals = keys[order], svals[order]
    starts = np.concatenate([[0], np.flatnonzero(np.diff(keys)) + 1])
    sums = np.add.reduceat(svals, starts)
    ukeys = keys[starts]
    nz = sums != 0
    out: dict[tuple[int, int, int], dict[int, int]] = {}
    for key, s in zip(ukeys[nz].tolist(), sums[nz].tolist()):
        key, m_ = divmod(key, n)
        key, z = divmod(key, n)
        x, y = divmod(key, n)
        out.setdefault((x, y, z), {})[m_] = s
    return out, den


def _popcount_array(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    count = np.zeros_like(a)
    while np.any(a):
        count += a & 1
        a >>= 1
    return count


def check_jacobi(A: ColorAlgebra) -> Report:
    n = A.dim
    violations = []
    fast = _jacobi_sums(A)
    if fast is not None:
        sums, den = fast
        scale = Fraction(1, den * den)
        for (x, y, z), comp in sums.items():
            res = {m: Fraction(s) * scale for m, s in comp.items()}
            violations.append(_jacobi_violation(A, x, y, z, res))
    else:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    res = jacobiator(A, x, y, z)
                    if res:
                        violations.append(_jacobi_violation(A, x, y, z, res.terms))
    return Report("jacobi", {"algebra": A.name}, n ** 3, violations)


def _jacobi_violation(A, x, y, z, residual) -> Violation:
    lx, ly, lz = (A.basis[t].label for t in (x, y, z))
    return Violation(
        lhs=f"[[{lx},[[{ly},{lz}]]]] + cyclic",
        rhs="0",
        residual=A.format(residual),
        at=(x, y, z),
    )


def audit(A: ColorAlgebra) -> dict[str, Report]:
    return {
        "closure": check_closure(A),
        "antisymmetry": check_antisymmetry(A),
        "jacobi": check_jacobi(A),
    }


def audit_ok(A: ColorAlgebra) -> bool:
    return all(r.ok for r in audit(A).values())


# ------------------------------------------------- Clifford algebras as color algebras

def clifford_exponent(a: int, b: int, pairing: PairingKind) -> int:
    """Exponent e in the bracket prefactor (1 - (-1)^e)."""
    e = popcount(a) * popcount(b)
    if pairing is PairingKind.SYMPLECTIC:
        m = max(a, b).bit_length()
        for k in range(0, m, 2):
            e += popcount((a >> k) & 3) * popcount((b >> k) & 3)
    return e


def clifford_as_color_algebra(sig: Signature, pairing: PairingKind = PairingKind.DOT) -> ColorAlgebra:
    n = sig.n
    if pairing is PairingKind.SYMPLECTIC and n % 2:
        raise PairingError(f"symplectic pairing needs even p+q, got {sig}")
    basis = [BasisElement(mask_label(m), GradeVec(n, m)) for m in range(1 << n)]
    neg = sig.negative_mask
    table = {}
    for a in range(1 << n):
        for b in range(1 << n):
            if clifford_exponent(a, b, pairing) & 1:
                table[a, b] = [(a ^ b, Fraction(2 * kappa_mask(a, b, neg)))]
    name = f"Cl({sig.p},{sig.q})" + ("" if pairing is PairingKind.DOT else "-symplectic")
    return ColorAlgebra(name, n, pairing, basis, table)
