"""Ordinary Lie superalgebras: JSON round trip and a small builtin catalog.

A Lie superalgebra is the N=1 case of a color superalgebra, so it is stored
as a :class:`ColorAlgebra` with one grading bit and validated with the same
auditors.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping

from .grading import GradeVec, PairingKind
from .graded_algebra import (AlgebraError, BasisElement, ColorAlgebra, audit,
                             parse_algebra_dict)


class LoadError(ValueError):
    pass


class Superalgebra(ColorAlgebra):
    def __init__(self, name: str, basis: Iterable[tuple[str, int]],
                 table: Mapping[tuple[int, int], Iterable[tuple[int, Fraction]]],
                 validate: bool = True):
        elems = [BasisElement(label, GradeVec(1, parity)) for label, parity in basis]
        super().__init__(name, 1, PairingKind.DOT, elems, table, validate=validate)

    def parity(self, i: int) -> int:
        return self.masks[i]

    @classmethod
    def from_color_algebra(cls, A: ColorAlgebra, validate: bool = True) -> Superalgebra:
        if A.n_bits != 1 or A.pairing is not PairingKind.DOT:
            raise AlgebraError(f"{A.name} is not Z2-graded")
        return cls(A.name, [(b.label, b.grade.mask) for b in A.basis], A.table, validate=validate)

    @classmethod
    def from_relations(cls, name: str, basis: list[tuple[str, int]],
                       relations: Mapping[tuple[str, str], Mapping[str, int | Fraction]]) -> Superalgebra:
        """Build from a partial table; mirrored entries follow from graded antisymmetry."""
        index = {label: i for i, (label, _) in enumerate(basis)}
        parity = dict(basis)
        table: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for (x, y), rhs in relations.items():
            terms = [(index[t], Fraction(c)) for t, c in rhs.items()]
            table[index[x], index[y]] = terms
            if x != y:
                s = -1 if parity[x] & parity[y] else 1
                table[index[y], index[x]] = [(k, -s * c) for k, c in terms]
        return cls(name, basis, table)


def _describe_failure(A: ColorAlgebra) -> str | None:
    for name, rep in audit(A).items():
        if not rep.ok:
            v = rep.violations[0]
            return f"{name} violated at {v.lhs}: residual {v.residual}"
    return None


def from_json_dict(data) -> Superalgebra:
    try:
        name, n, pairing, basis, table = parse_algebra_dict(data)
    except AlgebraError as exc:
        raise LoadError(f"schema violation: {exc}") from exc
    if n != 1:
        raise LoadError(f"schema violation: superalgebras need grading_bits = 1, got {n}")
    sa = Superalgebra(name, [(b.label, b.grade.mask) for b in basis], table, validate=False)
    closure = audit(sa)["closure"]
    if not closure.ok:
        v = closure.violations[0]
        raise LoadError(f"parity violation: {v.lhs} has terms {v.residual} outside {v.rhs}")
    problem = _describe_failure(sa)
    if problem:
        raise LoadError(problem)
    return sa


def load(path) -> Superalgebra:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise LoadError(f"{path}: invalid JSON ({exc})") from exc
    return from_json_dict(data)


def save(g: ColorAlgebra, path) -> None:
    Path(path).write_text(json.dumps(g.to_json_dict(), indent=2) + "\n")


# ------------------------------------------------------------------ catalog

def fermionic_heisenberg() -> Superalgebra:
    return Superalgebra.from_relations(
        "fermionic_heisenberg",
        [("Q", 1), ("Qdag", 1), ("Z", 0)],
        {("Q", "Qdag"): {"Z": 1}},
    )


def osp12() -> Superalgebra:
    """osp(1|2): even H, E, F; odd Qp, Qm."""
    return Superalgebra.from_relations(
        "osp(1|2)",
        [("H", 0), ("E", 0), ("F", 0), ("Qp", 1), ("Qm", 1)],
        {
            ("H", "E"): {"E": 2},
            ("H", "F"): {"F": -2},
            ("E", "F"): {"H": 1},
            ("H", "Qp"): {"Qp": 1},
            ("H", "Qm"): {"Qm": -1},
            ("E", "Qm"): {"Qp": -1},
            ("F", "Qp"): {"Qm": -1},
            ("Qp", "Qp"): {"E": 2},
            ("Qm", "Qm"): {"F": -2},
            ("Qp", "Qm"): {"H": 1},
        },
    )


def bf_source(n: int) -> Superalgebra:
    """Span of the bf elements with their ordinary boson/fermion parity."""
    from .envelope import bf_source_algebra

    return Superalgebra.from_color_algebra(bf_source_algebra(n))


CATALOG = ("fermionic_heisenberg", "osp(1|2)", "bf_source(n)")


def builtin(name: str) -> Superalgebra:
    key = name.strip()
    if key == "fermionic_heisenberg":
        return fermionic_heisenberg()
    if key in ("osp(1|2)", "osp12"):
        return osp12()
    m = re.fullmatch(r"bf_source\((\d+)\)", key)
    if m and int(m.group(1)) >= 1:
        return bf_source(int(m.group(1)))
    raise KeyError(f"unknown builtin superalgebra {name!r}; choose from {', '.join(CATALOG)}")
