"""Grading vectors of Z2^N and the two sign pairings.

A grading vector is stored as an integer bitmask: component ``i`` (1-based)
lives in bit ``i - 1``.  The superalgebra pairing is the ordinary dot product;
the color-algebra pairing (even N only) sums 2x2 determinants over the
consecutive blocks ``(a_{k,1}, a_{k,2})``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

MAX_BITS = 16


class GradingError(ValueError):
    pass


class DimensionError(GradingError):
    pass


class PairingError(GradingError):
    pass


@dataclass(frozen=True, order=True)
class GradeVec:
    n: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_BITS:
            raise DimensionError(f"grading length must be in 1..{MAX_BITS}, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise DimensionError(f"mask {self.mask:#b} does not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> GradeVec:
        mask = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise GradingError(f"grading components must be 0 or 1, got {b!r}")
            mask |= b << i
        return cls(len(bits), mask)

    @classmethod
    def parse(cls, text: str) -> GradeVec:
        """Accept ``"101"`` or ``"(1,0,1)"``."""
        s = text.strip()
        if s.startswith("("):
            if not s.endswith(")"):
                raise GradingError(f"unbalanced grade tuple {text!r}")
            parts = [p.strip() for p in s[1:-1].split(",") if p.strip()]
        else:
            parts = list(s)
        if not parts or not all(re.fullmatch(r"[01]", p) for p in parts):
            raise GradingError(f"cannot parse grading vector {text!r}")
        return cls.from_bits([int(p) for p in parts])

    @classmethod
    def zero(cls, n: int) -> GradeVec:
        return cls(n, 0)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> i) & 1 for i in range(self.n))

    def compact(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __add__(self, other: GradeVec) -> GradeVec:
        _same_length(self, other)
        return GradeVec(self.n, self.mask ^ other.mask)

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"

    def __repr__(self) -> str:
        return f"GradeVec{self}"


def all_grades(n: int) -> Iterator[GradeVec]:
    """Every grading vector of length ``n``, in lexicographic tuple order."""
    for mask in range(1 << n):
        yield GradeVec.from_bits(tuple((mask >> (n - 1 - i)) & 1 for i in range(n)))


def _same_length(a: GradeVec, b: GradeVec) -> None:
    if a.n != b.n:
        raise DimensionError(f"grading vectors have lengths {a.n} and {b.n}")


def popcount(x: int) -> int:
    return bin(x).count("1")


def dot(a: GradeVec, b: GradeVec) -> int:
    _same_length(a, b)
    return popcount(a.mask & b.mask)


def sigma(a: GradeVec) -> int:
    """Number of non-zero components."""
    return popcount(a.mask)


# Masks selecting the first / second component of every 2-block.
_FIRST = int("01" * (MAX_BITS // 2), 2)
_SECOND = _FIRST << 1


def symplectic_mask(a: int, b: int) -> int:
    """Integer symplectic value on raw masks (no length checks)."""
    a1, a2 = a & _FIRST, (a & _SECOND) >> 1
    b1, b2 = b & _FIRST, (b & _SECOND) >> 1
    return popcount(a1 & b2) - popcount(a2 & b1)


def symplectic(a: GradeVec, b: GradeVec) -> int:
    _same_length(a, b)
    if a.n % 2:
        raise PairingError(f"symplectic pairing needs even length, got {a.n}")
    return symplectic_mask(a.mask, b.mask)


def blocks(a: GradeVec) -> list[GradeVec]:
    """Split an even-length vector into its 2-component blocks."""
    if a.n % 2:
        raise PairingError(f"block split needs even length, got {a.n}")
    return [GradeVec(2, (a.mask >> (2 * k)) & 3) for k in range(a.n // 2)]


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1


class PairingKind(enum.Enum):
    DOT = "dot"
    SYMPLECTIC = "symplectic"

    def check_length(self, n: int) -> None:
        if self is PairingKind.SYMPLECTIC and n % 2:
            raise PairingError(f"symplectic pairing needs even N, got {n}")

    def evaluate(self, a: GradeVec, b: GradeVec) -> int:
        return dot(a, b) if self is PairingKind.DOT else symplectic(a, b)

    def parity_mask(self, a: int, b: int) -> int:
        """0/1 pairing parity on raw masks; the hot path of every sweep."""
        if self is PairingKind.DOT:
            return popcount(a & b) & 1
        return symplectic_mask(a, b) & 1


def pairing_parity(kind: PairingKind, a: GradeVec, b: GradeVec) -> Parity:
    """EVEN means the bracket is a commutator, ODD an anticommutator."""
    return Parity(kind.evaluate(a, b) % 2)


def check_symplectic_reduction(n: int):
    """Exhaustively confirm (a,b) = a.b + sum_k sigma(a_k) sigma(b_k) mod 2 on Z2^n."""
    from .report import Report, Violation

    PairingKind.SYMPLECTIC.check_length(n)
    violations = []
    for a in range(1 << n):
        for b in range(1 << n):
            lhs = symplectic_mask(a, b) & 1
            blockwise = sum(popcount(a >> (2 * k) & 3) * popcount(b >> (2 * k) & 3) for k in range(n // 2))
            rhs = (popcount(a & b) + blockwise) & 1
            if lhs != rhs:
                va, vb = GradeVec(n, a), GradeVec(n, b)
                violations.append(Violation(lhs=f"({va},{vb})", rhs=f"{va}.{vb} + blocks",
                                            residual=f"{lhs} vs {rhs}", at=(a, b)))
    return Report("symplectic reduction", {"N": n}, 1 << (2 * n), violations)
