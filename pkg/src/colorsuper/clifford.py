"""Signed-blade arithmetic for Cl(p, q).

Generators ``g1 .. gp`` square to +1 and ``g(p+1) .. g(p+q)`` to -1.  A blade
is a set of generator indices in ascending order (a bitmask, bit ``i - 1`` for
``g_i``) together with a sign.  The blade of a grading vector has the same
mask, so masks double as grades throughout the package.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .grading import MAX_BITS, GradeVec, dot, popcount, sigma
from .report import Report, Violation


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or not 1 <= self.p + self.q <= MAX_BITS:
            raise ValueError(f"invalid signature Cl({self.p},{self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def negative_mask(self) -> int:
        """Generators squaring to -1."""
        return ((1 << self.q) - 1) << self.p

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


def signatures(max_n: int, min_n: int = 1):
    """All (p, q) with ``min_n <= p + q <= max_n``."""
    for n in range(min_n, max_n + 1):
        for p in range(n, -1, -1):
            yield Signature(p, n - p)


@dataclass(frozen=True)
class Blade:
    mask: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"blade sign must be +1 or -1, got {self.sign}")
        if self.mask < 0 or self.mask >> MAX_BITS:
            raise ValueError(f"blade mask {self.mask} out of range")

    @classmethod
    def parse(cls, text: str) -> Blade:
        """Parse ``"+g1g2"``, ``"-g3"``, ``"+1"`` (leading sign optional)."""
        s = text.strip()
        m = re.fullmatch(r"([+-]?)(1|(?:g\d+)+)", s)
        if not m:
            raise ValueError(f"cannot parse blade {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) == "1":
            return cls(0, sign)
        idx = [int(i) for i in re.findall(r"g(\d+)", m.group(2))]
        if any(i < 1 for i in idx) or sorted(set(idx)) != idx:
            raise ValueError(f"blade generators must be strictly ascending: {text!r}")
        mask = 0
        for i in idx:
            mask |= 1 << (i - 1)
        return cls(mask, sign)

    @property
    def weight(self) -> int:
        return popcount(self.mask)

    def __neg__(self) -> Blade:
        return Blade(self.mask, -self.sign)

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + mask_label(self.mask)


def mask_label(mask: int) -> str:
    if not mask:
        return "1"
    return "".join(f"g{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


def reorder_sign(a: int, b: int) -> int:
    """Sign from moving generators of ``b`` leftwards into ``a`` (ascending).

    Counts pairs ``(i in a, j in b)`` with ``i > j``.
    """
    swaps = 0
    a >>= 1
    while a:
        swaps += popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=None)
def kappa_mask(a: int, b: int, negative_mask: int) -> int:
    s = reorder_sign(a, b)
    if popcount(a & b & negative_mask) & 1:
        s = -s
    return s


def blade_mul(a: Blade, b: Blade, sig: Signature) -> Blade:
    limit = 1 << sig.n
    if a.mask >= limit or b.mask >= limit:
        raise ValueError(f"blade does not fit in {sig}")
    s = a.sign * b.sign * kappa_mask(a.mask, b.mask, sig.negative_mask)
    return Blade(a.mask ^ b.mask, s)


def gamma_of_grade(a: GradeVec) -> Blade:
    return Blade(a.mask, 1)


def grade_of_blade(b: Blade, n: int) -> GradeVec:
    return GradeVec(n, b.mask)


def kappa(a: GradeVec, b: GradeVec, sig: Signature) -> int:
    """The sign with ``gamma_a gamma_b = kappa * gamma_(a+b)``."""
    if a.n != sig.n or b.n != sig.n:
        raise ValueError(f"grading length must equal p+q={sig.n}")
    return kappa_mask(a.mask, b.mask, sig.negative_mask)


def relative_sign(a: int, b: int) -> int:
    """Counting rule: blades of weights r, s sharing m generators commute up to (-1)^(rs-m)."""
    r, s, m = popcount(a), popcount(b), popcount(a & b)
    return -1 if (r * s - m) & 1 else 1


def commutation_sign(a: GradeVec, b: GradeVec) -> int:
    """Predicted sign of ``gamma_a gamma_b`` relative to ``gamma_b gamma_a``."""
    return -1 if (dot(a, b) + sigma(a) * sigma(b)) & 1 else 1


def check_sign_law(sig: Signature) -> Report:
    n = sig.n
    neg = sig.negative_mask
    violations = []
    count = 0
    for a in range(1 << n):
        for b in range(1 << n):
            count += 1
            ab = kappa_mask(a, b, neg)
            ba = kappa_mask(b, a, neg)
            want = commutation_sign(GradeVec(n, a), GradeVec(n, b))
            if ab != want * ba:
                violations.append(Violation(
                    lhs=f"{mask_label(a)}*{mask_label(b)} = {'+' if ab > 0 else '-'}{mask_label(a ^ b)}",
                    rhs=f"{'+' if want > 0 else '-'}{mask_label(b)}*{mask_label(a)}",
                    residual=f"relative sign {ab * ba:+d}, expected {want:+d}",
                    at=(a, b),
                ))
    return Report("verify clifford", {"p": sig.p, "q": sig.q}, count, violations)
