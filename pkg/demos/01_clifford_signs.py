"""Clifford blades as grading vectors.

Walks through the sign kappa(a, b) in gamma_a gamma_b = kappa gamma_(a+b),
checks it against explicit gamma matrices, and turns Cl(p,q) into a color
superalgebra.  Run with ``python3 demos/01_clifford_signs.py``.
"""
from colorsuper import Signature
from colorsuper.clifford import commutation_sign, kappa_mask, mask_label
from colorsuper.graded_algebra import audit, clifford_as_color_algebra
from colorsuper.grading import GradeVec, PairingKind
from colorsuper.matrix_oracle import blade_matrix, gamma_matrices

# %% kappa table for Cl(2,1)
sig = Signature(2, 1)
n, neg = sig.n, sig.negative_mask
print(f"kappa for {sig} (row a, column b):")
print("      " + " ".join(f"{mask_label(b):>6}" for b in range(1 << n)))
for a in range(1 << n):
    print(f"{mask_label(a):>6}" + " ".join(f"{kappa_mask(a, b, neg):>6d}" for b in range(1 << n)))

# %% same sign from matrices
gs = gamma_matrices(sig)
a, b = 0b011, 0b110
lhs = blade_matrix(a, gs) @ blade_matrix(b, gs)
print(f"\n{mask_label(a)} * {mask_label(b)} = {kappa_mask(a, b, neg):+d} {mask_label(a ^ b)}:",
      lhs == blade_matrix(a ^ b, gs).scale(kappa_mask(a, b, neg)))

# commute or anticommute is decided by a.b + sigma(a) sigma(b)
print("relative sign:", commutation_sign(GradeVec(n, a), GradeVec(n, b)))

# %% Cl(p,q) as a color superalgebra and, for even p+q, a color algebra
for pairing in (PairingKind.DOT, PairingKind.SYMPLECTIC):
    A = clifford_as_color_algebra(Signature(1, 1), pairing)
    print(f"\n{A.name} [{pairing.name}]")
    for name, report in audit(A).items():
        print(f"  {name:13s} {report.summary()}")
