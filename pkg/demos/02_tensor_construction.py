"""From a Lie superalgebra to a Z2^N color superalgebra and back.

Tensor osp(1|2) with Cl(1,1), keep the parity-matched pieces, and audit.
"""
from colorsuper import Signature
from colorsuper.graded_algebra import audit
from colorsuper.superalgebra_io import builtin
from colorsuper.tensor_builder import build_color_super, expected_dimension, reverse_build

g = builtin("osp(1|2)")
sig = Signature(1, 1)
A = build_color_super(g, sig)
print(f"{A.name}: dim {A.dim}, expected {expected_dimension(g, sig)}")
for b in A.basis:
    print(f"  {b.label:12s} grade {b.grade}")

# %% a few brackets
x, y = A.element("X[10|Qp]"), A.element("X[01|Qm]")
print("\n[[X[10|Qp], X[01|Qm]]] =", A.format(A.bracket(x, y)))
print("[[X[10|Qp], X[10|Qp]]] =", A.format(A.bracket(x, x)))

for name, report in audit(A).items():
    print(f"  {report.summary()}")

# %% reverse direction: back to an ordinary superalgebra, graded by sigma mod 2
S = reverse_build(A, sig)
print(f"\n{S.name}: dim {S.dim}")
print("  ok:", all(r.ok for r in audit(S).values()))
