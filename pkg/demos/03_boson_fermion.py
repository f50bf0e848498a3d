"""The boson-fermion color superalgebra bf.

Normal-ordered brackets in the envelope, the exported structure constants,
the one-mode vector field realization, and the Fock matrix cross-check.
"""
from colorsuper.envelope import export_bf, verify_bf_relations
from colorsuper.graded_algebra import check_jacobi
from colorsuper.grassmann_rep import bf_vector_fields, show, verify_representation
from colorsuper.matrix_oracle import check_bf_on_fock

print(verify_bf_relations(2).summary())

A = export_bf(1)
print(f"\n{A.name}, basis: {', '.join(A.labels)}")
for left, right in [("a_1", "adag_1"), ("beta_1", "F"), ("alpha_1", "alphadag_1"), ("F", "F")]:
    out = A.bracket(A.element(left), A.element(right))
    print(f"  [[{left}, {right}]] = {A.format(out)}")
print(check_jacobi(A).summary())

# %% differential operators in x, psi, theta1, theta2
for gen in bf_vector_fields():
    if str(gen) != "1":
        print(" ", show(str(gen)))
print(verify_representation(3).summary())

# %% truncated Fock space, away from the cutoff
print(check_bf_on_fock(1, 8).summary())
