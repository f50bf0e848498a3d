"""Exact verification toolkit for Z2^N color superalgebras built from Clifford algebras."""
from .clifford import Blade, Signature, blade_mul, check_sign_law, kappa, signatures
from .envelope import (BfGenerator, Kind, bf_basis, claimed_bracket, export_bf,
                       verify_bf_relations)
from .graded_algebra import (ColorAlgebra, Element, audit, check_antisymmetry, check_closure,
                             check_jacobi, clifford_as_color_algebra, load_algebra, save_algebra)
from .grading import GradeVec, PairingKind, dot, sigma, symplectic
from .grassmann_rep import (DiffOperator, GradedPoly, bf_vector_fields, check_zeta_realization,
                            left_derive, op_bracket, verify_representation)
from .matrix_oracle import ExactMatrix, check_bf_on_fock, fock_matrices, gamma_matrices
from .report import Report, Violation
from .superalgebra_io import Superalgebra, builtin
from .tensor_builder import build_color_super, reverse_build

__version__ = "0.1.0"
