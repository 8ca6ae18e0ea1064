"""Exact verification of the quaternionic orthogonal groups SO*(2n), their
sporadic isogenies, and the triality of SO*(8).

All algebraic identities are checked in exact arithmetic over Q(sqrt2, sqrt3)
(adjoining i for complex matrices); floating point appears only in matrix
exponentials, which are compared at explicit tolerances.
"""

__version__ = "0.1.0"

from .scalars import ExactComplex, ExactScalar
from .quaternion import Quaternion
from .hmatrix import (CMatrix, HMatrix, i_pq, is_slh_algebra, is_sostar_algebra,
                      is_sostar_group, is_sostar_group_embedded,
                      is_spstar_algebra, is_spstar_group, is_su_group_embedded,
                      quaternionic_structure_commutant_check)
from .constants import dirac, gellmann, pauli, u_sostar6
from .liealg import (KillingData, LieBasis, StructureTensor, bracket,
                     commutant_dimension, compact_generator_count, killing,
                     matrix_exp, structure_constants)
from .bases import (basis_sostar4_A, basis_sostar6_complex, basis_sostar6_quat,
                    basis_su2_sl2_S, basis_su31, generic_basis)
from .report import VerificationReport
from .clifford import (CliffordBasis, SpinBasisSet, cl7_basis, cl26_basis,
                       check_sostar8_structure, dictionary_matrix,
                       sostar8_generic, spin26_generators, theta_to_a,
                       verify_sostar8)
from .triality import (SpinRep, TrialityQuartets, apply_triality,
                       transformed_spin_reps, triality_setup, verify_triality)
from .isogeny import (table_row, verify_sostar2, verify_sostar4,
                      verify_sostar6, verify_tables)

__all__ = [
    "ExactComplex", "ExactScalar", "Quaternion", "CMatrix", "HMatrix",
    "i_pq", "is_slh_algebra", "is_sostar_algebra", "is_sostar_group",
    "is_sostar_group_embedded", "is_spstar_algebra", "is_spstar_group",
    "is_su_group_embedded", "quaternionic_structure_commutant_check",
    "dirac", "gellmann", "pauli", "u_sostar6",
    "KillingData", "LieBasis", "StructureTensor", "bracket",
    "commutant_dimension", "compact_generator_count", "killing", "matrix_exp",
    "structure_constants",
    "basis_sostar4_A", "basis_sostar6_complex", "basis_sostar6_quat",
    "basis_su2_sl2_S", "basis_su31", "generic_basis",
    "VerificationReport",
    "CliffordBasis", "SpinBasisSet", "cl7_basis", "cl26_basis",
    "check_sostar8_structure", "dictionary_matrix", "sostar8_generic",
    "spin26_generators", "theta_to_a", "verify_sostar8",
    "SpinRep", "TrialityQuartets", "apply_triality", "transformed_spin_reps",
    "triality_setup", "verify_triality",
    "table_row", "verify_sostar2", "verify_sostar4", "verify_sostar6",
    "verify_tables",
]
