"""Exact solution theory for the matrix equation A X B = C."""
from .axbc import (
    AffineMatMap,
    Certificate,
    Reason,
    ReproReport,
    Term,
    Verdict,
    fixed_point_map,
    general_solution,
    is_consistent,
    penrose_check,
    representability_certificate,
    reproductivity_of,
    solution_from_particular,
)
from .gen_inverse import (
    OneInverseFamily,
    RankNormalForm,
    canonical_one_inverse,
    is_one_inverse,
    one_inverse_at,
    one_inverse_family,
    rank_normal_form,
    sample_one_inverse,
)
from .ratmat import INCONSISTENT, NOT_REGULAR, AffineSet, Mat, parse_matrix, read_matrix, solve_affine
from .structural import PermutedData, permuted_form, structural_check
from .systems import (
    MatrixSystem,
    commuting_system_solve,
    haveric_family,
    presic_family,
    stacked_oracle,
    two_sided_solve,
)

__version__ = "0.1.0"

__all__ = [
    "INCONSISTENT",
    "NOT_REGULAR",
    "AffineMatMap",
    "AffineSet",
    "Certificate",
    "Mat",
    "MatrixSystem",
    "OneInverseFamily",
    "PermutedData",
    "RankNormalForm",
    "Reason",
    "ReproReport",
    "Term",
    "Verdict",
    "canonical_one_inverse",
    "commuting_system_solve",
    "fixed_point_map",
    "general_solution",
    "haveric_family",
    "is_consistent",
    "is_one_inverse",
    "one_inverse_at",
    "one_inverse_family",
    "parse_matrix",
    "penrose_check",
    "permuted_form",
    "presic_family",
    "rank_normal_form",
    "read_matrix",
    "representability_certificate",
    "reproductivity_of",
    "sample_one_inverse",
    "solution_from_particular",
    "solve_affine",
    "stacked_oracle",
    "structural_check",
    "two_sided_solve",
]
