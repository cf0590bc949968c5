"""Hadamard full propelinear codes of type Q over GF(2)."""

from .analysis import (
    AnalysisReport,
    Verdict,
    analyze,
    classify,
    compute_kernel,
    compute_rank,
    kernel_by_automorphism,
    project_onto_support,
    rank_via_generators,
    verify_hadamard_group,
    verify_hfp,
)
from .core import (
    BinaryWord,
    GroupElement,
    GroupTable,
    Perm,
    apply_perm,
    canonical_perm,
    compose,
    group_mul,
    prop_mul,
)
from .gf2poly import Gf2Poly, add, div_exact_by_x_plus_1, gcd, inflate, mul_mod, phi1, phi2
from .search import ItoScanRow, ito_scan, search_general, search_k2
from .transforms import (
    DoubleGcdCheck,
    double_code,
    double_gcd_check,
    rank_gcd_criterion,
    transpose_code,
)
from .typeq import (
    CoordinateIndex,
    HadamardMatrixQ,
    NotHadamardGroup,
    NotTypeQCandidate,
    TypeQCode,
    build_matrix,
    construct_from_group,
    derive_a2,
    derive_b,
    element_vector,
    kappa_vector,
    make_code,
    matrix_entry,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BinaryWord",
    "CoordinateIndex",
    "DoubleGcdCheck",
    "Gf2Poly",
    "GroupElement",
    "GroupTable",
    "HadamardMatrixQ",
    "ItoScanRow",
    "NotHadamardGroup",
    "NotTypeQCandidate",
    "Perm",
    "TypeQCode",
    "Verdict",
    "add",
    "analyze",
    "apply_perm",
    "build_matrix",
    "canonical_perm",
    "classify",
    "compose",
    "compute_kernel",
    "compute_rank",
    "construct_from_group",
    "derive_a2",
    "derive_b",
    "div_exact_by_x_plus_1",
    "double_code",
    "double_gcd_check",
    "element_vector",
    "gcd",
    "group_mul",
    "inflate",
    "ito_scan",
    "kappa_vector",
    "kernel_by_automorphism",
    "make_code",
    "matrix_entry",
    "mul_mod",
    "phi1",
    "phi2",
    "project_onto_support",
    "prop_mul",
    "rank_gcd_criterion",
    "rank_via_generators",
    "search_general",
    "search_k2",
    "transpose_code",
    "verify_hadamard_group",
    "verify_hfp",
]
