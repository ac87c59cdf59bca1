"""Exact decision of mixed linear systems with checkable proofs of either outcome."""

from .basic import solve_basic
from .catalog import dual_shape, enumerate_variants, named_theorems
from .exact_linalg import RatMat, mat_vec, normalize_row, rat, vec, vec_cmp
from .fourier_motzkin import back_substitute, eliminate_variable, project_all
from .model import (
    Block,
    DualCertificate,
    Feasible,
    Infeasible,
    MixedSystem,
    PrimalWitness,
    RelationKind,
    relation_set,
    scale_row,
)
from .unified import build_reduction, contradiction_value, solve_unified
from .verifier import mutual_exclusion_check, verify_dual, verify_primal

__version__ = "0.1.0"

__all__ = [
    "Block", "DualCertificate", "Feasible", "Infeasible", "MixedSystem", "PrimalWitness", "RatMat",
    "RelationKind", "back_substitute", "build_reduction", "contradiction_value", "dual_shape",
    "eliminate_variable", "enumerate_variants", "mat_vec", "mutual_exclusion_check", "named_theorems",
    "normalize_row", "project_all", "rat", "relation_set", "scale_row", "solve_basic", "solve_unified",
    "vec", "vec_cmp", "verify_dual", "verify_primal",
]
