"""Exact verification that Dudley classes are maximum on a finite sample."""
from .arrangement import brute_force_cells, dualize, enumerate_cells
from .basis import (
    FunctionBasis,
    builtin_basis,
    check_linear_independence,
    disks,
    eval_row,
    halfspaces,
    monomials,
    poly_threshold,
    trig,
)
from .estimator import DudleyClassVerifier
from .exactnum import det_exact, det_sign_approx, rank
from .expr import parse_expression
from .floyd import build_design_matrix, check_condition1, check_condition2, verify_general_position
from .harness import repeated_trials, run_demo, run_verify
from .lp import strict_feasible
from .sampling import SamplingSpec, sample_points
from .setsystem import SetSystem, is_maximum, restrict, sauer_bound, shatters, vc_dimension

__all__ = [
    "DudleyClassVerifier",
    "FunctionBasis",
    "SamplingSpec",
    "SetSystem",
    "brute_force_cells",
    "build_design_matrix",
    "builtin_basis",
    "check_condition1",
    "check_condition2",
    "check_linear_independence",
    "det_exact",
    "disks",
    "det_sign_approx",
    "dualize",
    "enumerate_cells",
    "eval_row",
    "halfspaces",
    "is_maximum",
    "monomials",
    "parse_expression",
    "poly_threshold",
    "rank",
    "repeated_trials",
    "restrict",
    "run_demo",
    "run_verify",
    "sample_points",
    "sauer_bound",
    "shatters",
    "strict_feasible",
    "trig",
    "vc_dimension",
    "verify_general_position",
]
