"""Exact-arithmetic (semi)stability checks for discretized tensor-sheaf data."""

from .model import (
    FiltrationSpec,
    InstanceError,
    SheafData,
    StabilityParam,
    validate_filtration,
)
from .pivots import (
    PivotSet,
    Rel,
    matrix_from_pivots,
    normalize_pivots,
    ordered_tuples,
    pivots_from_matrix,
    project_pivots,
    tuple_cmp,
)
from .poly import UniPoly, poly_cmp
from .stability import (
    CheckVerdict,
    check_k_semistable,
    check_splitting,
    constants,
    decide_destabilizing,
    gamma_vector,
    is_critical,
    k_of_level,
    mu_via_gamma,
    mu_via_pivots,
    objective,
    prune_nonnegative,
    r_value,
    reduce_destabilizer,
)

__all__ = [
    "CheckVerdict",
    "FiltrationSpec",
    "InstanceError",
    "PivotSet",
    "Rel",
    "SheafData",
    "StabilityParam",
    "UniPoly",
    "check_k_semistable",
    "check_splitting",
    "constants",
    "decide_destabilizing",
    "gamma_vector",
    "is_critical",
    "k_of_level",
    "matrix_from_pivots",
    "mu_via_gamma",
    "mu_via_pivots",
    "normalize_pivots",
    "objective",
    "ordered_tuples",
    "pivots_from_matrix",
    "poly_cmp",
    "project_pivots",
    "prune_nonnegative",
    "r_value",
    "reduce_destabilizer",
    "tuple_cmp",
    "validate_filtration",
]
