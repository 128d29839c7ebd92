"""Cyclic locally repairable codes: construction, repair and certification."""

from .cyclic import DEFAULT_BUDGET, CyclicCode, DistanceScan, min_distance_exhaustive
from .codefile import load_code, save_code
from .constructions import (
    ALL_SCHEMES,
    CandidateParams,
    ConstructionError,
    LrcCode,
    ParameterError,
    build_any_d_coset,
    build_any_d_subgroup,
    build_d3_unbounded,
    build_d4_double_length,
    build_d4_unbounded,
    construct,
    enumerate_valid_params,
)
from .field import FieldElement, FiniteField, make_field, primitive_nth_root, splitting_degree
from .poly import Poly
from .repair import (
    ErasedWord,
    LocalityCheck,
    RepairError,
    dual_distance_exact,
    repair_erasure,
    repair_groups,
    repair_vector,
    verify_locality,
)
from .verify import VerificationReport, singleton_bound, verify_optimal

__version__ = "0.1.0"

__all__ = [
    "ALL_SCHEMES",
    "CandidateParams",
    "ConstructionError",
    "CyclicCode",
    "DEFAULT_BUDGET",
    "DistanceScan",
    "ErasedWord",
    "FieldElement",
    "FiniteField",
    "LocalityCheck",
    "LrcCode",
    "ParameterError",
    "Poly",
    "RepairError",
    "VerificationReport",
    "build_any_d_coset",
    "build_any_d_subgroup",
    "build_d3_unbounded",
    "build_d4_double_length",
    "build_d4_unbounded",
    "construct",
    "dual_distance_exact",
    "enumerate_valid_params",
    "load_code",
    "make_field",
    "min_distance_exhaustive",
    "primitive_nth_root",
    "repair_erasure",
    "repair_groups",
    "repair_vector",
    "save_code",
    "singleton_bound",
    "splitting_degree",
    "verify_locality",
    "verify_optimal",
]
