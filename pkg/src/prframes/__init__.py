"""Exact-arithmetic toolkit for phase-retrievable frames and subspaces in R^n."""

from .errors import (
    CapExceeded,
    NotABasis,
    NotAFrame,
    NotPRSubspace,
    OutOfRange,
    PatternViolation,
    PRFramesError,
    RearrangeFailure,
    RetriesExhausted,
    SupportTooLarge,
)
from .ratlin import (
    RatMatrix,
    Seed,
    clear_denominators,
    derive_seed,
    format_rational,
    nullspace,
    parse_rational,
    rank,
    sample_int_matrix,
    sample_pattern,
)
from .frames import (
    CPResult,
    ExactnessResult,
    Frame,
    has_complement_property,
    is_exact_pr_frame,
    is_full_spark,
    is_phase_retrievable,
    spark,
    span_dim,
)
from .lifting import (
    LiftedSystem,
    S2Witness,
    find_s2_element,
    find_s2_witness,
    has_exact_pr_redundancy,
    lifted_independent,
    lifted_operator,
    pr_redundancy,
)
from .construct import (
    CertifiedFrame,
    ConstructionPlan,
    PatternMatrix,
    base_pattern_36,
    basis_with_maximal_subspace,
    build_pattern,
    compose_direct_sum,
    generate_exact_pr,
    generate_with_dmax,
    instantiate,
    plan,
    step_I,
    step_II,
    step_III,
)
from .frameio import (
    frame_from_dict,
    frame_to_dict,
    load_json,
    save_json,
    subspace_from_dict,
    subspace_to_dict,
    verdict_to_dict,
    witness_from_dict,
    witness_to_dict,
)
from .subspaces import (
    MaximalityVerdict,
    Subspace,
    d_max,
    extend_to_maximal,
    is_maximal_pr_subspace,
    is_pr_subspace,
    min_support,
    project_frame,
    random_pr_subspace,
    support,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CertifiedFrame",
    "ConstructionPlan",
    "CPResult",
    "ExactnessResult",
    "Frame",
    "LiftedSystem",
    "MaximalityVerdict",
    "NotABasis",
    "NotAFrame",
    "NotPRSubspace",
    "OutOfRange",
    "PatternMatrix",
    "PatternViolation",
    "PRFramesError",
    "RatMatrix",
    "RearrangeFailure",
    "RetriesExhausted",
    "S2Witness",
    "Seed",
    "Subspace",
    "SupportTooLarge",
    "base_pattern_36",
    "basis_with_maximal_subspace",
    "build_pattern",
    "clear_denominators",
    "compose_direct_sum",
    "d_max",
    "derive_seed",
    "extend_to_maximal",
    "find_s2_element",
    "find_s2_witness",
    "format_rational",
    "frame_from_dict",
    "frame_to_dict",
    "generate_exact_pr",
    "generate_with_dmax",
    "has_complement_property",
    "has_exact_pr_redundancy",
    "instantiate",
    "is_exact_pr_frame",
    "is_full_spark",
    "is_maximal_pr_subspace",
    "is_phase_retrievable",
    "is_pr_subspace",
    "lifted_independent",
    "lifted_operator",
    "load_json",
    "min_support",
    "nullspace",
    "parse_rational",
    "plan",
    "pr_redundancy",
    "project_frame",
    "rank",
    "random_pr_subspace",
    "sample_int_matrix",
    "sample_pattern",
    "save_json",
    "span_dim",
    "spark",
    "step_I",
    "step_II",
    "step_III",
    "subspace_from_dict",
    "subspace_to_dict",
    "support",
    "verdict_to_dict",
    "witness_from_dict",
    "witness_to_dict",
]
