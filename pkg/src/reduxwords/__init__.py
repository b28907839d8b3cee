"""Run-length reduction of words and the complexity functions it induces.

The library computes, for an infinite sequence given by a deterministic
rule, how many distinct length-n windows it has up to four equivalences:
equality, anagram equivalence, equal run-length reductions, and anagram
equivalence of the reductions. Exact brute-force engines certify counts by
window doubling; closed forms for the Thue-Morse and paperfolding sequences
are checked against those engines through a claim registry.
"""

from .complexity import (
    AlternationPrefix,
    ComplexityProfile,
    ExtremesTable,
    WindowPolicy,
    abelian_complexity,
    alternation_extremes,
    factor_complexity,
    reduced_abelian_complexity,
    reduced_complexity_from_extremes,
    reduced_factor_complexity,
)
from .errors import (
    CapacityError,
    ConfigurationError,
    ReduxwordsError,
    SmallCaseException,
    SpecFileError,
    StabilizationError,
    WordDomainError,
)
from .sequences import (
    Morphism,
    SequenceHandle,
    ToeplitzSpec,
    from_pointwise,
    load_sequence_spec,
    morphic_fixed_point,
    paperfolding,
    paperfolding_at,
    paperfolding_toeplitz,
    parse_sequence_spec,
    thue_morse,
    thue_morse_at,
    thue_morse_morphic,
    thue_morse_morphism,
    toeplitz,
)
from .theorems import (
    CLAIMS,
    Claim,
    KernelEstimate,
    VerificationReport,
    check_alternating_skeleton_runs,
    check_extremes_halving,
    check_extremes_mod4,
    check_extremes_recursions,
    check_mu_alternation,
    check_pf_factor_linear,
    check_pf_reduced_1mod8,
    check_pf_reduced_3mod8,
    check_pf_reduced_5mod8,
    check_pf_reduced_7mod8,
    check_pf_reduced_abelian_closed_form,
    check_pf_reduced_closed_form,
    check_pf_reduced_even,
    check_reduced_bridge,
    check_tm_factor_recursion,
    check_tm_reduced_recursion,
    kernel_rank,
    pf_factor_count,
    pf_reduced_abelian_count,
    pf_reduced_factor_count,
    profile_kernel_rank,
    scan_mod4_gap,
    scan_odd_halving,
    tm_factor_count,
    tm_reduced_factor_count,
    verify,
)
from .words import (
    AbelianReducedKey,
    ParikhVector,
    ReducedKey,
    RunDecomposition,
    Word,
    abelian_reduced_key,
    alternations,
    parikh,
    reduce,
    reduced_key,
    run_decomposition,
    trim_first,
    trim_last,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianReducedKey",
    "AlternationPrefix",
    "CapacityError",
    "CLAIMS",
    "Claim",
    "ComplexityProfile",
    "ConfigurationError",
    "ExtremesTable",
    "KernelEstimate",
    "Morphism",
    "ParikhVector",
    "ReducedKey",
    "ReduxwordsError",
    "RunDecomposition",
    "SequenceHandle",
    "SmallCaseException",
    "SpecFileError",
    "StabilizationError",
    "ToeplitzSpec",
    "VerificationReport",
    "Word",
    "WordDomainError",
    "WindowPolicy",
    "abelian_complexity",
    "abelian_reduced_key",
    "alternation_extremes",
    "alternations",
    "check_alternating_skeleton_runs",
    "check_extremes_halving",
    "check_extremes_mod4",
    "check_extremes_recursions",
    "check_mu_alternation",
    "check_pf_factor_linear",
    "check_pf_reduced_1mod8",
    "check_pf_reduced_3mod8",
    "check_pf_reduced_5mod8",
    "check_pf_reduced_7mod8",
    "check_pf_reduced_abelian_closed_form",
    "check_pf_reduced_closed_form",
    "check_pf_reduced_even",
    "check_reduced_bridge",
    "check_tm_factor_recursion",
    "check_tm_reduced_recursion",
    "factor_complexity",
    "from_pointwise",
    "kernel_rank",
    "load_sequence_spec",
    "morphic_fixed_point",
    "paperfolding",
    "paperfolding_at",
    "paperfolding_toeplitz",
    "parikh",
    "parse_sequence_spec",
    "pf_factor_count",
    "pf_reduced_abelian_count",
    "pf_reduced_factor_count",
    "profile_kernel_rank",
    "reduce",
    "reduced_abelian_complexity",
    "reduced_complexity_from_extremes",
    "reduced_factor_complexity",
    "reduced_key",
    "run_decomposition",
    "scan_mod4_gap",
    "scan_odd_halving",
    "thue_morse",
    "thue_morse_at",
    "thue_morse_morphic",
    "thue_morse_morphism",
    "tm_factor_count",
    "tm_reduced_factor_count",
    "toeplitz",
    "trim_first",
    "trim_last",
    "verify",
]
