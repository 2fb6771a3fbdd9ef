"""Executable identities, the t-design detector and the seeded self-test."""
from .corpus import (
    CorpusInstance,
    CorpusOptions,
    IdentityResult,
    SelftestSummary,
    draw_instances,
    random_code,
    random_generator,
    random_harmonic,
    run_selftest,
)
from .designs import DegreeResult, DesignReport, WeightResult, design_check, verify_design_agreement
from .identities import (
    greene_rhs,
    macwilliams_rhs,
    verify_btf,
    verify_complement_relation,
    verify_duality,
    verify_greene,
    verify_greene_pointwise,
    verify_harm_dimension,
    verify_lemma_slices,
    verify_macwilliams_classical,
    verify_macwilliams_harmonic,
    verify_oracle_equivalence,
    verify_reinterpretation,
    verify_shortening_tutte,
    verify_sqrt2_reduction,
    verify_tilde_sums,
)
from .report import Instance, VerificationReport, compare

__all__ = [
    "CorpusInstance",
    "CorpusOptions",
    "DegreeResult",
    "DesignReport",
    "IdentityResult",
    "Instance",
    "SelftestSummary",
    "VerificationReport",
    "WeightResult",
    "compare",
    "design_check",
    "draw_instances",
    "greene_rhs",
    "macwilliams_rhs",
    "random_code",
    "random_generator",
    "random_harmonic",
    "run_selftest",
    "verify_btf",
    "verify_complement_relation",
    "verify_design_agreement",
    "verify_duality",
    "verify_greene",
    "verify_greene_pointwise",
    "verify_harm_dimension",
    "verify_lemma_slices",
    "verify_macwilliams_classical",
    "verify_macwilliams_harmonic",
    "verify_oracle_equivalence",
    "verify_reinterpretation",
    "verify_shortening_tutte",
    "verify_sqrt2_reduction",
    "verify_tilde_sums",
]
