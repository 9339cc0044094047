"""Exact index-iteration calculus for closed-geodesic profiles.

Public surface: profiles and their invariants, Bott-sum iteration,
loop-space Betti numbers, Morse-inequality bookkeeping, and the
single-geodesic contradiction search.
"""

from .errors import (
    HypothesesNotMet,
    PhaseCollision,
    PrecondViolation,
    ProfileFormatError,
)
from .homology import (
    BettiTable,
    average_euler_number,
    betti_number,
    betti_table,
    poincare_coefficients,
)
from .iteration import (
    IterateIndexReport,
    bott_index,
    bott_index_sequence,
    gap_decomposition,
    iterate_index,
    jump_search,
)
from .kernel import BACKEND as KERNEL_BACKEND
from .morse import MorseReport, aggregate_w, critical_group_dim, morse_q_recursion
from .profile import (
    IndexProfile,
    average_index,
    classify_elliptic_extremal,
    evaluate_index_function,
    gamma_invariant,
    profile_from_document,
    validate_profile,
)
from .verifier import (
    CONSISTENT,
    ContradictionReport,
    PhaseInfeasible,
    Prop33Report,
    Signature,
    VerificationSummary,
    check_prop33,
    enumerate_signatures,
    extremal_profile,
    phase_instantiate,
    single_geodesic_pipeline,
    validate_signature,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "CONSISTENT",
    "ContradictionReport",
    "HypothesesNotMet",
    "IndexProfile",
    "IterateIndexReport",
    "KERNEL_BACKEND",
    "MorseReport",
    "PhaseCollision",
    "PhaseInfeasible",
    "PrecondViolation",
    "ProfileFormatError",
    "Prop33Report",
    "Signature",
    "VerificationSummary",
    "aggregate_w",
    "average_euler_number",
    "average_index",
    "betti_number",
    "betti_table",
    "bott_index",
    "bott_index_sequence",
    "check_prop33",
    "classify_elliptic_extremal",
    "critical_group_dim",
    "enumerate_signatures",
    "evaluate_index_function",
    "extremal_profile",
    "gamma_invariant",
    "gap_decomposition",
    "iterate_index",
    "jump_search",
    "morse_q_recursion",
    "phase_instantiate",
    "poincare_coefficients",
    "profile_from_document",
    "single_geodesic_pipeline",
    "validate_profile",
    "validate_signature",
    "verify_theorem",
]
