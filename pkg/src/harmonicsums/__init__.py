"""Arbitrary-precision evaluation and verification of harmonic-number series
identities: special functions, a summation/acceleration engine, an identity
registry with exact rational checks, an HTTP service and a CLI.
"""

from .catalog import (
    IdentityRecord,
    VerificationReport,
    closed_form,
    list_identities,
    lookup,
    registry_document,
    run_report,
    sweep,
    verify,
    verify_exact,
)
from .errors import (
    AccelerationDiverged,
    ConvergenceError,
    DomainError,
    EstimateUnavailable,
    HarmonicSumsError,
    KindError,
    NotFound,
    PoleError,
)
from .harmonic import (
    exact_gen_harmonic,
    gen_harmonic,
    half_integer_harmonic,
    harmonic,
    odd_harmonic,
)
from .precision import DEFAULT_CONTEXT, PrecisionContext, constants
from .series import (
    Family,
    SeriesSpec,
    SumResult,
    TermSource,
    Weight,
    accelerate,
    partial_sum,
    sum_to_tolerance,
    tail_estimate,
    term,
)
from .specfun import digamma, gen_binom, ln_gamma, polygamma, zeta

__all__ = [
    "AccelerationDiverged",
    "ConvergenceError",
    "DEFAULT_CONTEXT",
    "DomainError",
    "EstimateUnavailable",
    "Family",
    "HarmonicSumsError",
    "IdentityRecord",
    "KindError",
    "NotFound",
    "PoleError",
    "PrecisionContext",
    "SeriesSpec",
    "SumResult",
    "TermSource",
    "VerificationReport",
    "Weight",
    "accelerate",
    "closed_form",
    "constants",
    "digamma",
    "exact_gen_harmonic",
    "gen_binom",
    "gen_harmonic",
    "half_integer_harmonic",
    "harmonic",
    "list_identities",
    "ln_gamma",
    "lookup",
    "odd_harmonic",
    "partial_sum",
    "polygamma",
    "registry_document",
    "run_report",
    "sum_to_tolerance",
    "sweep",
    "tail_estimate",
    "term",
    "verify",
    "verify_exact",
    "zeta",
]

__version__ = "1.0.0"
