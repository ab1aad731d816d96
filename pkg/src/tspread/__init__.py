"""Freiman t-spread principal Borel ideals: generators, sorted graphs,
and three independent Freiman tests."""

from .borel import GeneratorSet, borel_gens, borel_gens_direct, is_sortable, phi_shift
from .classify import ClassificationResult, classify_closed_form, classify_intro_variant
from .errors import InvalidInput, PreconditionViolation, Unsupported
from .ideal import (
    FreimanVerdict,
    analytic_spread,
    freiman_bound,
    is_freiman_direct,
    mu,
    power_gens,
    predicted_mu_power,
)
from .monomial import (
    Monomial,
    SpreadWord,
    is_sorted_pair,
    is_t_spread,
    lex_compare,
    parse_monomial,
    product,
    sort_pair,
)
from .sortgraph import (
    ChordalityCertificate,
    SortedGraph,
    build_sorted_graph,
    is_chordal,
    is_freiman_via_chordality,
    verify_certificate,
)

__version__ = "0.1.0"
