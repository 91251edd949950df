"""Exact analysis of locally forcing tournaments."""

__version__ = "0.1.0"

from .counting import bundle, counting_polynomial, degree_counting_polynomial, rescaled_q  # noqa: E402
from .decide import ForcingReport, GlobalStatus, is_bip_forcing, is_cliq_forcing, is_locally_forcing  # noqa: E402
from .embeddings import count_embeddings, mc_estimate_embeddings, transitive_lower_bound  # noqa: E402
from .errors import DomainError, ParseError, ResourceError, TourforceError  # noqa: E402
from .metrics import MetricsReport, max_directed_surplus, max_forward_edges, necessary_conditions  # noqa: E402
from .poly import RationalPolynomial  # noqa: E402
from .tournament import Tournament, canonical_code  # noqa: E402

__all__ = [
    "DomainError",
    "ForcingReport",
    "GlobalStatus",
    "MetricsReport",
    "ParseError",
    "RationalPolynomial",
    "ResourceError",
    "Tournament",
    "TourforceError",
    "bundle",
    "canonical_code",
    "count_embeddings",
    "counting_polynomial",
    "degree_counting_polynomial",
    "is_bip_forcing",
    "is_cliq_forcing",
    "is_locally_forcing",
    "max_directed_surplus",
    "max_forward_edges",
    "mc_estimate_embeddings",
    "necessary_conditions",
    "rescaled_q",
    "transitive_lower_bound",
]
