"""Exception hierarchy shared by every module."""


class TourforceError(Exception):
    """Base class for all library errors."""


class ParseError(TourforceError, ValueError):
    """Malformed textual input (tournament codes, polynomials, partitions)."""


class DomainError(TourforceError, ValueError):
    """Arguments outside the mathematical domain of an operation."""


class ResourceError(TourforceError, RuntimeError):
    """A configured size cap or work budget would be exceeded."""
