"""Exception types raised across the package."""


class HawError(Exception):
    """Base class for all package errors."""


class InvalidInputError(HawError, ValueError):
    """An argument violates an operation's precondition."""


class NotInImageError(HawError, ValueError):
    """A value lies outside the image of a conversion (e.g. a non-palindromic Laurent polynomial)."""


class DegenerateParametersError(HawError, ValueError):
    """Parameters hit a degenerate locus (repeated eigenvalue, vanishing denominator, ...)."""
