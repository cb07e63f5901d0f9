"""Exception types shared across the package."""


class KoszulError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(KoszulError):
    """Operands have incompatible lengths (permutation size vs sequence length)."""


class DomainError(KoszulError):
    """Input outside the mathematical domain (e.g. n < 2, not a bijection)."""


class ResourceError(KoszulError):
    """Requested exhaustive computation exceeds the configured size bound."""


class ParseError(KoszulError):
    """Malformed textual input; carries the offending position when known."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
