class DivTorusError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(DivTorusError, ValueError):
    """Malformed command-line or configuration input."""


class BoundExceededError(DivTorusError, ValueError):
    """A requested computation exceeds the configured desk-scale bounds."""


class DomainError(DivTorusError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class ConstructionError(DivTorusError, RuntimeError):
    """Internal inconsistency while building an sl_{N+1}-module."""


class VerificationError(DivTorusError, RuntimeError):
    """A constructive procedure or a certificate replay did not reproduce its claim."""
