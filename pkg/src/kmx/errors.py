"""Exception taxonomy shared by all kmx modules."""


class KmxError(Exception):
    """Base class for all package errors."""


class DomainError(KmxError):
    """Input violates a documented precondition (bad diagram, non-root, ...)."""


class InvariantViolation(KmxError):
    """A certified mathematical invariant failed; indicates a bug or a
    contradiction with the underlying theory, never a bad input."""


class SingularMatrixError(DomainError):
    """Exact linear solve hit a singular matrix."""
