# ABOUTME: Exception hierarchy shared by the library and the CLI, separating domain errors
# ABOUTME: (bad mathematical input) from internal invariant failures.


class AkcoresError(Exception):
    """Base class for every error raised by akcores."""


class DomainError(AkcoresError, ValueError):
    """Input violates a mathematical precondition (e < 2, length mismatch, malformed partition)."""


class IllegalMoveError(DomainError):
    """An elementary operation was requested that is not legal on the given abacus."""


class InvariantError(AkcoresError, AssertionError):
    """An internal invariant failed: a half sum that must be integral, or block members with different cores."""


class ParseError(AkcoresError, ValueError):
    """Text could not be read as a partition, multipartition or multicharge."""
