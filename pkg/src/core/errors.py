"""
Exception hierarchy shared by the engine and the CLI.

Every error carries the process exit code the CLI reports for it.
"""

from typing import Optional


class AddBasisError(Exception):
    exit_code = 1
    kind = "error"


class ParseError(AddBasisError, ValueError):
    """Malformed set literal or command input."""

    exit_code = 4
    kind = "parse"

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class AmbientMismatchError(AddBasisError, ValueError):
    exit_code = 4
    kind = "ambient_mismatch"


class PreconditionError(AddBasisError, ValueError):
    """An operation was called outside its domain; the message names the clause."""

    exit_code = 2
    kind = "precondition"


class SemigroupError(PreconditionError):
    kind = "not_a_semigroup"


class CapacityError(PreconditionError):
    kind = "capacity"


class VerificationError(AddBasisError, RuntimeError):
    """A certificate did not check out, or a proved bound was violated."""

    exit_code = 3
    kind = "verification"


class TruncationError(VerificationError):
    kind = "truncation"
