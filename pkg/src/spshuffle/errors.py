"""Exception types shared across the package.

Every error raised by the library derives from :class:`SpShuffleError`, so
callers can catch one base class at API boundaries (the CLI does exactly
that to map failures onto exit codes).
"""

from __future__ import annotations


class SpShuffleError(Exception):
    """Base class for all library errors."""


class DuplicateLabelError(SpShuffleError):
    """A point label occurs more than once."""


class UnknownLabelError(SpShuffleError):
    """A relation mentions a label that is not among the points."""


class CycleDetectedError(SpShuffleError):
    """Transitive closure produced a < b and b < a for distinct points."""


class ArityMismatchError(SpShuffleError):
    """A lexicographic sum got the wrong number of sub-posets."""


class TooLargeError(SpShuffleError):
    """Input exceeds an enumeration cap."""


class NotSeriesParallelError(SpShuffleError):
    """The poset contains an induced N and cannot be factorized.

    ``witness`` holds four labels (m, l, n, k) with m<l, n<l, n<k and all
    other pairs incomparable.
    """

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"not series-parallel; induced N on {self.witness}")


class ExpressionSyntaxError(SpShuffleError):
    """Malformed expression or tree text; ``offset`` is a byte offset."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (offset {offset})")


class EmptyInputError(SpShuffleError):
    """The parser got an empty string."""


class StackUnderflowError(SpShuffleError):
    """An RPN operator found fewer than two operands."""


class LeftoverOperandsError(SpShuffleError):
    """RPN evaluation finished with more than one value on the stack."""


class SupportOutOfRangeError(SpShuffleError):
    """A shuffle vector has support outside 1..size."""


class NonIntegerSolutionError(SpShuffleError):
    """A count sequence cannot come from a poset (negative d-coefficient)."""


class GroundSetMismatchError(SpShuffleError):
    """A candidate shuffle is not built on the expected labeled points."""


class NotReducedError(SpShuffleError):
    """A tree operation requires a reduced tree."""
