"""Error taxonomy.

Everything a caller can trigger derives from NoncrossError and ValueError, so
generic except-ValueError code keeps working.  InternalInvariantError marks
states the library promises are unreachable; it is a RuntimeError on purpose
so it is never swallowed alongside input validation.
"""


class NoncrossError(Exception):
    """Base class for all library errors."""


class InvalidPartitionError(NoncrossError, ValueError):
    """A block structure that is not a partition of [n]."""


class OutOfRangeError(InvalidPartitionError):
    """An element outside 1..n."""


class OverlapError(InvalidPartitionError):
    """An element listed in two blocks (or twice in one)."""


class NotACoverError(InvalidPartitionError):
    """Blocks miss some element of [n]."""


class EmptyBlockError(InvalidPartitionError):
    """A block with no elements."""


class CrossingError(NoncrossError, ValueError):
    """A partition required to be noncrossing has a crossing."""


class CrossingBlocksError(NoncrossError, ValueError):
    """Fixed blocks handed to the relative sublattice cross each other."""


class SizeMismatchError(NoncrossError, ValueError):
    """Operands whose ground-set sizes do not fit the operation."""


class TooLargeError(NoncrossError, ValueError):
    """A request beyond the configured enumeration bound."""


class NotKPreservingError(NoncrossError, ValueError):
    """Partition whose blocks are not constant modulo k."""


class NotAdmissibleError(NoncrossError, ValueError):
    """Operand tuple whose shuffle crosses."""


class NotAMultichainError(NoncrossError, ValueError):
    """A sequence that is not weakly increasing in the coarsening order."""


class NotCompleteError(NoncrossError, ValueError):
    """An operand tuple that does not compose to the full partition."""


class NotCompletingError(NoncrossError, ValueError):
    """A k-preserving partition whose join with the consecutive blocks is not full."""


class NotDividingError(NoncrossError, ValueError):
    """A pair (a, b) where a does not refine b."""


class ParseError(NoncrossError, ValueError):
    """Bad partition literal; .offset is the byte position of the problem."""

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (offset {offset})")
        self.offset = offset


class BasisMismatchError(NoncrossError, ValueError):
    """Incidence functions over different coalgebras combined."""


class OutOfBoundError(NoncrossError, ValueError):
    """An element outside the materialized basis of a coalgebra."""


class TooShallowError(NoncrossError, ValueError):
    """A simplicial operation that needs more degrees than the truncation has."""


class InternalInvariantError(NoncrossError, RuntimeError):
    """A violated internal invariant; always a library bug, never bad input."""
