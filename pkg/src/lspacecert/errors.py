"""Exception types shared across the package."""


class WorkbenchError(Exception):
    """Base class for all domain errors raised by this package."""


class GenusTooSmall(WorkbenchError):
    """The construction needs genus at least two."""


class SurfaceMismatch(WorkbenchError):
    """Two curves live on different surfaces."""


class NotSimple(WorkbenchError):
    """A crossing word admits no embedded realization."""


class Inessential(WorkbenchError):
    """A crossing word reduces to a point or to the boundary."""


class NegativePower(WorkbenchError):
    """A twisting power that must be nonnegative was negative."""


class NotLSpaceForm(WorkbenchError):
    """A polynomial is not of the shape a staircase can produce."""


class AnchorViolation(WorkbenchError):
    """A recomputed fact disagrees with its pinned value.

    This is the self-consistency tripwire: any derivation that consumes a
    curve-level fact recomputes it, and aborts here on mismatch.
    """

    def __init__(self, fact, expected, got):
        self.fact = fact
        self.expected = expected
        self.got = got
        super().__init__(f"{fact}: expected {expected}, got {got}")


class BudgetExceeded(WorkbenchError):
    """A direct computation was larger than the configured budget."""


class ExprSyntaxError(WorkbenchError):
    """A curve expression failed to parse.

    Carries the byte offset of the failure and the set of tokens that
    would have been accepted there.
    """

    def __init__(self, offset, expected, found=None):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        what = repr(found) if found is not None else "end of input"
        exp = ", ".join(self.expected)
        super().__init__(f"at byte {offset}: found {what}, expected one of: {exp}")


class IndexOutOfRange(WorkbenchError):
    """A curve index in an expression exceeds the genus."""
