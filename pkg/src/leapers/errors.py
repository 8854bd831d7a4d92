"""Exception hierarchy shared by every subpackage."""


class LeaperError(ValueError):
    """Base class for invalid input to leaper operations."""


class WrongLeaperClass(LeaperError):
    pass


class NotALeap(LeaperError):
    pass


class SelfIntersection(LeaperError):
    pass


class LengthMismatch(LeaperError):
    pass


class OverlapError(LeaperError):
    pass


class RhombusViolation(LeaperError):
    pass


class BoardTooSmall(LeaperError):
    pass


class PreconditionUnmet(LeaperError):
    pass


class NotConvex(LeaperError):
    pass


class NotFork(PreconditionUnmet):
    pass


class SharedSlope(LeaperError):
    pass


class NotSublattice(LeaperError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class IterationLimit(RuntimeError):
    pass


class ForcingCounterexample(AssertionError):
    """A forced chord was not found. The theorems say this cannot happen,
    so it always indicates a bug in this package."""
