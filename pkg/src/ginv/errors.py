"""Exception hierarchy.

Nonexistence of an inverse is reported by raising one of the
``NotInvertible`` subclasses; the exception carries enough structure to say
which hypothesis or factor failed.
"""

from __future__ import annotations


class GinvError(Exception):
    """Base class for every error raised by the package."""


class MalformedSpec(GinvError, ValueError):
    pass


class InvolutionInvalid(GinvError):
    pass


class NotCommutative(GinvError):
    pass


class RingMismatch(GinvError, TypeError):
    pass


class InfiniteRing(GinvError):
    pass


class RingTooLarge(GinvError):
    pass


class ShapeMismatch(GinvError, ValueError):
    pass


class NoSolution(GinvError):
    pass


class NotAUnit(GinvError):
    pass


class UnsupportedForm(GinvError, ValueError):
    pass


class UnknownScenario(GinvError, KeyError):
    pass


class NoneExists(GinvError):
    pass


class ConsistencyError(GinvError, AssertionError):
    """Two computation paths that must agree did not."""


class PreconditionViolated(GinvError):
    def __init__(self, failed, message=None):
        self.failed = tuple(failed)
        super().__init__(message or "precondition violated: " + ", ".join(self.failed))


class NotInvertible(GinvError):
    """The requested inverse does not exist."""

    because: str | None = None


class NotRegular(NotInvertible):
    """No inner inverse exists."""


class NotGroupInvertible(NotInvertible):
    pass


class Not13Invertible(NotInvertible):
    pass


class Not14Invertible(NotInvertible):
    pass


class NotCoreInvertible(NotInvertible):
    def __init__(self, because, failed=(), message=None):
        self.because = because
        self.failed = tuple(failed) or (because,)
        super().__init__(message or f"not core invertible ({because})")


class NotDualCoreInvertible(NotInvertible):
    def __init__(self, because, failed=(), message=None):
        self.because = because
        self.failed = tuple(failed) or (because,)
        super().__init__(message or f"not dual core invertible ({because})")
