"""Exception taxonomy and the cooperative cancellation deadline."""

from __future__ import annotations

import time


class LocusForgeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(LocusForgeError):
    """Caller-supplied input violates a documented precondition."""


class ContextMismatch(ValidationError):
    """Operands use different variable contexts."""


class ZeroPolynomial(ValidationError):
    """Operation requires a nonzero polynomial."""


class EmptyIdeal(ValidationError):
    """All supplied generators are zero."""


class InvalidSpec(ValidationError):
    """Linkage spec violates its invariants (non-positive bar, A == B, ...)."""


class DegenerateCoupler(ValidationError):
    """u = v = 0: the coupler point coincides with E and the reduced system is undefined."""


class NoAssembly(LocusForgeError):
    """The linkage cannot close at the requested crank angle."""


class InvalidDegree(ValidationError):
    """Curve degree must be >= 1."""


class NotEnoughPoints(ValidationError):
    """Fewer than n(n+3)/2 sample points supplied."""


class RankDeficient(LocusForgeError):
    """Fit nullity > 1: the points do not determine a unique curve."""


class NoCurve(LocusForgeError):
    """Exact fit nullity 0: no curve of the requested degree passes through the points."""


class Cancelled(LocusForgeError):
    """A cooperative cancellation deadline fired; partial work was discarded."""


class Deadline:
    """Monotonic-clock deadline polled by long-running computations.

    A value of None passed where a Deadline is expected means "no deadline".
    """

    __slots__ = ("_expires_at",)

    def __init__(self, expires_at: float):
        self._expires_at = expires_at

    @classmethod
    def after_ms(cls, ms: int | None) -> "Deadline | None":
        if ms is None:
            return None
        return cls(time.monotonic() + ms / 1000.0)

    def expired(self) -> bool:
        return time.monotonic() >= self._expires_at

    def check(self) -> None:
        if self.expired():
            raise Cancelled("deadline exceeded")
