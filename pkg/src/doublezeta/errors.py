"""Error and warning types shared across the package.

All failures raised by the evaluators derive from DoubleZetaError so callers
can catch the package's failures with a single except clause.  Numerical
quality concerns that do not invalidate a result are signalled through
ConditioningWarning instead.
"""

from __future__ import annotations


class DoubleZetaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DoubleZetaError):
    """An argument lies outside the mathematical domain of the operation."""


class RangeError(DoubleZetaError):
    """An argument is inside the domain but outside the supported range."""


class PoleAt(DoubleZetaError):
    """Evaluation was requested at (or too close to) a pole.

    The pole location is available as the ``location`` attribute.
    """

    def __init__(self, location: complex, message: str | None = None):
        self.location = location
        if message is None:
            message = f"evaluation point is at a pole located at s = {location}"
        super().__init__(message)


class DegenerateRatio(DoubleZetaError):
    """The parameter ratio is non-finite or overflows and cannot be classified."""


class ShiftOutOfRange(DoubleZetaError):
    """No shift decomposition with components in the required interval exists."""


class GuardSaturated(DoubleZetaError):
    """Too many series terms were skipped by the small-denominator guard.

    Raised when more than one percent of the indices hit the guard, or when a
    denominator vanishes exactly; both indicate the ratio behaves rationally
    and the series is not a trustworthy evaluation route.
    """


class NonConvergent(DoubleZetaError):
    """The truncated series did not reach its target tail bound."""


class TooCloseToPole(DoubleZetaError):
    """A bound check was requested too close to a singularity to be meaningful."""


class NotEnoughMethods(DoubleZetaError):
    """Fewer than two evaluation routes apply, so no cross-check is possible."""


class InsufficientSpan(DoubleZetaError):
    """The data covers too little range (or too few windows) to fit an exponent."""


class ConditioningWarning(UserWarning):
    """The result is returned but its accuracy is degraded by conditioning."""
