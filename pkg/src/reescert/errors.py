"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems (parse and family
validation) exit 2, resource caps exit 3.  Negative mathematical verdicts
are ordinary return values, not exceptions.
"""

from __future__ import annotations


class ReescertError(Exception):
    pass


class MonomialParseError(ReescertError, ValueError):
    """Raised when monomial or T-expression text does not match the grammar."""


class FamilyError(ReescertError, ValueError):
    """Raised when a family description fails validation."""


class NotClosedError(ReescertError):
    """Raised when an operation requires closure under comparability.

    Carries the witness pairs that break closure in ``witnesses``.
    """

    def __init__(self, message: str, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class ResourceCapError(ReescertError):
    """Raised when a computation would exceed a configured size cap."""


class InternalInvariantError(ReescertError):
    """A supposedly impossible state was reached (e.g. a non-terminating
    reduction).  Indicates a bug, never a property of valid input."""
