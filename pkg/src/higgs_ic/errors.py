"""Exception hierarchy.

Two families matter to callers: recoverable input errors (bad parameters,
genuine poles) and :class:`InternalInconsistencyError`, which signals that a
mathematical guarantee of the pipeline failed to hold -- always a bug, never
a legitimate input state.
"""


class HiggsICError(Exception):
    """Base class for all package errors."""


class ZeroDenominatorError(HiggsICError, ZeroDivisionError):
    """Division of rational functions by zero."""


class PoleError(HiggsICError):
    """A substitution made a denominator vanish identically."""

    def __init__(self, assignment, message="substitution hits a pole"):
        self.assignment = dict(assignment)
        super().__init__(f"{message}: {self.assignment}")


class NotDivisibleError(HiggsICError):
    """Exact polynomial division left a nonzero remainder."""


class OrderMismatchError(HiggsICError):
    """Arithmetic between truncated series of different orders."""


class InternalInconsistencyError(HiggsICError):
    """A pipeline invariant failed; indicates an implementation bug."""
