"""Exception hierarchy shared by every module."""


class CapillaryError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CapillaryError, ValueError):
    """Input data outside the admissible range of an operation."""


class NoJoiningSolution(DomainError):
    """No solution curve joins the two plates with the requested data."""


class BranchSplitError(DomainError):
    """A single-branch arc was requested across an axis crossing."""


class BracketError(DomainError):
    """The supplied bracket does not enclose a sign change."""


class NumericalError(CapillaryError, RuntimeError):
    """A numerical kernel failed to reach its tolerance."""

    def __init__(self, message, best_estimate=None, error_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
