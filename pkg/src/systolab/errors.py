"""Semantic exception hierarchy shared by all systolab modules."""


class SystolabError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SystolabError, ValueError):
    """An input is outside the mathematical domain of an operation."""


class ConstraintError(SystolabError, ValueError):
    """A feasibility constraint is violated; the message names the constraint."""


class DegenerateBoundError(SystolabError, ArithmeticError):
    """A bound formula evaluated to a meaningless value (log argument <= 1)."""


class MeshError(SystolabError, ValueError):
    """A triangulated surface fails a structural validity check."""


class ResourceLimitError(SystolabError, RuntimeError):
    """A computation exceeded its configured size cap.

    ``partial`` carries whatever progress is safe to report (may be None).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class SearchError(SystolabError, RuntimeError):
    """An optimization search failed to produce any feasible point."""
