"""Exception types shared across the package."""


class ChowSeriesError(Exception):
    """Base class for all library-specific errors."""


class RankMismatchError(ChowSeriesError, ValueError):
    """Operands live over grading monoids of different rank."""


class NotInvertibleError(ChowSeriesError, ValueError):
    """The constant term is not a unit, so no series inverse exists."""


class InconclusiveError(ChowSeriesError):
    """The requested analysis cannot reach a verdict on the available data.

    Deliberately distinct from returning False: raising this means the
    question was not decided either way.
    """


class InsufficientTruncationError(InconclusiveError):
    """The truncated data is too short for the requested check."""


class TermBudgetError(ChowSeriesError):
    """A computation would exceed the configured coefficient-term budget."""
