"""Exception types shared across the package."""


class PreclusionError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(PreclusionError, ValueError):
    """A generator or operation received an invalid parameter."""


class TagMismatchError(PreclusionError, ValueError):
    """An edge set was applied to a graph it does not belong to."""


class ParseError(PreclusionError, ValueError):
    """Malformed graph input. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class OracleLimitError(PreclusionError, ValueError):
    """Instance is too large for an exhaustive brute-force routine."""


class PreconditionError(PreclusionError, ValueError):
    """An operation's stated precondition does not hold for the input."""


class BudgetError(PreclusionError, ValueError):
    """A verification was requested beyond its supported enumeration budget."""


class ReductionError(PreclusionError, RuntimeError):
    """The constructive witness extraction reached a state its case analysis
    does not cover; surfaced instead of being patched over."""
