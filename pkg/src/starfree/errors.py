"""Shared exception types."""


class StarfreeError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceededError(StarfreeError):
    """An enumeration or state-space budget would be exceeded.

    Carries the offending size so callers can report it.
    """

    def __init__(self, message: str, size: int | None = None):
        super().__init__(message)
        self.size = size


class PrecisionError(StarfreeError):
    """Certified interval arithmetic could not separate two candidates
    within the allowed precision escalation."""


class MonochromaticStarForcedError(StarfreeError):
    """A degree exceeds r*(t-1), so every coloring of the star is
    monochromatic somewhere and the weight functions degenerate to zero."""
