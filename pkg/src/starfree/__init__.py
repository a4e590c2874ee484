"""Exact bounds on r-edge-colorings of graphs with no monochromatic star.

The package computes, in exact arithmetic, upper and lower bounds on the
exponential growth rate of the number of r-edge-colorings avoiding a
monochromatic t-edge star, along with exhaustive counting routines used to
check the structural facts behind the bounds on small graphs.
"""

from .params import ForbidParams
from .errors import (
    StarfreeError,
    BudgetExceededError,
    PrecisionError,
    MonochromaticStarForcedError,
)

__version__ = "0.1.0"

__all__ = [
    "ForbidParams",
    "StarfreeError",
    "BudgetExceededError",
    "PrecisionError",
    "MonochromaticStarForcedError",
    "__version__",
]
