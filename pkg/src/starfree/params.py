"""Problem parameters: number of colors r and forbidden star size t.

A coloring of a graph with r colors is *admissible* when no vertex has t
incident edges of one color (no monochromatic t-edge star).  Everything in
this package is parametrized by the pair (r, t).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["ForbidParams"]


@dataclass(frozen=True)
class ForbidParams:
    """Parameters of the forbidden configuration.

    r: number of colors, at least 2.
    t: number of edges of the forbidden monochromatic star, at least 2.
    """

    r: int
    t: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or not isinstance(self.t, int):
            raise TypeError("r and t must be integers")
        if self.r < 2:
            raise ValueError(f"need r >= 2 colors, got {self.r}")
        if self.t < 2:
            raise ValueError(f"need star size t >= 2, got {self.t}")

    @property
    def k(self) -> int:
        """Covering multiplicity 2r(t-1) - 3 used by the entropy bound."""
        return 2 * self.r * (self.t - 1) - 3

    @property
    def per_color_cap(self) -> int:
        """Most edges of one color a vertex may carry: t - 1."""
        return self.t - 1

    @property
    def degree_capacity(self) -> int:
        """Largest degree with any admissible coloring at all: r(t-1)."""
        return self.r * (self.t - 1)

    @property
    def max_useful_degree(self) -> int:
        """Degree cap r(t-1) - 1 for graphs maximizing the coloring count."""
        return self.r * (self.t - 1) - 1

    @property
    def low_degree_threshold(self) -> int:
        """ceil(r/2) * (t-1); below it, adding an edge never loses colorings."""
        return -(-self.r // 2) * (self.t - 1)

    @property
    def degree_range(self) -> range:
        """Degrees a with low_degree_threshold <= a <= max_useful_degree."""
        return range(self.low_degree_threshold, self.max_useful_degree + 1)
