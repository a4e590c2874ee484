"""Upper bounds on the coloring growth rate from a covering argument.

Every admissible coloring of a graph projects onto the stars around both
endpoints of each edge, and each edge lies in k = 2r(t-1)-3 of the covering
sets once unit sets pad the count.  That caps count(G)^k by a product of
per-edge weights g(a,b) depending only on endpoint degrees, and caps the
growth rate b by max_a (r^{2r(t-1)-1-2a} f(a)^2)^{a/(2k)} over the degree
window that extremal graphs can use.  The argmax is computed exactly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import MonochromaticStarForcedError
from .graphs import Graph
from .numeric import (
    DEFAULT_DIGIT_BUDGET,
    DEFAULT_DIGITS,
    argmax_powers,
    power_decimal,
)
from .params import ForbidParams
from .starcounts import f_star

__all__ = [
    "BoundReport",
    "PowerForm",
    "GraphBound",
    "g_edge",
    "g_vertex",
    "vertex_base",
    "upper_bound_b",
    "closed_form_b2t",
    "closed_form_br3",
    "graph_count_upper_bound",
]


def g_edge(p: ForbidParams, a: int, b: int) -> Fraction:
    """Per-edge weight r^{2r(t-1)-1-(a+b)} * f(a) * f(b), exact."""
    for d in (a, b):
        if d < 1:
            raise ValueError("an edge endpoint has degree at least 1")
        if d > p.degree_capacity:
            raise MonochromaticStarForcedError(
                f"degree {d} exceeds r(t-1) = {p.degree_capacity}: every coloring "
                f"of such a star has t like-colored edges, f({d}) = 0"
            )
    exponent = 2 * p.r * (p.t - 1) - 1 - (a + b)
    return Fraction(p.r) ** exponent * f_star(p, a) * f_star(p, b)


def g_vertex(p: ForbidParams, a: int) -> Fraction:
    """Per-vertex objective g(a,a)^a; warns outside the useful degree window."""
    rng = p.degree_range
    if a not in rng:
        warnings.warn(
            f"degree {a} outside the window [{rng.start}, {rng.stop - 1}]; "
            "value computed anyway",
            stacklevel=2,
        )
    return g_edge(p, a, a) ** a


def vertex_base(p: ForbidParams, a: int) -> int:
    """X_a = r^{2r(t-1)-1-2a} * f(a)^2, an integer inside the degree window."""
    exponent = 2 * p.r * (p.t - 1) - 1 - 2 * a
    if exponent < 0:
        raise ValueError(f"degree {a} is past the window; the base is not integral")
    return p.r**exponent * f_star(p, a) ** 2


@dataclass(frozen=True)
class BoundReport:
    """Result of the growth-rate optimization.

    value is a decimal string for base**exponent, where base = X_{a*} and
    exponent = a*/(2k); so value^(2k) equals g_table[a_star] = base^{a*}.
    g_table is empty when the digit budget pushed the argmax onto the
    log-interval route (the exact table is what the budget forbids).
    tied_a lists every argmax tie (the reported a_star is the largest).
    asymptotic_a is where the maximum lands for large parameters (2t-3 when
    r=2, 2r-1 when t=3), or None when no such prediction applies.
    """

    params: ForbidParams
    a_star: int
    base: Fraction
    exponent: Fraction
    value: str
    g_table: dict[int, Fraction]
    tied_a: tuple[int, ...]
    asymptotic_a: int | None
    trivial_lower: str
    trivial_upper: str


def upper_bound_b(
    p: ForbidParams,
    *,
    digits: int = DEFAULT_DIGITS,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> BoundReport:
    """Exact argmax of g(a) over the degree window and the resulting bound.

    Candidates X_a^a are compared as big integers while the digit budget
    allows, otherwise by certified log intervals (raising PrecisionError on
    candidates the intervals cannot separate).  Argmax ties break toward
    larger a.
    """
    if p.t < 3:
        raise ValueError("the optimization needs t >= 3")
    degrees = list(p.degree_range)
    bases = [vertex_base(p, a) for a in degrees]
    idx, tie_idx, values = argmax_powers(
        [(x, a) for x, a in zip(bases, degrees)], digit_budget=digit_budget
    )
    a_star = degrees[idx]
    base = Fraction(bases[idx])
    exponent = Fraction(a_star, 2 * p.k)
    value = power_decimal(base, exponent, digits=digits, digit_budget=digit_budget)
    g_table = (
        {a: Fraction(v) for a, v in zip(degrees, values)} if values is not None else {}
    )
    if p.r == 2:
        asymptotic = 2 * p.t - 3
    elif p.t == 3:
        asymptotic = 2 * p.r - 1
    else:
        asymptotic = None
    trivial_lower = power_decimal(p.r, Fraction(p.t - 1, 2), digits=digits)
    trivial_upper = power_decimal(p.r, Fraction(p.r * (p.t - 1), 2), digits=digits)
    return BoundReport(
        params=p,
        a_star=a_star,
        base=base,
        exponent=exponent,
        value=value.text,
        g_table=g_table,
        tied_a=tuple(degrees[i] for i in tie_idx),
        asymptotic_a=asymptotic,
        trivial_lower=trivial_lower.text,
        trivial_upper=trivial_upper.text,
    )


@dataclass(frozen=True)
class PowerForm:
    """An exact base-and-exponent pair representing base**exponent."""

    base: Fraction
    exponent: Fraction

    def decimal(
        self,
        digits: int = DEFAULT_DIGITS,
        *,
        digit_budget: int = DEFAULT_DIGIT_BUDGET,
    ) -> str:
        return power_decimal(
            self.base, self.exponent, digits=digits, digit_budget=digit_budget
        ).text


def closed_form_b2t(t: int) -> PowerForm:
    """Two-color bound (2*C(2t-3,t-2)^2)^((2t-3)/(2(4t-7))), integer base."""
    if t < 3:
        raise ValueError("the closed form needs t >= 3")
    base = Fraction(2 * comb(2 * t - 3, t - 2) ** 2)
    return PowerForm(base, Fraction(2 * t - 3, 2 * (4 * t - 7)))


def closed_form_br3(r: int) -> PowerForm:
    """Three-edge-star bound (r(2r-1)!^2/2^{2r-2})^((2r-1)/(8r-6))."""
    if r < 2:
        raise ValueError("need at least two colors")
    base = Fraction(r * factorial(2 * r - 1) ** 2, 2 ** (2 * r - 2))
    return PowerForm(base, Fraction(2 * r - 1, 8 * r - 6))


@dataclass(frozen=True)
class GraphBound:
    """Per-graph certificate: count(G)^k <= product, value = product^(1/k)."""

    product: Fraction
    k: int
    value: str
    exact: bool


def graph_count_upper_bound(
    g: Graph, p: ForbidParams, *, digits: int = DEFAULT_DIGITS
) -> GraphBound:
    """(prod over edges of g_edge at the endpoint degrees)^(1/k).

    Requires max degree <= r(t-1)-1 so every edge keeps a nonnegative
    number of padding slots in the covering argument.
    """
    if g.max_degree > p.max_useful_degree:
        extra = (
            " (and the exact count is 0 anyway)"
            if g.max_degree > p.degree_capacity
            else ""
        )
        raise MonochromaticStarForcedError(
            f"max degree {g.max_degree} exceeds r(t-1)-1 = {p.max_useful_degree}: "
            f"the covering argument does not apply{extra}"
        )
    degs = g.degrees()
    product = Fraction(1)
    for u, v in g.sorted_edges():
        product *= g_edge(p, degs[u], degs[v])
    rendered = power_decimal(product, Fraction(1, p.k), digits=digits)
    return GraphBound(product, p.k, rendered.text, rendered.exact)
