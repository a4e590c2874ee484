"""The star weight f(a): colorings of an a-edge star with one edge's color fixed.

f(a) counts assignments of r colors to the a-1 unfixed edges of a star such
that the fixed color appears at most t-2 more times and every other color at
most t-1 times (so no color reaches t).  The index a includes the fixed edge,
and getting that off by one is the classic mistake here: f(1) = 1, and
f(a) = r^(a-1) while a <= t-1.

Four independent evaluations are provided: the color-distribution DP
(general), the two-color binomial sum, the t=3 closed forms at the top of
the degree range, and the t=3 profile sum; the test suite pins them against
each other and against direct enumeration.
"""

from __future__ import annotations

from itertools import product
from math import comb, factorial

from .errors import BudgetExceededError
from .params import ForbidParams

__all__ = [
    "f_star",
    "f_star_brute",
    "f_star_two_colors",
    "f_star_t3_closed",
    "f_star_t3_profile_sum",
]


def _caps(p: ForbidParams) -> list[int]:
    # the fixed color has one use already; the rest are fresh
    return [p.t - 2] + [p.t - 1] * (p.r - 1)


def f_star(p: ForbidParams, a: int) -> int:
    """Exact f(a) by distributing the a-1 free edges color by color."""
    if a < 1:
        raise ValueError("a star needs at least its fixed edge")
    free = a - 1
    # ways[j] = assignments of j of the free edges using the colors so far
    ways = [0] * (free + 1)
    ways[0] = 1
    for cap in _caps(p):
        nxt = [0] * (free + 1)
        for j, w in enumerate(ways):
            if w:
                for s in range(min(cap, free - j) + 1):
                    nxt[j + s] += w * comb(free - j, s)
        ways = nxt
    return ways[free]


def f_star_brute(p: ForbidParams, a: int, budget: int = 2**24) -> int:
    """Oracle: enumerate all r^(a-1) assignments and filter."""
    if a < 1:
        raise ValueError("a star needs at least its fixed edge")
    total = p.r ** (a - 1)
    if total > budget:
        raise BudgetExceededError(
            f"{total} assignments exceed the enumeration budget {budget}", size=total
        )
    count = 0
    for colors in product(range(p.r), repeat=a - 1):
        uses = [0] * p.r
        uses[0] = 1
        for c in colors:
            uses[c] += 1
        if max(uses) <= p.t - 1:
            count += 1
    return count


def f_star_two_colors(t: int, a: int) -> int:
    """f(a) for r=2 as the binomial sum over uses of the second color."""
    if t < 2:
        raise ValueError("star size must be at least 2")
    if a < 1:
        raise ValueError("a star needs at least its fixed edge")
    return sum(comb(a - 1, k) for k in range(max(0, a - t), t - 1))


def f_star_t3_closed(r: int, a: int) -> int:
    """f(a) for t=3 at the top of the degree range, in closed form.

    Supported only for a in {2r-3, 2r-2, 2r-1}.
    """
    if r < 2:
        raise ValueError("need at least two colors")
    if a == 2 * r - 1:
        num, den = factorial(2 * r - 1), 2 ** (r - 1)
    elif a == 2 * r - 2:
        num, den = r * factorial(2 * r - 2), 2 ** (r - 1)
    elif a == 2 * r - 3:
        num, den = (r + 1) * factorial(2 * r - 2), 3 * 2 ** (r - 1)
    else:
        raise ValueError(
            f"no closed form for a={a}; supported: {2*r-3}, {2*r-2}, {2*r-1}"
        )
    quotient, remainder = divmod(num, den)
    if remainder:
        raise ArithmeticError(f"closed form for a={a}, r={r} is not an integer")
    return quotient


def f_star_t3_profile_sum(r: int, a: int) -> int:
    """f(a) for t=3 as the exact sum over color-usage profiles.

    Splits on c1 (extra uses of the fixed color, 0 or 1) and on the number
    of other colors used twice; each profile contributes a multinomial.
    """
    if r < 2:
        raise ValueError("need at least two colors")
    if a < 1:
        raise ValueError("a star needs at least its fixed edge")
    total = 0
    for c1 in (0, 1):
        for twice in range(0, (a - 1 - c1) // 2 + 1):
            once = a - 1 - c1 - 2 * twice
            unused = r - a + c1 + twice
            if once < 0 or unused < 0:
                continue
            total += factorial(a - 1) * factorial(r - 1) // (
                2**twice * factorial(twice) * factorial(once) * factorial(unused)
            )
    return total
