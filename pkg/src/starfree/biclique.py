"""Profile dynamic programming over complete bipartite graphs.

Counting colorings of K_{m,n} row by row: the state after j left vertices
is the multiset of per-color usage vectors at the n right vertices.  Right
vertices with equal vectors are interchangeable, so states are stored
sorted and transitions carry multinomial weights for distributing one row's
colors inside each equal-profile group.  An ordered-state variant (no
merging, no weights) exists purely to validate the canonical one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .errors import BudgetExceededError
from .numeric import DecimalBound, compare_powers, power_decimal
from .params import ForbidParams

__all__ = [
    "DEFAULT_STATE_BUDGET",
    "count_biclique",
    "count_biclique_ordered",
    "lower_bound_from_count",
    "SweepRow",
    "sweep_lower_bounds",
]

DEFAULT_STATE_BUDGET = 10**7

Profile = tuple[int, ...]
State = tuple[Profile, ...]


def _resolve_state_budget(state_budget: int | None) -> int:
    if state_budget is not None:
        return state_budget
    env = os.environ.get("STARFREE_STATE_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(
                f"STARFREE_STATE_BUDGET must be an integer, got {env!r}"
            ) from None
    return DEFAULT_STATE_BUDGET


def _groups(state: State) -> list[tuple[Profile, int]]:
    groups: list[tuple[Profile, int]] = []
    for prof in state:
        if groups and groups[-1][0] == prof:
            groups[-1] = (prof, groups[-1][1] + 1)
        else:
            groups.append((prof, 1))
    return groups


def _spread_row(
    groups: list[tuple[Profile, int]],
    r: int,
    cap: int,
    ways: int,
    sink: dict[State, int],
) -> None:
    """Color one left vertex's edges, one equal-profile group at a time.

    row_used tracks the left vertex's own per-color counts; the weight is
    the number of ways to pick which vertices of a group receive each color.
    """
    row_used = [0] * r
    out: list[Profile] = []

    def assign(gi: int, weight: int) -> None:
        if gi == len(groups):
            key = tuple(sorted(out))
            sink[key] = sink.get(key, 0) + ways * weight
            return
        prof, mult = groups[gi]
        allowed = [c for c in range(r) if prof[c] < cap]

        def split(ai: int, remaining: int, w: int) -> None:
            if ai == len(allowed):
                if remaining == 0:
                    assign(gi + 1, weight * w)
                return
            c = allowed[ai]
            bumped = list(prof)
            bumped[c] += 1
            new_prof = tuple(bumped)
            room = min(remaining, cap - row_used[c])
            for k in range(room + 1):
                if k:
                    row_used[c] += k
                    out.extend([new_prof] * k)
                split(ai + 1, remaining - k, w * comb(remaining, k))
                if k:
                    row_used[c] -= k
                    del out[-k:]

        split(0, mult, 1)

    assign(0, 1)


def count_biclique(
    m: int, n: int, p: ForbidParams, *, state_budget: int | None = None
) -> int:
    """Exact count of admissible colorings of K_{m,n} by canonical profile DP."""
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    if n > m:
        m, n = n, m  # keep the profile side small
    budget = _resolve_state_budget(state_budget)
    r, cap = p.r, p.per_color_cap
    states: dict[State, int] = {((0,) * r,) * n: 1}
    for _ in range(m):
        nxt: dict[State, int] = {}
        for state, ways in states.items():
            _spread_row(_groups(state), r, cap, ways, nxt)
        if len(nxt) > budget:
            raise BudgetExceededError(
                f"{len(nxt)} reachable states exceed the budget {budget}",
                size=len(nxt),
            )
        states = nxt
    return sum(states.values())


def count_biclique_ordered(
    m: int, n: int, p: ForbidParams, *, state_budget: int | None = None
) -> int:
    """Same count with position-fixed right profiles and row enumeration.

    Exponentially more states; exists to cross-validate count_biclique.
    """
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    if n > m:
        m, n = n, m
    budget = _resolve_state_budget(state_budget)
    r, cap = p.r, p.per_color_cap
    states: dict[State, int] = {((0,) * r,) * n: 1}
    for _ in range(m):
        nxt: dict[State, int] = {}
        for state, ways in states.items():
            for row in product(range(r), repeat=n):
                used = [0] * r
                for c in row:
                    used[c] += 1
                if max(used) > cap:
                    continue
                new_state = []
                for prof, c in zip(state, row):
                    if prof[c] >= cap:
                        break
                    bumped = list(prof)
                    bumped[c] += 1
                    new_state.append(tuple(bumped))
                else:
                    key = tuple(new_state)
                    nxt[key] = nxt.get(key, 0) + ways
        if len(nxt) > budget:
            raise BudgetExceededError(
                f"{len(nxt)} reachable states exceed the budget {budget}",
                size=len(nxt),
            )
        states = nxt
    return sum(states.values())


def lower_bound_from_count(
    count: int, n_vertices: int, *, places: int = 4
) -> DecimalBound:
    """count^(1/n_vertices) as a certified decimal, 4 places by default."""
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    if count < 1:
        raise ValueError("a zero count carries no lower bound")
    return power_decimal(count, Fraction(1, n_vertices), places=places)


@dataclass(frozen=True)
class SweepRow:
    """One K_{m,n} evaluation inside a sweep; bound is count^(1/(m+n))."""

    m: int
    n: int
    count: int | None
    bound: str | None
    skipped: bool = False
    note: str = ""

    @property
    def vertices(self) -> int:
        return self.m + self.n


def sweep_lower_bounds(
    p: ForbidParams, max_vertices: int, *, state_budget: int | None = None
) -> tuple[list[SweepRow], SweepRow | None]:
    """Evaluate K_{m,n} for all n <= m with m+n <= max_vertices.

    Rows come ordered by (m+n, m); rows over the state budget are marked
    skipped.  The best row maximizes count^(1/(m+n)), compared exactly;
    ties keep the earlier row.
    """
    if max_vertices < 2:
        raise ValueError("need room for at least K_{1,1}")
    rows: list[SweepRow] = []
    best: SweepRow | None = None
    for total in range(2, max_vertices + 1):
        for m in range((total + 1) // 2, total):
            n = total - m
            try:
                count = count_biclique(m, n, p, state_budget=state_budget)
            except BudgetExceededError as err:
                rows.append(SweepRow(m, n, None, None, skipped=True, note=str(err)))
                continue
            if count == 0:
                bound_text = "0.0000"
            else:
                bound_text = lower_bound_from_count(count, total).text
            row = SweepRow(m, n, count, bound_text)
            rows.append(row)
            if count > 0 and (
                best is None
                or compare_powers(
                    count,
                    Fraction(1, total),
                    best.count,
                    Fraction(1, best.vertices),
                )
                > 0
            ):
                best = row
    return rows, best
