"""Tests for the star weight f(a): frozen tables, route agreement, growth laws."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starfree.errors import BudgetExceededError
from starfree.params import ForbidParams
from starfree.starcounts import (
    f_star,
    f_star_brute,
    f_star_t3_closed,
    f_star_t3_profile_sum,
    f_star_two_colors,
)

# Values checked by hand against the color-distribution recurrence.
FROZEN_TABLES = {
    (2, 3): [1, 2, 3, 3, 0],
    (2, 4): [1, 2, 4, 7, 10, 10, 0],
    (3, 3): [1, 3, 8, 18, 30, 30, 0],
}


@pytest.mark.parametrize("key", sorted(FROZEN_TABLES))
def test_frozen_tables(key):
    r, t = key
    p = ForbidParams(r, t)
    table = FROZEN_TABLES[key]
    assert len(table) == p.degree_capacity + 1
    for a, expected in enumerate(table, start=1):
        assert f_star(p, a) == expected, f"f({a}) at (r={r}, t={t})"


def test_frozen_spot_values():
    assert f_star(ForbidParams(2, 5), 5) == 15
    assert f_star(ForbidParams(4, 3), 6) == 360
    assert f_star_t3_closed(11, 21) == 49893498214560000


def test_small_stars_are_unconstrained():
    # with a <= t-1 edges no color can reach t uses
    for r in range(2, 6):
        for t in range(2, 6):
            p = ForbidParams(r, t)
            for a in range(1, t):
                assert f_star(p, a) == r ** (a - 1)


def test_zero_exactly_beyond_capacity():
    for r in range(2, 6):
        for t in range(2, 5):
            p = ForbidParams(r, t)
            cap = p.degree_capacity
            assert f_star(p, cap) > 0
            assert f_star(p, cap + 1) == 0
            assert f_star(p, cap + 7) == 0


def test_brute_force_agreement():
    for r in range(2, 5):
        for t in range(2, 5):
            p = ForbidParams(r, t)
            for a in range(1, min(p.degree_capacity + 2, 11)):
                assert f_star(p, a) == f_star_brute(p, a)


@pytest.mark.parametrize("t", range(3, 7))
def test_two_color_binomial_sum(t):
    p = ForbidParams(2, t)
    for a in range(1, p.degree_capacity + 3):
        assert f_star_two_colors(t, a) == f_star(p, a)


@pytest.mark.parametrize("r", range(2, 9))
def test_t3_closed_and_profile_routes(r):
    p = ForbidParams(r, 3)
    for a in range(max(1, 2 * r - 3), 2 * r):
        dp = f_star(p, a)
        assert f_star_t3_closed(r, a) == dp
        assert f_star_t3_profile_sum(r, a) == dp
    # the profile sum holds over the whole range, not just the top
    for a in range(1, 2 * r):
        assert f_star_t3_profile_sum(r, a) == f_star(p, a)


def test_t3_closed_form_domain():
    with pytest.raises(ValueError, match="no closed form"):
        f_star_t3_closed(4, 3)
    with pytest.raises(ValueError, match="two colors"):
        f_star_t3_closed(1, 1)


def test_rejects_empty_star():
    p = ForbidParams(2, 3)
    for fn in (lambda a: f_star(p, a), lambda a: f_star_brute(p, a)):
        with pytest.raises(ValueError, match="fixed edge"):
            fn(0)
    with pytest.raises(ValueError, match="fixed edge"):
        f_star_two_colors(3, 0)
    with pytest.raises(ValueError, match="fixed edge"):
        f_star_t3_profile_sum(2, -1)
    with pytest.raises(ValueError, match="star size"):
        f_star_two_colors(1, 3)
    with pytest.raises(ValueError, match="two colors"):
        f_star_t3_profile_sum(1, 2)


def test_brute_force_budget():
    with pytest.raises(BudgetExceededError, match="enumeration budget"):
        f_star_brute(ForbidParams(2, 3), 30, budget=100)


@given(
    r=st.integers(min_value=2, max_value=5),
    t=st.integers(min_value=2, max_value=6),
    a=st.integers(min_value=1, max_value=12),
)
@settings(max_examples=200, deadline=None)
def test_bounded_by_free_assignments(r, t, a):
    value = f_star(ForbidParams(r, t), a)
    assert 0 <= value <= r ** (a - 1)


@given(
    r=st.integers(min_value=2, max_value=5),
    t=st.integers(min_value=2, max_value=6),
    a=st.integers(min_value=1, max_value=12),
)
@settings(max_examples=200, deadline=None)
def test_monotone_in_parameters(r, t, a):
    value = f_star(ForbidParams(r, t), a)
    assert value <= f_star(ForbidParams(r, t + 1), a)
    assert value <= f_star(ForbidParams(r + 1, t), a)
