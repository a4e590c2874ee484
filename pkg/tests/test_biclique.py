"""Tests for the complete-bipartite profile DP and the lower-bound sweep."""

from __future__ import annotations

from decimal import Decimal

import pytest

from starfree.biclique import (
    SweepRow,
    count_biclique,
    count_biclique_ordered,
    lower_bound_from_count,
    sweep_lower_bounds,
)
from starfree.counting import brute_force_count
from starfree.errors import BudgetExceededError
from starfree.graphs import complete_bipartite
from starfree.params import ForbidParams
from starfree.shearer import upper_bound_b

P23 = ForbidParams(2, 3)
P24 = ForbidParams(2, 4)
P33 = ForbidParams(3, 3)


def test_frozen_biclique_counts():
    assert count_biclique(1, 1, P23) == 2
    assert count_biclique(1, 1, P33) == 3
    assert count_biclique(2, 2, P23) == 16
    assert count_biclique(3, 2, P23) == 36
    assert count_biclique(3, 3, P23) == 102
    assert count_biclique(4, 4, P23) == 90
    assert count_biclique(5, 1, P23) == 0
    assert count_biclique(5, 5, P24) == 384080


def test_side_swap_symmetry():
    for m in range(1, 5):
        for n in range(1, 5):
            for p in (P23, P33):
                assert count_biclique(m, n, p) == count_biclique(n, m, p)


def test_ordered_variant_agrees():
    for p in (P23, P24, P33, ForbidParams(3, 2)):
        for m in range(1, 5):
            for n in range(1, 4):
                assert count_biclique(m, n, p) == count_biclique_ordered(m, n, p)


def test_dp_matches_brute_force():
    for p in (P23, P24):
        for m in range(1, 7):
            for n in range(1, m + 1):
                if m * n > 12:
                    continue
                dp = count_biclique(m, n, p)
                brute = brute_force_count(complete_bipartite(m, n), p).count
                assert dp == brute, f"K_{{{m},{n}}} at {p}"
    for m in range(1, 5):
        for n in range(1, m + 1):
            if m * n > 9:
                continue
            dp = count_biclique(m, n, P33)
            assert dp == brute_force_count(complete_bipartite(m, n), P33).count


def test_monotone_in_star_size():
    for m in range(1, 5):
        for n in range(1, m + 1):
            for t in (2, 3, 4):
                assert count_biclique(m, n, ForbidParams(2, t)) <= count_biclique(
                    m, n, ForbidParams(2, t + 1)
                )


def test_rejects_empty_sides():
    with pytest.raises(ValueError, match="at least one vertex"):
        count_biclique(0, 3, P23)
    with pytest.raises(ValueError, match="at least one vertex"):
        count_biclique_ordered(2, 0, P23)


def test_state_budget():
    with pytest.raises(BudgetExceededError, match="exceed the budget 1"):
        count_biclique(2, 2, P23, state_budget=1)
    with pytest.raises(BudgetExceededError, match="reachable states"):
        count_biclique_ordered(3, 3, P24, state_budget=2)


def test_state_budget_env(monkeypatch):
    monkeypatch.setenv("STARFREE_STATE_BUDGET", "1")
    with pytest.raises(BudgetExceededError):
        count_biclique(2, 2, P23)
    monkeypatch.setenv("STARFREE_STATE_BUDGET", "frog")
    with pytest.raises(ValueError, match="STARFREE_STATE_BUDGET"):
        count_biclique(2, 2, P23)
    # an explicit budget wins over the environment
    assert count_biclique(2, 2, P23, state_budget=100) == 16


def test_lower_bound_from_count():
    assert lower_bound_from_count(102, 6).text == "2.1616"
    assert lower_bound_from_count(384080, 10).text == "3.6178"
    assert lower_bound_from_count(16, 4).text == "2.0000"
    assert lower_bound_from_count(1, 3).text == "1.0000"
    with pytest.raises(ValueError, match="no lower bound"):
        lower_bound_from_count(0, 6)
    with pytest.raises(ValueError, match="at least one vertex"):
        lower_bound_from_count(5, 0)


def test_sweep_rows_frozen():
    rows, best = sweep_lower_bounds(P23, 6)
    assert [(row.m, row.n) for row in rows] == [
        (1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (3, 3), (4, 2), (5, 1),
    ]
    assert [row.bound for row in rows] == [
        "1.4142", "1.5874", "2.0000", "1.5651", "2.0477", "1.4310",
        "2.1616", "1.8171", "0.0000",
    ]
    assert not any(row.skipped for row in rows)
    assert best == rows[6]
    assert (best.m, best.n, best.count, best.bound) == (3, 3, 102, "2.1616")
    assert best.vertices == 6


def test_sweep_row_order_is_total_then_m():
    rows, _ = sweep_lower_bounds(P24, 7)
    keys = [(row.vertices, row.m) for row in rows]
    assert keys == sorted(keys)


def test_sweep_with_budget_skips():
    rows, best = sweep_lower_bounds(P23, 4, state_budget=3)
    assert [(row.m, row.n, row.skipped) for row in rows] == [
        (1, 1, False), (2, 1, False), (2, 2, True), (3, 1, False),
    ]
    skipped = rows[2]
    assert skipped.count is None and skipped.bound is None
    assert "exceed the budget" in skipped.note
    assert (best.m, best.n, best.bound) == (2, 1, "1.5874")


def test_sweep_all_skipped_leaves_no_best():
    rows, best = sweep_lower_bounds(P24, 5, state_budget=1)
    assert rows and all(row.skipped for row in rows)
    assert best is None


def test_sweep_precondition():
    with pytest.raises(ValueError, match="room for at least"):
        sweep_lower_bounds(P23, 1)


def test_sweep_row_is_plain_data():
    row = SweepRow(3, 3, 102, "2.1616")
    assert row.vertices == 6
    assert not row.skipped and row.note == ""


def test_sweep_best_stays_below_upper_bound():
    for p, max_vertices in ((P23, 6), (P24, 8), (P33, 6)):
        _, best = sweep_lower_bounds(p, max_vertices)
        upper = upper_bound_b(p, digits=10)
        assert Decimal(best.bound) < Decimal(upper.value)
