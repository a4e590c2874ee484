"""Tests for exact coloring counts: frozen values, engine agreement, laws."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starfree.counting import brute_force_count, count_star_free
from starfree.errors import BudgetExceededError
from starfree.graphs import (
    Graph,
    complete_bipartite,
    disjoint_union,
    lemma1_step,
)
from starfree.params import ForbidParams
from starfree.shearer import g_edge

P23 = ForbidParams(2, 3)
P24 = ForbidParams(2, 4)
P33 = ForbidParams(3, 3)

TRIANGLE = Graph(3, ((0, 1), (1, 2), (0, 2)))
PATH3 = Graph(3, ((0, 1), (1, 2)))
C4 = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))

FROZEN_COUNTS = [
    (Graph(2, ((0, 1),)), ForbidParams(2, 3), 2),
    (Graph(2, ((0, 1),)), ForbidParams(3, 3), 3),
    (Graph(3, ()), ForbidParams(2, 3), 1),
    (PATH3, ForbidParams(2, 3), 4),
    (TRIANGLE, ForbidParams(2, 2), 0),
    (TRIANGLE, ForbidParams(3, 2), 6),
    (complete_bipartite(1, 3), ForbidParams(2, 3), 6),
    (C4, ForbidParams(2, 3), 16),
    (complete_bipartite(3, 3), ForbidParams(2, 3), 102),
    (complete_bipartite(4, 4), ForbidParams(2, 3), 90),
    (complete_bipartite(1, 5), ForbidParams(2, 3), 0),
    (disjoint_union(complete_bipartite(1, 3), complete_bipartite(2, 2)),
     ForbidParams(2, 3), 96),
]


@pytest.mark.parametrize("g,p,expected", FROZEN_COUNTS)
def test_frozen_counts_both_engines(g, p, expected):
    back = count_star_free(g, p)
    brute = brute_force_count(g, p)
    assert back.count == expected
    assert brute.count == expected
    assert back.engine == "backtrack"
    assert brute.engine == "brute"
    assert back.graph_summary == (g.vertex_count, g.edge_count, g.max_degree)
    assert back.params == p and brute.params == p
    assert back.elapsed >= 0 and brute.elapsed >= 0


def test_frozen_k55_count():
    g = complete_bipartite(5, 5)
    assert count_star_free(g, P24).count == 384080
    assert brute_force_count(g, P24).count == 384080


def _random_graph(rng: random.Random, max_vertices: int, max_edges: int) -> Graph:
    n = rng.randint(2, max_vertices)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = rng.randint(0, min(max_edges, len(pool)))
    return Graph(n, tuple(rng.sample(pool, m)))


def _random_capped_graph(
    rng: random.Random, max_vertices: int, max_edges: int, cap: int
) -> Graph:
    n = rng.randint(2, max_vertices)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pool)
    degs = [0] * n
    edges = []
    for u, v in pool:
        if len(edges) == max_edges:
            break
        if degs[u] < cap and degs[v] < cap:
            edges.append((u, v))
            degs[u] += 1
            degs[v] += 1
    return Graph(n, tuple(edges))


def test_engines_agree_on_random_graphs():
    rng = random.Random(97)
    for _ in range(40):
        g = _random_graph(rng, 8, 18)
        p = ForbidParams(2, rng.choice((3, 4)))
        back = count_star_free(g, p).count
        brute = brute_force_count(g, p).count
        assert back == brute
        assert 0 <= back <= p.r**g.edge_count
    for _ in range(40):
        g = _random_graph(rng, 7, 11)
        back = count_star_free(g, P33).count
        assert back == brute_force_count(g, P33).count


def test_union_multiplicativity():
    rng = random.Random(241)
    for _ in range(50):
        g1 = _random_graph(rng, 5, 8)
        g2 = _random_graph(rng, 5, 8)
        u = disjoint_union(g1, g2)
        c1 = brute_force_count(g1, P23).count
        c2 = brute_force_count(g2, P23).count
        assert brute_force_count(u, P23).count == c1 * c2
        assert count_star_free(u, P23).count == c1 * c2


def test_rewrite_steps_never_lose_colorings():
    # both rewrite rules may only grow the count, all the way to the fixpoint
    rng = random.Random(5081)
    p = P23
    for _ in range(100):
        g = _random_graph(rng, 6, 12)
        count = brute_force_count(g, p).count
        while (step := lemma1_step(g, p)) is not None:
            g = step[0]
            nxt = brute_force_count(g, p).count
            assert nxt >= count, f"{step[1]} lost colorings"
            count = nxt
        assert g.max_degree <= p.max_useful_degree or g.edge_count == 0


@pytest.mark.parametrize("p", [P23, P24, P33], ids=["r2t3", "r2t4", "r3t3"])
def test_count_power_dominated_by_edge_weights(p):
    rng = random.Random(1000 * p.r + p.t)
    for _ in range(40):
        g = _random_capped_graph(rng, 7, 12, p.max_useful_degree)
        count = brute_force_count(g, p).count
        degs = g.degrees()
        product = Fraction(1)
        for u, v in g.sorted_edges():
            product *= g_edge(p, degs[u], degs[v])
        assert Fraction(count) ** p.k <= product


def test_zero_once_degree_passes_capacity():
    spiked = complete_bipartite(1, 5)
    assert count_star_free(spiked, P23).count == 0
    assert brute_force_count(spiked, P23).count == 0
    wide = complete_bipartite(1, 7)
    assert count_star_free(wide, P24).count == 0


def test_worker_split_matches_serial():
    g = complete_bipartite(4, 4)
    serial = count_star_free(g, P23, workers=1)
    split = count_star_free(g, P23, workers=4)
    assert serial.count == split.count == 90


def test_thread_cap_env(monkeypatch):
    g = complete_bipartite(3, 3)
    monkeypatch.setenv("STARFREE_THREADS", "1")
    assert count_star_free(g, P23, workers=8).count == 102
    monkeypatch.setenv("STARFREE_THREADS", "zebra")
    with pytest.raises(ValueError, match="STARFREE_THREADS"):
        count_star_free(g, P23, workers=8)


def test_budget_errors():
    with pytest.raises(BudgetExceededError, match="49 edges exceed the backtracking"):
        count_star_free(complete_bipartite(7, 7), P23)
    with pytest.raises(BudgetExceededError, match=r"3\^36 colorings exceed"):
        brute_force_count(complete_bipartite(6, 6), ForbidParams(3, 3))
    with pytest.raises(BudgetExceededError, match=r"2\^4 colorings exceed"):
        brute_force_count(C4, P23, budget=8)


@given(
    data=st.data(),
    r=st.integers(min_value=2, max_value=3),
    t=st.integers(min_value=2, max_value=4),
)
@settings(max_examples=75, deadline=None)
def test_engines_agree_property(data, r, t):
    n = data.draw(st.integers(min_value=2, max_value=5))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.sets(st.sampled_from(pool), max_size=len(pool)))
    g = Graph(n, tuple(edges))
    p = ForbidParams(r, t)
    count = count_star_free(g, p).count
    assert count == brute_force_count(g, p).count
    assert 0 <= count <= r**g.edge_count
