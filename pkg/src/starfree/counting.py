"""Exact counts of admissible colorings for arbitrary small graphs.

Two engines: a pruned depth-first counter over edges (the workhorse) and a
vectorized full enumeration (the oracle the tests trust).  Both return the
same numbers by construction of the tests, not by sharing code.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .graphs import Graph
from .params import ForbidParams

__all__ = [
    "DEFAULT_EDGE_BUDGET",
    "DEFAULT_BRUTE_BUDGET",
    "CountResult",
    "count_star_free",
    "brute_force_count",
    "effective_workers",
]

DEFAULT_EDGE_BUDGET = 40
DEFAULT_BRUTE_BUDGET = 2**34

_CHUNK = 1 << 20


@dataclass(frozen=True)
class CountResult:
    """An exact count plus how it was obtained.

    graph_summary is (vertex_count, edge_count, max_degree); engine is one
    of "backtrack", "brute", "dp"; elapsed is wall-clock seconds.
    """

    graph_summary: tuple[int, int, int]
    params: ForbidParams
    count: int
    engine: str
    elapsed: float


def effective_workers(requested: int) -> int:
    """Requested worker count, capped by the STARFREE_THREADS variable."""
    env = os.environ.get("STARFREE_THREADS")
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            raise ValueError(f"STARFREE_THREADS must be an integer, got {env!r}") from None
        requested = min(requested, cap)
    return max(1, requested)


def _ordered_edges(g: Graph) -> list[tuple[int, int]]:
    # edges whose both endpoints are busy come first: earlier pruning
    degs = g.degrees()
    return sorted(g.edges, key=lambda e: (-min(degs[e[0]], degs[e[1]]), e))


def _count_suffix(
    edges: list[tuple[int, int]], n: int, r: int, cap: int, prefix: tuple[int, ...]
) -> int:
    """Count completions of the colors in prefix (applied to edges[:len(prefix)])."""
    counts = [[0] * r for _ in range(n)]
    for (u, v), c in zip(edges, prefix):
        counts[u][c] += 1
        counts[v][c] += 1
    m = len(edges)

    def rec(i: int) -> int:
        if i == m:
            return 1
        u, v = edges[i]
        cu, cv = counts[u], counts[v]
        total = 0
        for c in range(r):
            if cu[c] < cap and cv[c] < cap:
                cu[c] += 1
                cv[c] += 1
                total += rec(i + 1)
                cu[c] -= 1
                cv[c] -= 1
        return total

    return rec(len(prefix))


def _feasible_prefixes(
    edges: list[tuple[int, int]], n: int, r: int, cap: int, depth: int
) -> list[tuple[int, ...]]:
    prefixes: list[tuple[int, ...]] = []
    counts = [[0] * r for _ in range(n)]
    stack: list[int] = []

    def rec(i: int) -> None:
        if i == depth:
            prefixes.append(tuple(stack))
            return
        u, v = edges[i]
        for c in range(r):
            if counts[u][c] < cap and counts[v][c] < cap:
                counts[u][c] += 1
                counts[v][c] += 1
                stack.append(c)
                rec(i + 1)
                stack.pop()
                counts[u][c] -= 1
                counts[v][c] -= 1

    rec(0)
    return prefixes


def count_star_free(
    g: Graph,
    p: ForbidParams,
    *,
    workers: int = 1,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
) -> CountResult:
    """Exact count by depth-first color assignment with per-vertex caps.

    A branch dies the moment some vertex has t edges of one color.  A vertex
    of degree above r(t-1) can never be completed (its edges outnumber what
    r colors absorb at t-1 each), so such graphs short-circuit to zero.
    """
    start = time.perf_counter()
    if g.edge_count > edge_budget:
        raise BudgetExceededError(
            f"{g.edge_count} edges exceed the backtracking budget {edge_budget}",
            size=g.edge_count,
        )
    workers = effective_workers(workers)
    if g.max_degree > p.degree_capacity:
        count = 0
    elif g.edge_count == 0:
        count = 1
    else:
        edges = _ordered_edges(g)
        n, r, cap = g.vertex_count, p.r, p.per_color_cap
        if workers == 1:
            count = _count_suffix(edges, n, r, cap, ())
        else:
            depth = 1
            while r**depth < workers and depth < len(edges):
                depth += 1
            prefixes = _feasible_prefixes(edges, n, r, cap, depth)
            count = 0
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [
                    pool.submit(_count_suffix, edges, n, r, cap, prefix)
                    for prefix in prefixes
                ]
                count = sum(f.result() for f in futures)
    elapsed = time.perf_counter() - start
    return CountResult(
        (g.vertex_count, g.edge_count, g.max_degree), p, count, "backtrack", elapsed
    )


def brute_force_count(
    g: Graph, p: ForbidParams, *, budget: int = DEFAULT_BRUTE_BUDGET
) -> CountResult:
    """Oracle: enumerate all r^|E| colorings and filter.

    Enumeration is vectorized (popcount over bitmasks for two colors, mixed
    radix otherwise) but unconditional: every coloring is generated and
    checked.
    """
    start = time.perf_counter()
    m = g.edge_count
    total = p.r**m
    if total > budget:
        raise BudgetExceededError(
            f"{p.r}^{m} colorings exceed the enumeration budget {budget}", size=total
        )
    if m == 0:
        count = 1
    elif p.r == 2:
        count = _brute_two_colors(g, p)
    else:
        count = _brute_mixed_radix(g, p)
    elapsed = time.perf_counter() - start
    return CountResult(
        (g.vertex_count, g.edge_count, g.max_degree), p, count, "brute", elapsed
    )


def _check_vertices(g: Graph, p: ForbidParams) -> list[tuple[int, list[int]]]:
    # a vertex with fewer than t edges cannot host t like-colored ones
    edges = g.sorted_edges()
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    return [(v, inc) for v, inc in enumerate(incident) if len(inc) >= p.t]


def _brute_two_colors(g: Graph, p: ForbidParams) -> int:
    m = g.edge_count
    cap = p.per_color_cap
    checks = []
    for _, inc in _check_vertices(g, p):
        mask = 0
        for i in inc:
            mask |= 1 << i
        checks.append((np.uint64(mask), len(inc)))
    count = 0
    for lo in range(0, 1 << m, _CHUNK):
        hi = min(lo + _CHUNK, 1 << m)
        codes = np.arange(lo, hi, dtype=np.uint64)
        ok = np.ones(hi - lo, dtype=bool)
        for mask, deg in checks:
            ones = np.bitwise_count(codes & mask)
            ok &= (ones <= cap) & (deg - ones <= cap)
        count += int(np.count_nonzero(ok))
    return count


def _brute_mixed_radix(g: Graph, p: ForbidParams) -> int:
    m, r, cap = g.edge_count, p.r, p.per_color_cap
    total = r**m
    checks = _check_vertices(g, p)
    place = [r**i for i in range(m)]
    count = 0
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        codes = np.arange(lo, hi, dtype=np.int64)
        cols = [(codes // place[i]) % r for i in range(m)]
        ok = np.ones(hi - lo, dtype=bool)
        for _, inc in checks:
            for c in range(r):
                uses = np.zeros(hi - lo, dtype=np.int16)
                for i in inc:
                    uses += cols[i] == c
                ok &= uses <= cap
        count += int(np.count_nonzero(ok))
    return count
