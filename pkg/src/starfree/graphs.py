"""Small simple graphs plus the degree rewrites used by the bound machinery.

Graphs are immutable values: at most 64 vertices, edges stored as a frozen
set of normalized pairs.  The two rewrites are the degree-preserving edge
switch and the reduce loop that caps every degree at r(t-1)-1 while gluing
low-degree vertices into a clique; both never decrease the number of
admissible colorings, which the exact-count tests check directly.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .params import ForbidParams

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "DegreeProfile",
    "complete_bipartite",
    "disjoint_union",
    "degree_profile",
    "star_turan",
    "ab_switch",
    "lemma1_step",
    "lemma1_reduce",
    "format_graph",
    "parse_graph",
    "parse_graph_spec",
]

MAX_VERTICES = 64

Edge = tuple[int, int]


def _normalize_edge(e) -> Edge:
    try:
        u, v = e
    except (TypeError, ValueError):
        raise ValueError(f"edge must be a pair of vertices, got {e!r}") from None
    if not isinstance(u, int) or not isinstance(v, int):
        raise ValueError(f"edge endpoints must be integers, got {e!r}")
    if u == v:
        raise ValueError(f"loop at vertex {u} not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"vertex count must be a nonnegative integer, got {n!r}")
        if n > MAX_VERTICES:
            raise ValueError(f"{n} vertices exceed the supported maximum {MAX_VERTICES}")
        normalized = frozenset(_normalize_edge(e) for e in self.edges)
        for u, v in normalized:
            if not 0 <= u < v < n:
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
        object.__setattr__(self, "edges", normalized)

    @cached_property
    def _adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge((u, v)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.vertex_count, self.edges | {_normalize_edge((u, v))})

    def without_edge(self, u: int, v: int) -> "Graph":
        e = _normalize_edge((u, v))
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.vertex_count, self.edges - {e})


@dataclass(frozen=True, eq=True)
class DegreeProfile:
    """Degree tallies: v[a] vertices of degree a, m[(a,b)] edges with
    endpoint degrees a <= b, and the maximum degree."""

    v: dict[int, int]
    m: dict[tuple[int, int], int]
    max_degree: int


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: left vertices 0..m-1 (degree n), right m..m+n-1 (degree m)."""
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    if m + n > MAX_VERTICES:
        raise ValueError(f"{m}+{n} vertices exceed the supported maximum {MAX_VERTICES}")
    edges = frozenset((i, m + j) for i in range(m) for j in range(n))
    return Graph(m + n, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertex-disjoint union, with g2's vertices shifted past g1's."""
    n = g1.vertex_count + g2.vertex_count
    if n > MAX_VERTICES:
        raise ValueError(f"{n} vertices exceed the supported maximum {MAX_VERTICES}")
    shift = g1.vertex_count
    edges = set(g1.edges)
    edges.update((u + shift, v + shift) for u, v in g2.edges)
    return Graph(n, frozenset(edges))


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    v = Counter(degs)
    m = Counter()
    for a, b in g.edges:
        da, db = degs[a], degs[b]
        m[(da, db) if da <= db else (db, da)] += 1
    return DegreeProfile(dict(v), dict(m), max(degs, default=0))


def star_turan(n: int, t: int) -> int:
    """Most edges of an n-vertex graph with max degree t-1: floor((t-1)n/2)."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if t < 2:
        raise ValueError("star size must be at least 2")
    return (t - 1) * n // 2


def ab_switch(g: Graph, e: Edge, f: Edge) -> Graph:
    """Replace edges uv, xy by ux, vy; every vertex keeps its degree.

    The pairs are taken in the given orientation: u is matched with x
    (equal degrees required) and v with y.
    """
    u, v = e
    x, y = f
    if len({u, v, x, y}) != 4:
        raise ValueError(f"switch needs four distinct endpoints, got {e} and {f}")
    for edge in (e, f):
        if not g.has_edge(*edge):
            raise ValueError(f"{edge} is not an edge of the graph")
    if g.degree(u) != g.degree(x):
        raise ValueError(
            f"degree mismatch: deg({u})={g.degree(u)} but deg({x})={g.degree(x)}"
        )
    if g.degree(v) != g.degree(y):
        raise ValueError(
            f"degree mismatch: deg({v})={g.degree(v)} but deg({y})={g.degree(y)}"
        )
    if g.has_edge(u, x):
        raise ValueError(f"({u},{x}) is already an edge")
    if g.has_edge(v, y):
        raise ValueError(f"({v},{y}) is already an edge")
    edges = set(g.edges)
    edges.discard(_normalize_edge(e))
    edges.discard(_normalize_edge(f))
    edges.add(_normalize_edge((u, x)))
    edges.add(_normalize_edge((v, y)))
    return Graph(g.vertex_count, frozenset(edges))


def lemma1_step(g: Graph, p: ForbidParams) -> tuple[Graph, tuple[str, Edge]] | None:
    """One count-non-decreasing rewrite, or None at a fixpoint.

    Rule one deletes an edge at a vertex of degree >= r(t-1); rule two adds
    an edge between two nonadjacent vertices of degree < ceil(r/2)*(t-1).
    Ties go to the lowest vertex index (then lowest neighbor index).
    """
    degs = g.degrees()
    for v in range(g.vertex_count):
        if degs[v] >= p.degree_capacity:
            u = min(g.neighbors(v))
            edge = _normalize_edge((v, u))
            return g.without_edge(*edge), ("delete", edge)
    low = [v for v in range(g.vertex_count) if degs[v] < p.low_degree_threshold]
    for u, v in itertools.combinations(low, 2):
        if not g.has_edge(u, v):
            return g.with_edge(u, v), ("add", (u, v))
    return None


def lemma1_reduce(g: Graph, p: ForbidParams) -> Graph:
    """Apply lemma1_step until no rule fires.

    The result has max degree <= r(t-1)-1 and its low-degree vertices form
    a clique.  Terminates: deletions strictly shrink the set of over-cap
    vertices and additions never re-create one (the new degrees stay below
    the cap), after which additions strictly shrink the nonadjacent
    low-degree pairs.
    """
    while (step := lemma1_step(g, p)) is not None:
        g = step[0]
    return g


def format_graph(g: Graph) -> str:
    """Text form: a "n m" header line, then one "u v" line per edge."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the text form; '#' starts a comment, blank lines are skipped."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ValueError("no data lines: expected a 'n m' header")
    header_line, header = rows[0]
    if len(header) != 2:
        raise ValueError(f"line {header_line}: header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"line {header_line}: header must hold two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header promises {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: edge endpoints must be integers") from None
        if not 0 <= u < v < n:
            raise ValueError(f"line {lineno}: edge ({u},{v}) violates 0 <= u < v < {n}")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise ValueError("repeated edge in input")
    return Graph(n, frozenset(edges))


def parse_graph_spec(spec: str) -> Graph:
    """Build a graph from a generator string.

    Forms: "kbip:M,N" for K_{M,N}; "union:<spec>+<spec>" for disjoint
    unions (further '+' parts fold left); "file:<path>" to read the text
    format from disk.
    """
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"graph spec {spec!r} needs a 'kind:' prefix (kbip, union, file)")
    if kind == "kbip":
        try:
            m_str, n_str = rest.split(",")
            return complete_bipartite(int(m_str), int(n_str))
        except ValueError as err:
            raise ValueError(f"bad kbip spec {rest!r}: expected 'M,N'") from err
    if kind == "union":
        parts = rest.split("+")
        if len(parts) < 2:
            raise ValueError(f"union spec needs at least two '+'-separated parts, got {rest!r}")
        graphs = [parse_graph_spec(part) for part in parts]
        result = graphs[0]
        for other in graphs[1:]:
            result = disjoint_union(result, other)
        return result
    if kind == "file":
        return parse_graph(Path(rest).read_text(encoding="utf-8"))
    raise ValueError(f"unknown graph spec kind {kind!r}")
