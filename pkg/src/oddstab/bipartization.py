"""Exact vertex and edge bipartization numbers.

``d2`` is the minimum number of vertices (an odd cycle transversal) and ``gamma2`` the
minimum number of edges whose removal leaves a bipartite graph; ``gamma2 = m - maxcut``.
The ``*_bruteforce`` functions are subset-enumeration oracles for testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from ._bits import to_mask
from .graph import Graph, two_color
from .parity import shortest_odd_cycle_masked

MAXCUT_LIMIT = 26
OCT_BRUTEFORCE_LIMIT = 14
EDGE_BRUTEFORCE_LIMIT = 20


@dataclass(frozen=True)
class SolverResult:
    value: int
    witness: tuple  # deleted vertices (d2) or deleted edges (gamma2)
    residue_coloring: tuple[int, ...]  # 1/2 per vertex, 0 for deleted vertices
    exact: bool = True

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": [list(w) if isinstance(w, tuple) else w for w in self.witness],
            "residue_coloring": list(self.residue_coloring),
            "exact": self.exact,
        }


def _coloring(adj, n: int, alive: int) -> tuple[int, ...]:
    res = two_color(adj, alive)
    if res[0] is None:
        raise RuntimeError("residue is not bipartite")
    s1 = res[0]
    return tuple(0 if not alive >> v & 1 else (1 if s1 >> v & 1 else 2) for v in range(n))


# -- odd cycle transversal ---------------------------------------------------------


class _OctSearch:
    """Bounded search tree: some vertex of a shortest odd cycle must be deleted."""

    def __init__(self, adj):
        self.adj = adj
        self.failed: dict[int, int] = {}  # alive mask -> largest budget known to fail

    def packing_bound(self, alive: int) -> int:
        count = 0
        while True:
            cyc = shortest_odd_cycle_masked(self.adj, alive)
            if cyc is None:
                return count
            count += 1
            alive &= ~to_mask(cyc)

    def solve(self, alive: int, budget: int) -> list[int] | None:
        if self.failed.get(alive, -1) >= budget:
            return None
        cyc = shortest_odd_cycle_masked(self.adj, alive)
        if cyc is None:
            return []
        if budget > 0 and self.packing_bound(alive) <= budget:
            for v in sorted(cyc):
                sub = self.solve(alive & ~(1 << v), budget - 1)
                if sub is not None:
                    return [v] + sub
        self.failed[alive] = max(budget, self.failed.get(alive, -1))
        return None


def oct_exact(g: Graph, budget: int | None = None) -> SolverResult | None:
    """Minimum odd cycle transversal; None when it exceeds ``budget``.

    The witness is the lexicographically smallest optimal vertex set.
    """
    full = g.all_vertices
    search = _OctSearch(g.adj)
    top = g.n if budget is None else min(budget, g.n)
    opt = None
    for t in range(search.packing_bound(full), top + 1):
        if search.solve(full, t) is not None:
            opt = t
            break
    if opt is None:
        return None
    chosen: list[int] = []
    alive = full
    for v in range(g.n):
        if len(chosen) == opt:
            break
        if search.solve(alive & ~(1 << v), opt - len(chosen) - 1) is not None:
            chosen.append(v)
            alive &= ~(1 << v)
    return SolverResult(opt, tuple(chosen), _coloring(g.adj, g.n, alive))


def oct_bruteforce(g: Graph) -> SolverResult:
    """Smallest vertex set (lexicographically first) whose deletion is bipartite."""
    if g.n > OCT_BRUTEFORCE_LIMIT:
        raise ValueError(f"oct_bruteforce is limited to n <= {OCT_BRUTEFORCE_LIMIT}, got {g.n}")
    full = g.all_vertices
    for t in range(g.n + 1):
        for T in combinations(range(g.n), t):
            alive = full & ~to_mask(T)
            if two_color(g.adj, alive)[0] is not None:
                return SolverResult(t, T, _coloring(g.adj, g.n, alive))
    raise AssertionError("unreachable: deleting every vertex leaves a bipartite graph")


# -- max cut / edge bipartization -----------------------------------------------------


def maxcut_exact(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum cut by exhaustive enumeration; returns (value, sides) with sides in {1, 2}.

    Vertex 0 is fixed on side 1. The cut values of all 2**(n-1) bipartitions are built
    vertex by vertex: adding vertex v to side 1 gains its lower neighbours on side 2 and
    vice versa, which numpy evaluates for all partial assignments at once.
    """
    n = g.n
    if n > MAXCUT_LIMIT:
        raise ValueError(f"maxcut_exact is limited to n <= {MAXCUT_LIMIT}, got {n}")
    if n <= 1:
        return 0, (1,) * n
    cut = np.zeros(1, dtype=np.int16)
    for v in range(1, n):
        low = g.adj[v] & ((1 << v) - 1)
        deg_low = low.bit_count()
        # bit (i - 1) of a state index is vertex i's side (1 = side 2)
        on_side2 = np.bitwise_count(np.arange(cut.size, dtype=np.uint32) & np.uint32(low >> 1))
        on_side2 = on_side2.astype(np.int16)
        cut = np.concatenate((cut + on_side2, cut + (deg_low - on_side2)))
    best = int(cut.max())
    idx = int(np.argmax(cut))
    sides = (1,) + tuple(2 if idx >> (i - 1) & 1 else 1 for i in range(1, n))
    return best, sides


def _non_crossing(g: Graph, sides: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u, v in g.edges() if sides[u] == sides[v])


def _minus_edges(adj, edges: Iterable[tuple[int, int]]) -> list[int]:
    adj = list(adj)
    for u, v in edges:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return adj


def suspension_gamma2_bound(g: Graph, parts: Iterable[Iterable[int]]) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Sum over the given vertex sets of e(G[S]) - maxcut(G[S]), with the deleted edges.

    Deleting these edges makes a graph bipartite when the sets are the suspensions of a
    decomposition over a bipartite base.
    """
    total = 0
    deleted: list[tuple[int, int]] = []
    for part in parts:
        sub = g.induced(sorted(part))
        if sub.graph.m == 0:
            continue
        if sub.graph.n <= MAXCUT_LIMIT:
            value, sides = maxcut_exact(sub.graph)
        else:
            value, sides = local_search_cut(sub.graph)
        total += sub.graph.m - value
        deleted += [(sub.vertices[u], sub.vertices[v]) for u, v in _non_crossing(sub.graph, sides)]
    return total, tuple(sorted(deleted))


def local_search_cut(g: Graph) -> tuple[int, tuple[int, ...]]:
    """A locally optimal cut (every vertex has at least half its edges crossing).

    Used only for oversized suspensions, where it still yields a valid upper bound.
    """
    side = [1 + (v & 1) for v in range(g.n)]
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            same = sum(1 for w in g.neighbors(v) if side[w] == side[v])
            if 2 * same > g.degree(v):
                side[v] = 3 - side[v]
                improved = True
    value = sum(1 for u, v in g.edges() if side[u] != side[v])
    return value, tuple(side)


def edge_bipartization(g: Graph, decomposition=None) -> SolverResult:
    """Minimum number of edges whose deletion leaves ``g`` bipartite.

    Graphs with at most 26 vertices are solved exactly through max cut. Larger graphs
    need a verified suspension decomposition; the result is then the per-suspension
    bound (``exact=False``).
    """
    if g.n <= MAXCUT_LIMIT:
        value, sides = maxcut_exact(g)
        return SolverResult(g.m - value, _non_crossing(g, sides), sides)
    if decomposition is None:
        raise ValueError(f"n={g.n} exceeds the exact max-cut limit {MAXCUT_LIMIT}; supply a decomposition")
    value, deleted = suspension_gamma2_bound(g, (s.vertices for s in decomposition.suspensions))
    adj = _minus_edges(g.adj, deleted)
    return SolverResult(value, deleted, _coloring(adj, g.n, g.all_vertices), exact=False)


def edge_bipartization_bruteforce(g: Graph) -> SolverResult:
    """Smallest edge set (lexicographically first) whose deletion is bipartite."""
    if g.m > EDGE_BRUTEFORCE_LIMIT:
        raise ValueError(f"edge_bipartization_bruteforce is limited to m <= {EDGE_BRUTEFORCE_LIMIT}, got {g.m}")
    edges = list(g.edges())
    full = g.all_vertices
    for t in range(len(edges) + 1):
        for E in combinations(edges, t):
            adj = _minus_edges(g.adj, E)
            if two_color(adj, full)[0] is not None:
                return SolverResult(t, E, _coloring(adj, g.n, full))
    raise AssertionError("unreachable: the edgeless graph is bipartite")


def is_transversal(g: Graph, vertices: Iterable[int]) -> bool:
    return two_color(g.adj, g.all_vertices & ~to_mask(vertices))[0] is not None


def is_edge_bipartizer(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    return two_color(_minus_edges(g.adj, edges), g.all_vertices)[0] is not None


__all__ = [
    "SolverResult", "oct_exact", "oct_bruteforce", "maxcut_exact", "edge_bipartization",
    "edge_bipartization_bruteforce", "suspension_gamma2_bound", "is_transversal",
    "is_edge_bipartizer", "local_search_cut",
]
