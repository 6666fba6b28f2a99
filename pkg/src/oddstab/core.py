"""Strong-2k-cores: verification, greedy growth, and the common-neighbourhood check.

A vertex set S is a (weak) 2k-core when every pair of distinct vertices of S is joined
inside G[S] by a simple path with an even number of vertices and at most 2k vertices;
it is *strong* when every pair is also joined by such a path with an odd number of
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ._bits import bfs_layers, iter_bits, lowest_bit, to_mask
from .graph import Graph, block_cut_tree, two_color
from .parity import OddCycleWitness, ParityPathFinder, PathWitness, cycle_through


@dataclass(frozen=True)
class CoreCertificate:
    vertices: tuple[int, ...]
    k: int
    strong: bool
    witnesses: dict[tuple[int, int], tuple[PathWitness, PathWitness | None]] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "k": self.k,
            "strong": self.strong,
            "witnesses": [
                {"pair": [x, y], "even": ev.to_json(), "odd": od.to_json() if od else None}
                for (x, y), (ev, od) in sorted(self.witnesses.items())
            ],
        }


@dataclass(frozen=True)
class CoreFailure:
    """The lexicographically first pair lacking a witness, and the missing parity."""

    pair: tuple[int, int]
    missing: str  # "even" or "odd"

    def __bool__(self) -> bool:
        return False


class CorePreconditionError(ValueError):
    pass


def verify_core(g: Graph, S: Iterable[int], k: int, strong: bool = True) -> CoreCertificate | CoreFailure:
    """Check the (strong-)2k-core property of ``S`` with simple paths inside ``G[S]``.

    Returns a certificate holding one witness per pair and parity, or the first failing
    pair (pairs in lexicographic order, even parity checked before odd).
    """
    verts = tuple(sorted(set(S)))
    if not verts:
        raise ValueError("core vertex set must be nonempty")
    if k < 1:
        raise ValueError("k must be positive")
    finder = ParityPathFinder(g, to_mask(verts))
    wit = {}
    for x, y in combinations(verts, 2):
        ev = finder.find(x, y, True, 2 * k)
        if ev is None:
            return CoreFailure((x, y), "even")
        od = None
        if strong:
            od = finder.find(x, y, False, 2 * k)
            if od is None:
                return CoreFailure((x, y), "odd")
        wit[(x, y)] = (ev, od)
    return CoreCertificate(verts, k, strong, wit)


# -- growth ---------------------------------------------------------------------


@dataclass(frozen=True)
class Extension:
    rule: str  # "b-vertex", "b-path" or "a"
    anchors: tuple[int, ...]  # core vertices the path attaches to
    path: tuple[int, ...]


def _rule_b_vertex(adj, core: int, out: int) -> Extension | None:
    for u in iter_bits(out):
        hits = adj[u] & core
        if hits.bit_count() >= 2:
            return Extension("b-vertex", tuple(iter_bits(hits))[:2], (u,))
    return None


def _rule_b_path(adj, core: int, out: int, max_order: int) -> Extension | None:
    """Shortest path outside the core joining neighbours of two distinct core vertices."""
    best = None
    for x in iter_bits(core):
        ax = adj[x] & out
        if not ax:
            continue
        others = 0
        for y in iter_bits(core & ~(1 << x)):
            others |= adj[y]
        others &= out
        if not others:
            continue
        layers = bfs_layers(adj, ax, out)
        for d, layer in enumerate(layers[:max_order]):
            hit = layer & others
            if hit:
                if best is None or d + 1 < len(best[1]):
                    v = lowest_bit(hit)
                    path = [v]
                    for e in range(d - 1, -1, -1):
                        v = lowest_bit(adj[v] & layers[e])
                        path.append(v)
                    path.reverse()
                    y = lowest_bit(adj[path[-1]] & core & ~(1 << x))
                    best = (x, path, y)
                break
    if best is None:
        return None
    x, path, y = best
    return Extension("b-path", (x, y), tuple(path))


def _rule_a(adj, core: int, out: int, max_order: int, n: int) -> Extension | None:
    """Even-order path outside the core whose two ends see the same core vertex,
    i.e. an odd cycle through that core vertex avoiding the rest of the core."""
    best = None
    for x in iter_bits(core):
        if not adj[x] & out:
            continue
        allowed = out | 1 << x
        comp = bfs_layers(adj, 1 << x, allowed)
        cmask = 0
        for layer in comp:
            cmask |= layer
        if two_color(adj, cmask)[0] is not None:
            continue
        tree = block_cut_tree(adj, cmask, n)
        for b in tree.vertex_blocks[x]:
            bmask = to_mask(tree.blocks[b])
            if bmask.bit_count() < 3 or two_color(adj, bmask)[0] is not None:
                continue
            top = min(max_order + 1, bmask.bit_count())
            if best is not None:
                top = min(top, len(best[1]) - 1)
            for L in range(3, top + 1, 2):
                cyc = cycle_through(adj, bmask, x, L)
                if cyc is not None:
                    best = (x, cyc[1:])
                    break
    if best is None:
        return None
    x, path = best
    return Extension("a", (x,), tuple(path))


def find_extension(g: Graph, core: int, k: int, within: int | None = None) -> Extension | None:
    """The next applicable extension (cheapest rule first), or None if the core is closed.

    ``within`` restricts the search to an induced subgraph (vertex mask).
    """
    adj = g.adj
    budget = 2 * k - core.bit_count()
    if budget < 1:
        return None
    out = (g.all_vertices if within is None else within) & ~core
    ext = _rule_b_vertex(adj, core, out)
    if ext is None and budget >= 2:
        ext = _rule_b_path(adj, core, out, budget)
    if ext is None and budget >= 2:
        ext = _rule_a(adj, core, out, budget, g.n)
    return ext


def grow_strong_core(g: Graph, seed: OddCycleWitness | Sequence[int], k: int,
                     trace: list[Extension] | None = None, within: int | None = None) -> CoreCertificate:
    """Grow a strong-2k-core from an odd cycle of length <= 2k-1 until no extension applies.

    Each accepted extension is re-verified; ``trace`` (if given) collects them in order.
    """
    cyc = tuple(seed.vertices if isinstance(seed, OddCycleWitness) else seed)
    if len(cyc) % 2 == 0 or len(cyc) > 2 * k - 1:
        raise CorePreconditionError(f"seed must be an odd cycle of length <= {2 * k - 1}, got length {len(cyc)}")
    for i, v in enumerate(cyc):
        if not g.has_edge(v, cyc[(i + 1) % len(cyc)]):
            raise CorePreconditionError(f"seed is not a cycle: {v}-{cyc[(i + 1) % len(cyc)]} is not an edge")
    cert = verify_core(g, cyc, k, strong=True)
    if not cert:
        raise CorePreconditionError(f"seed fails the strong-{2 * k}-core test: {cert}")
    core = to_mask(cyc)
    while True:
        ext = find_extension(g, core, k, within)
        if ext is None:
            return cert
        core |= to_mask(ext.path)
        cert = verify_core(g, iter_bits(core), k, strong=True)
        if not cert:
            raise RuntimeError(f"extension {ext} broke the strong core property: {cert}")
        if trace is not None:
            trace.append(ext)


# -- common neighbourhoods -----------------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodViolation:
    pair: tuple[int, int]
    path: tuple[int, ...]
    common: int  # |(N(x) & N(y)) minus V(P)|


def sample_pairs(n: int, budget: int, seed: int = 0) -> list[tuple[int, int]]:
    """All pairs when there are at most ``budget`` of them, else ``budget`` random ones."""
    total = n * (n - 1) // 2
    if total <= budget:
        return list(combinations(range(n), 2))
    rng = np.random.default_rng(seed)
    xs = rng.integers(0, n, size=budget)
    ys = rng.integers(0, n - 1, size=budget)
    ys = ys + (ys >= xs)  # uniform over y != x
    return [(int(min(a, b)), int(max(a, b))) for a, b in zip(xs, ys)]


def check_common_neighborhood_bound(g: Graph, k: int, pair_budget: int,
                                    seed: int = 0) -> list[NeighborhoodViolation]:
    """Pairs x, y joined by an even-order path P of order <= 2k with more than 8k
    common neighbours off P. Exhaustive when the graph has at most ``pair_budget`` pairs."""
    if pair_budget < 1:
        raise ValueError("pair_budget must be at least 1")
    adj = g.adj
    finder = ParityPathFinder(g)
    out = []
    for x, y in sample_pairs(g.n, pair_budget, seed):
        p = finder.find(x, y, True, 2 * k)
        if p is None:
            continue
        common = (adj[x] & adj[y] & ~to_mask(p.vertices)).bit_count()
        if common > 8 * k:
            out.append(NeighborhoodViolation((x, y), p.vertices, common))
    return out
