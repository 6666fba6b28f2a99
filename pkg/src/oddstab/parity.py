"""Parity-aware reachability, shortest odd cycles, fixed-length cycles and
bounded-order simple paths of prescribed parity.

Internally everything counts edges. The user-facing parity of a path is the parity of
its *order* (vertex count), so an even-order path has an odd number of edges; the
conversion happens only in :func:`bounded_parity_simple_path` and
:class:`ParityPathFinder`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._bits import iter_bits, lowest_bit, to_mask, union_of
from .graph import BlockCutTree, Graph, block_cut_tree, odd_cycle_from_clash, two_color


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def even(self) -> bool:
        """True for an even-order path (odd number of edges)."""
        return len(self.vertices) % 2 == 0

    def to_json(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class OddCycleWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_json(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class ParityReachability:
    """Shortest even / odd walk lengths (in edges) from ``source``; None = unreachable."""

    source: int
    even: tuple[int | None, ...]
    odd: tuple[int | None, ...]

    def distance(self, v: int, parity: int) -> int | None:
        return self.odd[v] if parity & 1 else self.even[v]


# -- double cover BFS ----------------------------------------------------------


def parity_layers(adj, sources: int, allowed: int) -> tuple[list[int], list[int]]:
    """BFS in the bipartite double cover restricted to ``allowed``.

    Returns ``(even_dist, odd_dist)`` lists: ``even_dist[v]`` is the shortest even walk
    length from any source to ``v``, or -1.
    """
    n = max(allowed.bit_length(), sources.bit_length())
    dist = ([-1] * n, [-1] * n)
    reached = [sources, 0]
    frontier = sources
    d = 0
    for v in iter_bits(frontier):
        dist[0][v] = 0
    while frontier:
        d += 1
        p = d & 1
        nxt = union_of(adj, frontier) & allowed & ~reached[p]
        if not nxt:
            break
        reached[p] |= nxt
        for v in iter_bits(nxt):
            dist[p][v] = d
        frontier = nxt
    return dist[0], dist[1]


def parity_bfs(g: Graph, source: int) -> ParityReachability:
    """Shortest even- and odd-length walks from ``source`` to every vertex."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} outside 0..{g.n - 1}")
    ev, od = parity_layers(g.adj, 1 << source, g.all_vertices)
    ev = ev + [-1] * (g.n - len(ev))
    od = od + [-1] * (g.n - len(od))
    return ParityReachability(
        source,
        tuple(None if x < 0 else x for x in ev),
        tuple(None if x < 0 else x for x in od),
    )


# -- shortest odd cycle ----------------------------------------------------------


def shortest_odd_cycle_masked(adj, allowed: int) -> list[int] | None:
    """A shortest odd cycle of the induced subgraph on ``allowed`` (None if bipartite)."""
    res = two_color(adj, allowed)
    if res[0] is not None:
        return None
    _, _, u0, w0, layers0 = res
    best = odd_cycle_from_clash(adj, layers0, u0, w0)
    if len(best) == 3:
        return best
    # BFS from every root, cut off once no shorter odd cycle can appear
    for root in iter_bits(allowed):
        frontier = 1 << root
        seen = frontier
        layers = [frontier]
        d = 0
        while frontier and 2 * d + 1 < len(best):
            clash = None
            for u in iter_bits(frontier):
                c = adj[u] & frontier
                if c:
                    clash = (u, lowest_bit(c))
                    break
            if clash is not None:
                cyc = odd_cycle_from_clash(adj, layers, *clash)
                if len(cyc) < len(best):
                    best = cyc
                    if len(best) == 3:
                        return best
                break
            frontier = union_of(adj, frontier) & allowed & ~seen
            seen |= frontier
            layers.append(frontier)
            d += 1
    return best


def shortest_odd_cycle(g: Graph) -> OddCycleWitness | None:
    """A minimum-length odd cycle, or None when ``g`` is bipartite."""
    cyc = shortest_odd_cycle_masked(g.adj, g.all_vertices)
    return None if cyc is None else OddCycleWitness(tuple(cyc))


# -- fixed length cycles -----------------------------------------------------------


def cycle_through(adj, allowed: int, s: int, L: int) -> list[int] | None:
    """A simple cycle with exactly ``L`` edges through ``s`` inside G[allowed]."""
    ev, od = parity_layers(adj, 1 << s, allowed)
    dist = (ev, od)
    path = [s]

    def extend(v: int, visited: int) -> bool:
        j = len(path) - 1  # edges so far
        if j == L - 1:
            return bool(adj[v] >> s & 1)
        rem = L - j - 1  # edges still needed after the next step
        for w in iter_bits(adj[v] & allowed & ~visited):
            dw = dist[rem & 1][w]
            if dw < 0 or dw > rem:
                continue
            path.append(w)
            if extend(w, visited | 1 << w):
                return True
            path.pop()
        return False

    return path if extend(s, 1 << s) else None


def _cycle_in_block(adj, block: int, L: int) -> list[int] | None:
    for s in iter_bits(block):
        # cycles whose minimum vertex is s
        allowed = block & ~((1 << s) - 1)
        if allowed.bit_count() < L:
            break
        cyc = cycle_through(adj, allowed, s, L)
        if cyc is not None:
            return cyc
    return None


def has_cycle_of_length(g: Graph, L: int) -> list[int] | None:
    """A simple cycle with exactly ``L`` edges, or None if there is none."""
    if not 3 <= L <= g.n:
        raise ValueError(f"cycle length must satisfy 3 <= L <= n={g.n}, got {L}")
    tree = block_cut_tree(g.adj, g.all_vertices, g.n)
    for b in tree.block_masks:
        if b.bit_count() < L:
            continue
        if L % 2 and two_color(g.adj, b)[0] is not None:
            continue
        cyc = _cycle_in_block(g.adj, b, L)
        if cyc is not None:
            return cyc
    return None


# -- bounded parity simple paths -------------------------------------------------


class ParityPathFinder:
    """Reusable search for short simple paths of prescribed parity inside ``G[S]``.

    A simple x-y path crosses exactly the blocks on the block-cut tree path between x and
    y, so the search splits into independent per-block subproblems; bipartite blocks
    admit a single parity and are solved by BFS.
    """

    def __init__(self, g: Graph, S: Iterable[int] | int | None = None):
        self.g = g
        self.adj = g.adj
        if S is None:
            self.allowed = g.all_vertices
        elif isinstance(S, int):
            self.allowed = S
        else:
            self.allowed = to_mask(S)
        self._tree: BlockCutTree | None = None
        self._bip: dict[int, bool] = {}
        self._masks: dict[int, int] = {}

    @property
    def tree(self) -> BlockCutTree:
        if self._tree is None:
            self._tree = block_cut_tree(self.adj, self.allowed, self.g.n)
        return self._tree

    def _block_mask(self, b: int) -> int:
        m = self._masks.get(b)
        if m is None:
            m = self._masks[b] = to_mask(self.tree.blocks[b])
        return m

    def _block_bipartite(self, b: int) -> bool:
        r = self._bip.get(b)
        if r is None:
            r = self._bip[b] = two_color(self.adj, self._block_mask(b))[0] is not None
        return r

    def _shortest(self, mask: int, s: int, t: int) -> list[int] | None:
        adj = self.adj
        layers = [1 << s]
        seen = 1 << s
        while not layers[-1] >> t & 1:
            nxt = union_of(adj, layers[-1]) & mask & ~seen
            if not nxt:
                return None
            seen |= nxt
            layers.append(nxt)
        path = [t]
        v = t
        for d in range(len(layers) - 2, -1, -1):
            v = lowest_bit(adj[v] & layers[d])
            path.append(v)
        return path[::-1]

    def _min_parity_path(self, mask: int, s: int, t: int, parity: int, bound: int) -> list[int] | None:
        """Shortest simple s-t path in G[mask] with edge count of the given parity, <= bound."""
        adj = self.adj
        ev, od = parity_layers(adj, 1 << t, mask)
        dist = (ev, od)
        best: list[list[int] | None] = [None]
        limit = [bound]
        path = [s]

        def lb(w: int, length: int) -> int:
            need = (parity - length) & 1
            d = dist[need][w] if w < len(ev) else -1
            return -1 if d < 0 else length + d

        def dfs(v: int, visited: int) -> None:
            length = len(path) - 1
            if v == t:
                if (length & 1) == parity and length <= limit[0]:
                    best[0] = list(path)
                    limit[0] = length - 2  # need a strictly shorter path of the same parity
                return
            cands = []
            for w in iter_bits(adj[v] & mask & ~visited):
                b = lb(w, length + 1)
                if 0 <= b <= limit[0]:
                    cands.append((b, w))
            cands.sort()
            for b, w in cands:
                if b > limit[0]:
                    break
                path.append(w)
                dfs(w, visited | 1 << w)
                path.pop()

        if lb(s, 0) < 0 or lb(s, 0) > bound:
            return None
        dfs(s, 1 << s)
        return best[0]

    def find(self, x: int, y: int, want_even_order: bool, max_order: int) -> PathWitness | None:
        """Simple x-y path in G[S] with order parity as requested and order <= max_order."""
        if not (self.allowed >> x & 1 and self.allowed >> y & 1):
            raise ValueError(f"endpoints {x}, {y} must lie in S")
        if x == y:
            return None if want_even_order or max_order < 1 else PathWitness((x,))
        max_edges = max_order - 1
        target = 1 if want_even_order else 0  # edge parity
        segs = self.tree.block_path(x, y)
        if segs is None:
            return None
        short = []
        for b, s, t in segs:
            p = self._shortest(self._block_mask(b), s, t)
            short.append(p)
        base_len = sum(len(p) - 1 for p in short)
        if base_len > max_edges:
            return None
        # options[i][parity] = path in segment i
        options: list[dict[int, list[int]]] = []
        for i, (b, s, t) in enumerate(segs):
            p = short[i]
            opts = {(len(p) - 1) & 1: p}
            if not self._block_bipartite(b):
                other = (len(p)) & 1
                slack = max_edges - (base_len - (len(p) - 1))
                q = self._min_parity_path(self._block_mask(b), s, t, other, slack)
                if q is not None:
                    opts[other] = q
            options.append(opts)
        # DP over segments: state = parity so far -> (total length, choice list)
        states: dict[int, tuple[int, list[list[int]]]] = {0: (0, [])}
        for opts in options:
            nxt: dict[int, tuple[int, list[list[int]]]] = {}
            for par, (tot, ch) in states.items():
                for op, p in opts.items():
                    key = (par + op) & 1
                    cand = (tot + len(p) - 1, ch + [p])
                    if key not in nxt or cand[0] < nxt[key][0]:
                        nxt[key] = cand
            states = nxt
        if target not in states or states[target][0] > max_edges:
            return None
        verts = [x]
        for p in states[target][1]:
            verts.extend(p[1:])
        return PathWitness(tuple(verts))


def bounded_parity_simple_path(g: Graph, S: Iterable[int] | int, x: int, y: int,
                               want_even_order: bool, max_order: int) -> PathWitness | None:
    """A shortest simple x-y path inside ``G[S]`` whose order has the requested parity,
    provided its order is at most ``max_order``; None when no such path exists."""
    if max_order < 2:
        raise ValueError("max_order must be at least 2")
    return ParityPathFinder(g, S).find(x, y, want_even_order, max_order)
