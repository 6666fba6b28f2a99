"""Undirected simple graphs on vertices ``0..n-1`` and the structural primitives
(bipartiteness, blocks, degree peeling) the rest of the package is built on.

Adjacency is stored as one Python int per vertex used as a bitset, so neighbourhood
intersections and BFS layers are word-parallel.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence

from ._bits import bfs_layers, iter_bits, lowest_bit, to_mask, trace_back


class Graph:
    """Immutable undirected simple graph.

    >>> g = Graph(3, [(0, 1), (1, 2), (2, 0)])
    >>> g.m, g.degree(0), sorted(g.neighbors(1))
    (3, 2, [0, 2])
    """

    __slots__ = ("_n", "_adj", "_m", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init(adj)

    def _init(self, adj: list[int]) -> None:
        self._n = len(adj)
        self._adj = tuple(adj)
        self._m = sum(a.bit_count() for a in adj) // 2
        self._nbrs: list[tuple[int, ...] | None] | None = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[int], check: bool = True) -> "Graph":
        """Build from per-vertex neighbour bitsets (trusted when ``check`` is False)."""
        adj = list(adj)
        if check:
            n = len(adj)
            for u, a in enumerate(adj):
                if a >> u & 1:
                    raise ValueError(f"self-loop at vertex {u}")
                if a >> n:
                    raise ValueError(f"vertex {u} has a neighbour outside 0..{n - 1}")
                for v in iter_bits(a):
                    if not adj[v] >> u & 1:
                        raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        g = cls.__new__(cls)
        g._init(adj)
        return g

    # -- basic queries -------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbour bitsets, one int per vertex."""
        return self._adj

    @property
    def all_vertices(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._nbrs is None:
            self._nbrs = [None] * self._n
        nb = self._nbrs[v]
        if nb is None:
            nb = self._nbrs[v] = tuple(iter_bits(self._adj[v]))
        return nb

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, a in enumerate(self._adj):
            for v in iter_bits(a >> (u + 1)):
                yield u, u + 1 + v

    def edges_within(self, mask: int) -> int:
        """Number of edges of the induced subgraph on the vertex mask."""
        return sum((self._adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def induced(self, vertices: Iterable[int] | int) -> "InducedSubgraph":
        """Induced subgraph, relabelled to ``0..len-1`` in increasing parent order."""
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        order = tuple(iter_bits(mask))
        index = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            a = 0
            for w in iter_bits(self._adj[v] & mask):
                a |= 1 << index[w]
            adj.append(a)
        return InducedSubgraph(Graph.from_adjacency(adj, check=False), order, index)

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self._adj)
        for u, v in edges:
            if not adj[u] >> v & 1:
                raise ValueError(f"({u}, {v}) is not an edge")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph.from_adjacency(adj, check=False)

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self._n, [*self.edges(), *edges])

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class InducedSubgraph:
    """An induced subgraph together with its old<->new vertex maps."""

    graph: Graph
    vertices: tuple[int, ...]  # new index -> parent vertex
    index: dict[int, int] = field(repr=False)  # parent vertex -> new index

    def to_parent(self, seq: Iterable[int]) -> list[int]:
        return [self.vertices[v] for v in seq]

    def to_parent_mask(self, mask: int) -> int:
        return to_mask(self.vertices[v] for v in iter_bits(mask))


# -- bipartiteness -----------------------------------------------------------


@dataclass(frozen=True)
class BipartitenessWitness:
    """Either a proper two-colouring (sides 1/2) or an odd closed walk."""

    coloring: tuple[int, ...] | None = None
    odd_walk: tuple[int, ...] | None = None

    @property
    def bipartite(self) -> bool:
        return self.coloring is not None

    def __bool__(self) -> bool:
        return self.bipartite


def two_color(adj, allowed: int) -> tuple[int, int] | tuple[int, int, int, int, list[int]]:
    """Two-colour the induced subgraph on ``allowed``.

    Returns ``(side1, side2)`` masks, or on failure a 5-tuple
    ``(None, None, u, w, layers)`` where ``u``-``w`` is an edge inside one BFS layer.
    """
    side = [0, 0]
    remaining = allowed
    while remaining:
        root = lowest_bit(remaining)
        layers = bfs_layers(adj, 1 << root, allowed)
        for d, layer in enumerate(layers):
            for u in iter_bits(layer):
                clash = adj[u] & layer
                if clash:
                    return None, None, u, lowest_bit(clash), layers  # type: ignore[return-value]
            side[d & 1] |= layer
            remaining &= ~layer
    return side[0], side[1]


def odd_cycle_from_clash(adj, layers: list[int], u: int, w: int) -> list[int]:
    """Simple odd cycle through the same-layer edge ``u``-``w`` of a BFS."""
    depth = next(d for d, layer in enumerate(layers) if layer >> u & 1)
    pu = trace_back(adj, layers, u, depth)[::-1]
    pw = trace_back(adj, layers, w, depth)[::-1]
    i = 0
    while pu[i + 1] == pw[i + 1]:
        i += 1
    # pu[i] is the last common ancestor; both branches have equal length
    return pu[i:] + pw[i + 1:][::-1]


def is_bipartite(g: Graph) -> BipartitenessWitness:
    """Two-colouring if ``g`` has no odd cycle, otherwise an odd cycle as closed walk."""
    res = two_color(g.adj, g.all_vertices)
    if res[0] is None:
        _, _, u, w, layers = res
        return BipartitenessWitness(odd_walk=tuple(odd_cycle_from_clash(g.adj, layers, u, w)))
    s1 = res[0]
    return BipartitenessWitness(coloring=tuple(1 if s1 >> v & 1 else 2 for v in range(g.n)))


# -- blocks ------------------------------------------------------------------


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    vertex_blocks: tuple[tuple[int, ...], ...]  # vertex -> indices of blocks containing it
    block_cuts: tuple[tuple[int, ...], ...] = field(repr=False)  # block -> its cut vertices

    @property
    def block_masks(self) -> list[int]:
        return [to_mask(b) for b in self.blocks]

    def tree_edges(self) -> list[tuple[int, int]]:
        """(block index, cut vertex) pairs of the block-cut tree."""
        return [(b, c) for c in sorted(self.cut_vertices) for b in self.vertex_blocks[c]]

    def block_of_edge(self, u: int, v: int) -> int:
        common = set(self.vertex_blocks[u]) & set(self.vertex_blocks[v])
        if len(common) != 1:
            raise ValueError(f"({u}, {v}) is not an edge of this block decomposition")
        return common.pop()

    def block_path(self, x: int, y: int) -> list[tuple[int, int, int]] | None:
        """Blocks crossed by every simple x-y path, as ``(block, entry, exit)`` triples.

        Returns None when x and y are in different components.
        """
        if x == y:
            return []
        shared = set(self.vertex_blocks[x]).intersection(self.vertex_blocks[y])
        if shared:
            return [(shared.pop(), x, y)]
        # BFS over the block-cut tree; nodes are ("b", i) and ("v", c)
        start = ("v", x)
        targets = set(self.vertex_blocks[y])
        prev: dict = {start: None}
        queue = [start]
        hit = None
        for node in queue:
            kind, i = node
            if kind == "v":
                nxt = [("b", b) for b in self.vertex_blocks[i]]
            else:
                if i in targets:
                    hit = node
                    break
                nxt = [("v", c) for c in self.block_cuts[i]]
            for nd in nxt:
                if nd not in prev:
                    prev[nd] = node
                    queue.append(nd)
        if hit is None:
            return None
        chain = []
        node = hit
        while node is not None:
            chain.append(node)
            node = prev[node]
        chain.reverse()  # v x, b, v c1, b, ..., b
        pts = [i for kind, i in chain if kind == "v"] + [y]
        blks = [i for kind, i in chain if kind == "b"]
        return [(b, pts[j], pts[j + 1]) for j, b in enumerate(blks)]


def biconnected_components(g: Graph) -> BlockCutTree:
    """Blocks and cut vertices (iterative Tarjan); isolated vertices are singleton blocks."""
    return block_cut_tree(g.adj, g.all_vertices, g.n)


def block_cut_tree(adj, allowed: int, n: int) -> BlockCutTree:
    """Blocks of the induced subgraph on the vertex mask ``allowed`` (parent labels kept).

    Vertices outside ``allowed`` belong to no block.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    t = 0
    for root in iter_bits(allowed):
        if root in disc:
            continue
        disc[root] = t
        t += 1
        if not adj[root] & allowed:
            blocks.append(frozenset((root,)))
            continue
        low[root] = disc[root]
        vstack = [root]
        stack = [(root, -1, iter_bits(adj[root] & allowed))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                dw = disc.get(w)
                if dw is None:
                    disc[w] = low[w] = t
                    t += 1
                    vstack.append(w)
                    stack.append((w, v, iter_bits(adj[w] & allowed)))
                    descended = True
                    break
                if w != parent and dw < low[v]:
                    low[v] = dw
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                comp = [p]
                while True:
                    x = vstack.pop()
                    comp.append(x)
                    if x == v:
                        break
                blocks.append(frozenset(comp))
    vb: list[list[int]] = [[] for _ in range(n)]
    for i, b in enumerate(blocks):
        for v in b:
            vb[v].append(i)
    cuts = frozenset(v for v in range(n) if len(vb[v]) > 1)
    block_cuts = tuple(tuple(sorted(c for c in b if c in cuts)) for b in blocks)
    return BlockCutTree(tuple(blocks), cuts, tuple(tuple(x) for x in vb), block_cuts)


# -- peeling -----------------------------------------------------------------


def _as_fraction(d) -> Fraction:
    if isinstance(d, tuple):
        return Fraction(*d)
    if isinstance(d, Rational):
        return Fraction(d)
    raise TypeError(f"threshold must be rational (int, Fraction or (num, den)), got {d!r}")


def min_degree_peel(g: Graph, d) -> InducedSubgraph:
    """Largest induced subgraph with minimum degree >= ``d``.

    Vertices of degree below ``d`` are deleted repeatedly, lowest index first. The
    comparison is exact (``d`` is a Fraction, an int or a ``(num, den)`` pair). With
    ``d = m/n`` and ``m >= 1`` the result is never empty.
    """
    d = _as_fraction(d)
    if d < 0:
        raise ValueError("threshold must be non-negative")
    num, den = d.numerator, d.denominator
    deg = g.degrees()
    alive = [True] * g.n
    heap = [v for v in range(g.n) if deg[v] * den < num]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] * den < num and deg[w] * den >= num - den:
                    heapq.heappush(heap, w)
    keep = [v for v in range(g.n) if alive[v]]
    if not keep and g.m >= 1 and d * g.n <= g.m:
        raise RuntimeError("peeling at threshold <= m/n emptied a graph with edges")
    return g.induced(keep)
