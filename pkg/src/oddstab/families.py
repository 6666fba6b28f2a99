"""Graph families: complete bipartite and Turan graphs, the extremal construction
T*(r, n), C5 blow-ups, random graphs and planted suspension instances.

Randomness always comes from ``numpy.random.default_rng(seed)`` (PCG64), so a family
spec plus its seed reproduces the same graph on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Any, Sequence

import numpy as np

from ._bits import iter_bits
from .bipartization import suspension_gamma2_bound
from .decomposition import Suspension, SuspensionDecomposition
from .graph import Graph

GENERATOR = "numpy.random.PCG64 via numpy.random.default_rng(seed)"


def _range_mask(lo: int, hi: int) -> int:
    return ((1 << hi) - 1) & ~((1 << lo) - 1)


def make_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with sides 0..a-1 and a..a+b-1."""
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    left, right = _range_mask(0, a), _range_mask(a, a + b)
    return Graph.from_adjacency([right] * a + [left] * b, check=False)


def make_turan(r: int, n: int) -> Graph:
    """Complete r-partite graph on n vertices with part sizes differing by at most one."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    adj = []
    start = 0
    full = (1 << n) - 1
    for s in sizes:
        part = _range_mask(start, start + s)
        adj += [full & ~part] * s
        start += s
    return Graph.from_adjacency(adj, check=False)


def turan_edges(r: int, n: int) -> int:
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    return (n * n - sum(s * s for s in sizes)) // 2


def make_tstar(r: int, n: int) -> Graph:
    """K_{floor((n-r+1)/2), ceil((n-r+1)/2)} and K_r sharing exactly one vertex.

    Layout: the larger side is 0..c-1 (c = ceil), the smaller side follows, and the
    clique is vertex 0 (on the larger side) plus the last r-1 vertices.
    """
    if not 1 <= r <= n or n - r + 1 < 2:
        raise ValueError(f"need 1 <= r <= n and n-r+1 >= 2, got r={r}, n={n}")
    nb = n - r + 1
    big = (nb + 1) // 2
    larger, smaller = _range_mask(0, big), _range_mask(big, nb)
    clique = 1 | _range_mask(nb, n)
    adj = [smaller] * big + [larger] * (nb - big) + [0] * (r - 1)
    for v in iter_bits(clique):
        adj[v] |= clique & ~(1 << v)
    return Graph.from_adjacency(adj, check=False)


def make_blowup_c5(sizes: Sequence[int]) -> Graph:
    """Replace each vertex of C5 by an independent set; consecutive sets are fully joined."""
    if len(sizes) != 5 or any(s < 1 for s in sizes):
        raise ValueError("need five positive part sizes")
    starts = np.cumsum([0, *sizes]).tolist()
    parts = [_range_mask(starts[i], starts[i + 1]) for i in range(5)]
    adj = []
    for i, s in enumerate(sizes):
        adj += [parts[(i - 1) % 5] | parts[(i + 1) % 5]] * s
    return Graph.from_adjacency(adj, check=False)


def make_cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_adjacency([full & ~(1 << v) for v in range(n)], check=False)


def make_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, 1)
    keep = rng.random(iu[0].size) < p
    return Graph(n, zip(iu[0][keep].tolist(), iu[1][keep].tolist()))


def make_random_m(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly m edges."""
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, 1)
    pick = np.sort(rng.choice(iu[0].size, size=m, replace=False))
    return Graph(n, zip(iu[0][pick].tolist(), iu[1][pick].tolist()))


def make_planted(base_a: int, base_b: int, suspension_sizes: Sequence[int],
                 anchor_policy: str = "distinct", seed: int = 0,
                 relabel: bool = True) -> tuple[Graph, SuspensionDecomposition]:
    """K_{base_a, base_b} with complete-graph suspensions attached, plus the ground truth.

    ``anchor_policy="distinct"`` anchors every suspension at its own base vertex;
    ``"chain"`` anchors the first one on the base and each later one at a non-anchor
    vertex of its predecessor. With ``relabel`` the vertices are shuffled.
    """
    sizes = list(suspension_sizes)
    if any(s < 2 for s in sizes):
        raise ValueError("suspension sizes must be at least 2")
    if anchor_policy not in ("distinct", "chain"):
        raise ValueError(f"unknown anchor policy {anchor_policy!r}")
    nb = base_a + base_b
    if sum(s - 1 for s in sizes) > nb or (sizes and nb == 0):
        raise ValueError(f"anchor exhaustion: {sum(s - 1 for s in sizes)} suspension vertices need at most {nb}")
    if anchor_policy == "distinct" and len(sizes) > nb:
        raise ValueError(f"anchor exhaustion: {len(sizes)} suspensions but {nb} base vertices")
    rng = np.random.default_rng(seed)
    n = nb + sum(s - 1 for s in sizes)
    edges = [(u, v) for u in range(base_a) for v in range(base_a, nb)]
    parts: list[tuple[list[int], int]] = []
    if anchor_policy == "distinct":
        anchors = rng.choice(nb, size=len(sizes), replace=False).tolist() if sizes else []
    nxt = nb
    for i, s in enumerate(sizes):
        if anchor_policy == "distinct":
            a = anchors[i]
        elif i == 0:
            a = int(rng.integers(nb))
        else:
            prev, prev_anchor = parts[-1]
            a = int(rng.choice([v for v in prev if v != prev_anchor]))
        verts = [a] + list(range(nxt, nxt + s - 1))
        nxt += s - 1
        edges += [(verts[x], verts[y]) for x in range(s) for y in range(x + 1, s)]
        parts.append((verts, a))
    perm = rng.permutation(n).tolist() if relabel else list(range(n))
    g = Graph(n, [(perm[u], perm[v]) for u, v in edges])
    V1 = tuple(sorted(perm[v] for v in range(base_a)))
    V2 = tuple(sorted(perm[v] for v in range(base_a, nb)))
    if len(V1) < len(V2):
        V1, V2 = V2, V1
    susp = tuple(Suspension(tuple(sorted(perm[v] for v in verts)), perm[a], True) for verts, a in parts)
    gamma2, _ = suspension_gamma2_bound(g, (s.vertices for s in susp))
    truth = SuspensionDecomposition(V1, V2, susp, n - nb, d2_upper=n - nb, gamma2_upper=gamma2)
    return g, truth


def tstar_gamma2(r: int) -> int:
    """C(ceil(r/2), 2) + C(floor(r/2), 2)."""
    return comb((r + 1) // 2, 2) + comb(r // 2, 2)


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus parameters; ``build()`` is deterministic."""

    family: str  # complete-bipartite | turan | t-star | c5-blowup | planted | random
    params: dict[str, Any] = field(default_factory=dict)

    def build(self) -> Graph:
        p = self.params
        if self.family == "complete-bipartite":
            return make_complete_bipartite(int(p["a"]), int(p["b"]))
        if self.family == "turan":
            return make_turan(int(p["r"]), int(p["n"]))
        if self.family == "t-star":
            return make_tstar(int(p["r"]), int(p["n"]))
        if self.family == "c5-blowup":
            return make_blowup_c5([int(x) for x in p["sizes"]])
        if self.family == "planted":
            return make_planted(int(p["a"]), int(p["b"]), [int(x) for x in p.get("sizes", [])],
                                p.get("anchor_policy", "distinct"), int(p.get("seed", 0)))[0]
        if self.family == "random":
            return make_random(int(p["n"]), float(p["p"]), int(p.get("seed", 0)))
        raise ValueError(f"unknown family {self.family!r}")
