"""Suspension decompositions of dense graphs without a (2k+1)-cycle.

A *suspension* is a vertex set attached to the part of the graph built so far through
at most one vertex (its anchor) and no other edges. :func:`decompose` peels a greedy
strong-2k-core off the graph, turns it together with the small branches hanging from
it into one suspension, and recurses on the large remaining branch until a bipartite
base is left. Every stage whose hypothesis fails is reported as a
:class:`DiagnosticFailure` carrying a checkable witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from math import comb
from typing import Any

from ._bits import bfs_layers, iter_bits, lowest_bit, to_mask
from .bipartization import suspension_gamma2_bound
from .core import grow_strong_core
from .graph import Graph, block_cut_tree, two_color
from .parity import shortest_odd_cycle_masked


def threshold_edges(n: int, r: int) -> int:
    """Edge count of the extremal construction: floor((n-r+1)^2 / 4) + C(r, 2)."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return (n - r + 1) ** 2 // 4 + comb(r, 2)


def theorem_preconditions(n: int, k: int, r: int) -> bool:
    """Whether (n, k, r) lies in the parameter range where the structure is guaranteed."""
    return r >= 1 and 2 * k >= r + 4 and n >= 20 * (r + 2) ** 2 * k


def balance_ok(n: int, r: int, side: int) -> bool:
    """floor((n-r+1)^2 / 4) <= side * (n - side), i.e. the side size is in the admissible window."""
    return side * (n - side) >= (n - r + 1) ** 2 // 4


# -- data --------------------------------------------------------------------------


@dataclass(frozen=True)
class Suspension:
    vertices: tuple[int, ...]
    anchor: int | None
    shared: bool

    @property
    def new_vertices(self) -> int:
        return len(self.vertices) - (1 if self.shared else 0)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "anchor": self.anchor, "shared": self.shared}


@dataclass(frozen=True)
class DiagnosticFailure:
    stage: str  # odd-girth | core-size | cut-structure | budget | balance
    witness: Any
    message: str

    def __bool__(self) -> bool:
        return False

    def to_json(self) -> dict:
        return {"stage": self.stage, "witness": self.witness, "message": self.message}


@dataclass(frozen=True)
class SuspensionDecomposition:
    V1: tuple[int, ...]
    V2: tuple[int, ...]
    suspensions: tuple[Suspension, ...]
    outside_count: int
    equality: bool = False
    d2_upper: int | None = None
    gamma2_upper: int | None = None
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(sorted(self.V1 + self.V2))

    def to_json(self) -> dict:
        return {
            "base": {"V1": list(self.V1), "V2": list(self.V2)},
            "suspensions": [s.to_json() for s in self.suspensions],
            "outside_count": self.outside_count,
            "equality": self.equality,
            "bounds": {"d2_upper": self.d2_upper, "gamma2_upper": self.gamma2_upper},
            "diagnostics": list(self.diagnostics),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: dict) -> "SuspensionDecomposition":
        bounds = data.get("bounds") or {}
        return cls(
            V1=tuple(data["base"]["V1"]),
            V2=tuple(data["base"]["V2"]),
            suspensions=tuple(
                Suspension(tuple(s["vertices"]), s.get("anchor"), bool(s.get("shared", s.get("anchor") is not None)))
                for s in data["suspensions"]
            ),
            outside_count=int(data["outside_count"]),
            equality=bool(data.get("equality", False)),
            d2_upper=bounds.get("d2_upper"),
            gamma2_upper=bounds.get("gamma2_upper"),
            diagnostics=tuple(data.get("diagnostics", ())),
        )


@dataclass
class _Partial:
    side1: int
    side2: int
    suspensions: list[tuple[int, int | None]]  # (vertex mask, anchor)


# -- decompose -----------------------------------------------------------------------


def _components(adj, allowed: int) -> list[int]:
    comps = []
    rest = allowed
    while rest:
        c = 0
        for layer in bfs_layers(adj, 1 << lowest_bit(rest), allowed):
            c |= layer
        comps.append(c)
        rest &= ~c
    return comps


def _decompose_connected(g: Graph, mask: int, k: int, r: int) -> _Partial | DiagnosticFailure:
    adj = g.adj
    res = two_color(adj, mask)
    if res[0] is not None:
        return _Partial(res[0], res[1], [])

    cyc = shortest_odd_cycle_masked(adj, mask)
    if len(cyc) > 2 * k - 1:
        return DiagnosticFailure(
            "odd-girth", cyc,
            f"shortest odd cycle has length {len(cyc)} > 2k-1 = {2 * k - 1}")

    cert = grow_strong_core(g, cyc, k, within=mask)
    core = cert.mask
    l = cert.size
    if l > r:
        return DiagnosticFailure(
            "core-size", list(cert.vertices),
            f"strong-{2 * k}-core has {l} vertices, more than r = {r}")

    # branches hanging off the core: each component of G - core must see one core vertex
    hang: dict[int, int] = {x: 0 for x in iter_bits(core)}
    for comp in _components(adj, mask & ~core):
        seen = 0
        for v in iter_bits(comp):
            seen |= adj[v] & core
        xs = list(iter_bits(seen))
        if len(xs) >= 2:
            x, y = xs[0], xs[1]
            path = _path_between(adj, comp, adj[x] & comp, adj[y] & comp)
            return DiagnosticFailure(
                "cut-structure", {"core_vertices": [x, y], "path": path},
                f"core vertex {x} has outside neighbours but is not a cut vertex: "
                f"a path outside the core joins it to core vertex {y}")
        hang[xs[0]] |= comp

    order = sorted(hang, key=lambda x: (-hang[x].bit_count(), x))
    x1 = order[0]
    h = sum(hang[x].bit_count() for x in order[1:]) + l
    if h > r:
        return DiagnosticFailure(
            "budget", {"h": h, "r": r, "core": list(cert.vertices)},
            f"core plus small branches has {h} vertices, more than r = {r}")

    susp = core
    for x in order[1:]:
        susp |= hang[x]
    rest = hang[x1] | 1 << x1
    sub = _decompose_connected(g, rest, k, r - h + 1)
    if isinstance(sub, DiagnosticFailure):
        return sub
    sub.suspensions.append((susp, x1))
    return sub


def _path_between(adj, allowed: int, src: int, dst: int) -> list[int]:
    layers = bfs_layers(adj, src, allowed)
    for d, layer in enumerate(layers):
        hit = layer & dst
        if hit:
            v = lowest_bit(hit)
            path = [v]
            for e in range(d - 1, -1, -1):
                v = lowest_bit(adj[v] & layers[e])
                path.append(v)
            return path[::-1]
    return []


def _split_blocks(adj, n: int, mask: int, anchor: int | None) -> list[tuple[int, int | None]]:
    """Split G[mask] into its blocks, ordered outward from ``anchor`` (or the lowest vertex)."""
    tree = block_cut_tree(adj, mask, n)
    if len(tree.blocks) <= 1:
        return [(mask, anchor)]
    root = anchor if anchor is not None else lowest_bit(mask)
    queue = [(b, anchor if i == 0 else root) for i, b in enumerate(tree.vertex_blocks[root])]
    out: list[tuple[int, int | None]] = []
    done = set()
    for b, a in queue:
        if b in done:
            continue
        done.add(b)
        out.append((to_mask(tree.blocks[b]), a))
        for c in tree.block_cuts[b]:
            queue.extend((b2, c) for b2 in tree.vertex_blocks[c] if b2 not in done)
    return out


def _peel_base(adj, n: int, base: int, budget: int) -> tuple[int, list[tuple[int, int | None]]]:
    """Detach the non-main blocks of the bipartite base as suspensions, if ``budget`` allows.

    The main block is the largest block of the base (ties: lowest vertex); only the base
    component containing it is split. Returns (new base mask, suspensions in attachment
    order).
    """
    tree = block_cut_tree(adj, base, n)
    if len(tree.blocks) <= 1:
        return base, []
    main = min(range(len(tree.blocks)), key=lambda b: (-len(tree.blocks[b]), min(tree.blocks[b])))
    main_mask = to_mask(tree.blocks[main])
    comp = 0
    for layer in bfs_layers(adj, main_mask, base):
        comp |= layer
    extra = (comp & ~main_mask).bit_count()
    if extra == 0 or extra > budget:
        return base, []
    out: list[tuple[int, int | None]] = []
    done = {main}
    queue = [(b2, c) for c in tree.block_cuts[main] for b2 in tree.vertex_blocks[c] if b2 != main]
    for b, c in queue:
        if b in done:
            continue
        done.add(b)
        out.append((to_mask(tree.blocks[b]), c))
        for c2 in tree.block_cuts[b]:
            for b2 in tree.vertex_blocks[c2]:
                if b2 not in done:
                    queue.append((b2, c2))
    return base & ~(comp & ~main_mask), out


def _is_complete(adj, mask: int) -> bool:
    return all((adj[v] & mask) == mask & ~(1 << v) for v in iter_bits(mask))


def equality_case(g: Graph, d: SuspensionDecomposition, r: int) -> bool:
    """True iff the decomposition has the exact shape of the extremal construction:
    a complete balanced bipartite base on n-r+1 vertices plus one K_r suspension."""
    n = g.n
    if d.outside_count != r - 1 or r > n:
        return False
    a, b = sorted((len(d.V1), len(d.V2)))
    if a + b != n - r + 1 or a != (n - r + 1) // 2:
        return False
    base_mask = to_mask(d.V1)
    if any((g.adj[v] & base_mask).bit_count() != len(d.V1) for v in d.V2):
        return False
    if r == 1:
        return not d.suspensions
    if len(d.suspensions) != 1:
        return False
    s = d.suspensions[0]
    return len(s.vertices) == r and _is_complete(g.adj, to_mask(s.vertices))


def decompose(g: Graph, k: int, r: int) -> SuspensionDecomposition | DiagnosticFailure:
    """Write ``g`` as a bipartite base plus suspensions added one at a time.

    ``k`` fixes the forbidden odd cycle length 2k+1 and ``r`` the edge-density level
    (``e(g) >= threshold_edges(n, r)``). Under the theorem's hypotheses the result has at
    most ``r - 1`` vertices outside the base; otherwise the first violated stage is
    returned as a :class:`DiagnosticFailure`.
    """
    if k < 1 or r < 1:
        raise ValueError("k and r must be positive")
    adj, n = g.adj, g.n
    comps = _components(adj, g.all_vertices)
    comps.sort(key=lambda c: (-c.bit_count(), lowest_bit(c)))
    side1 = side2 = 0
    parts: list[tuple[int, int | None]] = []
    for i, comp in enumerate(comps):
        res = two_color(adj, comp)
        if res[0] is not None:
            side1 |= res[0]
            side2 |= res[1]
            continue
        if i > 0:
            # a separate non-bipartite component is its own anchor-less suspension
            parts.append((comp, None))
            continue
        sub = _decompose_connected(g, comp, k, r)
        if isinstance(sub, DiagnosticFailure):
            return sub
        side1 |= sub.side1
        side2 |= sub.side2
        parts = sub.suspensions
    base = side1 | side2
    outside = n - base.bit_count()
    new_base, peeled = _peel_base(adj, n, base, max(0, r - 1 - outside))
    side1 &= new_base
    side2 &= new_base
    suspensions: list[Suspension] = []
    for mask, anchor in peeled + parts:
        for bm, a in _split_blocks(adj, n, mask, anchor):
            suspensions.append(Suspension(tuple(iter_bits(bm)), a, a is not None))
    outside = n - new_base.bit_count()
    if outside > r - 1:
        return DiagnosticFailure(
            "budget", {"outside_count": outside, "r": r},
            f"{outside} vertices lie outside the base, more than r-1 = {r - 1}")
    V1, V2 = tuple(iter_bits(side1)), tuple(iter_bits(side2))
    if len(V1) < len(V2):
        V1, V2 = V2, V1
    d = SuspensionDecomposition(V1, V2, tuple(suspensions), outside)
    if r <= n and g.m >= threshold_edges(n, r):
        for side in (len(V1), len(V2)):
            if not balance_ok(n, r, side):
                return DiagnosticFailure(
                    "balance", {"V1": len(V1), "V2": len(V2), "n": n, "r": r},
                    f"base side of size {side} violates floor((n-r+1)^2/4) <= |V|(n-|V|)")
        e_base = g.edges_within(to_mask(V1 + V2))
        if e_base < (n - r + 1) ** 2 // 4:
            return DiagnosticFailure(
                "balance", {"e_base": e_base, "n": n, "r": r},
                f"base has {e_base} edges, fewer than floor((n-r+1)^2/4)")
    d = replace(d, equality=equality_case(g, d, r))
    d2, gamma2 = derived_bounds(g, d)
    return replace(d, d2_upper=d2, gamma2_upper=gamma2)


# -- verification --------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    ok: bool
    clause: str | None = None
    witness: Any = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"accepted": self.ok, "clause": self.clause, "witness": self.witness, "message": self.message}


def _check_structure(g: Graph, d: SuspensionDecomposition) -> Verdict:
    adj, n = g.adj, g.n
    everything = g.all_vertices
    for v in d.V1 + d.V2:
        if not 0 <= v < n:
            return Verdict(False, "base", v, f"base vertex {v} outside 0..{n - 1}")
    m1, m2 = to_mask(d.V1), to_mask(d.V2)
    if m1 & m2 or len(set(d.V1)) != len(d.V1) or len(set(d.V2)) != len(d.V2):
        return Verdict(False, "base", sorted(iter_bits(m1 & m2)), "base sides overlap")
    for side in (m1, m2):
        for v in iter_bits(side):
            bad = adj[v] & side
            if bad:
                return Verdict(False, "base", [v, lowest_bit(bad)], "edge inside one side of the base")
    placed = m1 | m2
    for i, s in enumerate(d.suspensions):
        sm = to_mask(s.vertices)
        if sm & ~everything or len(set(s.vertices)) != len(s.vertices):
            return Verdict(False, "attachment", i, f"suspension {i} has invalid vertices")
        shared = sm & placed
        if shared.bit_count() > 1:
            return Verdict(False, "attachment", sorted(iter_bits(shared)),
                           f"suspension {i} shares more than one vertex with earlier parts")
        if shared:
            a = lowest_bit(shared)
            if s.anchor != a or not s.shared:
                return Verdict(False, "attachment", a, f"suspension {i} shares vertex {a} but declares anchor {s.anchor}")
        elif s.shared:
            return Verdict(False, "attachment", s.anchor, f"suspension {i} declares a shared anchor not yet placed")
        for v in iter_bits(sm & ~shared):
            cross = adj[v] & placed & ~sm
            if cross:
                return Verdict(False, "attachment", [v, lowest_bit(cross)],
                               f"edge joins suspension {i} to an earlier part outside its anchor")
        placed |= sm
    if placed != everything:
        missing = sorted(iter_bits(everything & ~placed))
        return Verdict(False, "coverage", missing[:10], f"{len(missing)} vertices are not covered")
    outside = n - (m1 | m2).bit_count()
    if d.outside_count != outside or outside != sum(s.new_vertices for s in d.suspensions):
        return Verdict(False, "outside-count", outside, f"declared outside_count {d.outside_count}, actual {outside}")
    return Verdict(True)


def verify_decomposition(g: Graph, d: SuspensionDecomposition, r: int) -> Verdict:
    """Independently re-check a decomposition against ``g`` and the density level ``r``."""
    v = _check_structure(g, d)
    if not v:
        return v
    n = g.n
    if d.outside_count > r - 1:
        return Verdict(False, "outside-bound", d.outside_count,
                       f"{d.outside_count} vertices outside the base, more than r-1 = {r - 1}")
    if r <= n and g.m >= threshold_edges(n, r):
        for side in (len(d.V1), len(d.V2)):
            if not balance_ok(n, r, side):
                return Verdict(False, "balance", side, f"base side {side} outside the admissible window")
        e_base = g.edges_within(to_mask(d.V1 + d.V2))
        if e_base < (n - r + 1) ** 2 // 4:
            return Verdict(False, "base-edges", e_base, "base has fewer than floor((n-r+1)^2/4) edges")
    if d.equality != equality_case(g, d, r):
        return Verdict(False, "equality", d.equality, "equality flag does not match the decomposition")
    return Verdict(True)


def derived_bounds(g: Graph, d: SuspensionDecomposition) -> tuple[int, int]:
    """(d2 upper bound, gamma2 upper bound) implied by a structurally valid decomposition."""
    v = _check_structure(g, d)
    if not v:
        raise ValueError(f"decomposition does not fit the graph: {v.clause}: {v.message}")
    gamma2, _ = suspension_gamma2_bound(g, (s.vertices for s in d.suspensions))
    return d.outside_count, gamma2


def certifies_free_of_odd_cycle(d: SuspensionDecomposition, length: int) -> bool:
    """True when the decomposition alone rules out cycles of the given odd length.

    Every cycle lies in a single block; blocks sit inside the bipartite base or inside a
    single suspension, so suspensions with fewer than ``length`` vertices suffice.
    """
    return length % 2 == 1 and all(len(s.vertices) < length for s in d.suspensions)
