"""Verification suites that run the package against known values, planted ground truth
and brute-force oracles, collecting the outcome in a :class:`VerificationReport`.

Every random instance is built from ``numpy.random.default_rng([seed, index])`` so a
failing record can be replayed from the parameters stored with it.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Callable

import numpy as np

from ._bits import iter_bits, to_mask
from .bipartization import (
    edge_bipartization, edge_bipartization_bruteforce, is_edge_bipartizer, is_transversal,
    maxcut_exact, oct_bruteforce, oct_exact,
)
from .core import CoreCertificate, check_common_neighborhood_bound, grow_strong_core, verify_core
from .decomposition import (
    DiagnosticFailure, balance_ok, certifies_free_of_odd_cycle, decompose, threshold_edges,
    verify_decomposition,
)
from .families import (
    GENERATOR, make_cycle, make_planted, make_tstar, make_turan, tstar_gamma2, turan_edges,
)
from .formats import to_graph6
from .graph import Graph, min_degree_peel, two_color
from .parity import shortest_odd_cycle

SUITES = ("formulas", "solvers", "decomposition", "cores", "lemmas", "turan")
PLANTED_SIZE_LISTS = ([2], [3], [2, 2], [3, 2], [4])


@dataclass
class CheckRecord:
    name: str
    params: dict[str, Any]
    expected: Any
    observed: Any
    passed: bool
    witness: Any = None

    def to_json(self) -> dict:
        return {
            "name": self.name, "params": self.params, "expected": self.expected,
            "observed": self.observed, "passed": self.passed, "witness": self.witness,
        }


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    wall_time: float = 0.0
    generator: str = GENERATOR
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, params: dict, expected: Any, observed: Any,
            passed: bool | None = None, witness: Any = None) -> CheckRecord:
        if passed is None:
            passed = expected == observed
        if not passed and witness is None:
            witness = {"replay": params}
        rec = CheckRecord(name, params, expected, observed, bool(passed), witness)
        self.records.append(rec)
        return rec

    def extend(self, other: "VerificationReport") -> None:
        self.records += other.records
        self.notes += [n for n in other.notes if n not in self.notes]

    @property
    def summary(self) -> dict[str, int]:
        failed = sum(1 for r in self.records if not r.passed)
        return {"total": len(self.records), "passed": len(self.records) - failed, "failed": failed}

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self, prefix: str = "") -> list[CheckRecord]:
        return [r for r in self.records if not r.passed and r.name.startswith(prefix)]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "summary": self.summary,
            "wall_time": round(self.wall_time, 3),
            "generator": self.generator,
            "notes": self.notes,
            "records": [r.to_json() for r in self.records],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, default=str)


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    iu = np.triu_indices(n, 1)
    keep = rng.random(iu[0].size) < p
    return Graph(n, zip(iu[0][keep].tolist(), iu[1][keep].tolist()))


def _random_graph_m(rng: np.random.Generator, n: int, m: int) -> Graph:
    iu = np.triu_indices(n, 1)
    pick = rng.choice(iu[0].size, size=m, replace=False)
    return Graph(n, zip(iu[0][pick].tolist(), iu[1][pick].tolist()))


# -- formulas (criterion 1) ---------------------------------------------------------


def suite_formulas(report: VerificationReport, rs=range(1, 7), ns=(20, 50, 100, 500, 2000)) -> None:
    for r in rs:
        for n in ns:
            if n - r + 1 < 2:
                continue
            g = make_tstar(r, n)
            expected = (n - r + 1) ** 2 // 4 + comb(r, 2)
            report.add("tstar-edges", {"r": r, "n": n}, expected, g.m)
            report.add("threshold-formula", {"r": r, "n": n}, expected, threshold_edges(n, r))
            if r >= 2:
                report.add("turan-edges", {"r": r, "n": n}, turan_edges(r, n), make_turan(r, n).m)


# -- solvers (criteria 2 and 5) -----------------------------------------------------


def suite_tstar_values(report: VerificationReport, rs=(3, 4, 5), ns=range(14, 25)) -> None:
    for r in rs:
        for n in ns:
            g = make_tstar(r, n)
            d2 = oct_exact(g)
            report.add("tstar-d2", {"r": r, "n": n}, r - 1, d2.value,
                       passed=d2.value == r - 1 and is_transversal(g, d2.witness))
            g2 = edge_bipartization(g)
            report.add("tstar-gamma2", {"r": r, "n": n}, tstar_gamma2(r), g2.value,
                       passed=g2.value == tstar_gamma2(r) and is_edge_bipartizer(g, g2.witness))


def _compare_oct(g: Graph) -> tuple[bool, Any]:
    fast, slow = oct_exact(g), oct_bruteforce(g)
    ok = fast.value == slow.value and is_transversal(g, fast.witness) and len(fast.witness) == fast.value
    return ok, (fast.value, slow.value)


def suite_solver_oracles(report: VerificationReport, exhaustive_n: int = 6, random_count: int = 1000,
                         random_n=(7, 12), edge_count: int = 1000, max_m: int = 18, seed: int = 0) -> None:
    # every labeled graph on n <= exhaustive_n vertices
    for n in range(1, exhaustive_n + 1):
        pairs = list(combinations(range(n), 2))
        bad = []
        for code in range(1 << len(pairs)):
            g = Graph(n, (pairs[i] for i in iter_bits(code)))
            ok, vals = _compare_oct(g)
            if not ok:
                bad.append({"graph6": to_graph6(g), "oct_exact": vals[0], "oct_bruteforce": vals[1]})
        report.add("oct-exhaustive", {"n": n, "instances": 1 << len(pairs)}, 0, len(bad),
                   witness=bad[:5] or None)
    lo, hi = random_n
    bad = []
    for i in range(random_count):
        rng = _rng(seed, i)
        n = int(rng.integers(lo, hi + 1))
        g = _random_graph(rng, n, float(rng.uniform(0.15, 0.85)))
        ok, vals = _compare_oct(g)
        if not ok:
            bad.append({"seed": [seed, i], "graph6": to_graph6(g), "values": vals})
    report.add("oct-random", {"count": random_count, "n": list(random_n), "seed": seed}, 0, len(bad),
               witness=bad[:5] or None)
    bad_edge, bad_identity = [], []
    for i in range(edge_count):
        rng = _rng(seed + 1, i)
        n = int(rng.integers(3, 11))
        m = int(rng.integers(0, min(max_m, comb(n, 2)) + 1))
        g = _random_graph_m(rng, n, m)
        fast, slow = edge_bipartization(g), edge_bipartization_bruteforce(g)
        if fast.value != slow.value or not is_edge_bipartizer(g, fast.witness):
            bad_edge.append({"seed": [seed + 1, i], "graph6": to_graph6(g), "values": [fast.value, slow.value]})
        if g.m - maxcut_exact(g)[0] != slow.value:
            bad_identity.append({"seed": [seed + 1, i], "graph6": to_graph6(g)})
    params = {"count": edge_count, "max_m": max_m, "seed": seed + 1}
    report.add("gamma2-random", params, 0, len(bad_edge), witness=bad_edge[:5] or None)
    report.add("maxcut-identity", params, 0, len(bad_identity), witness=bad_identity[:5] or None)


# -- decomposition (criteria 3 and 4) -------------------------------------------------


def suite_regime(report: VerificationReport, r: int = 3, k: int = 4, n: int = 2000) -> None:
    params = {"r": r, "k": k, "n": n}
    g = make_tstar(r, n)
    d = decompose(g, k, r)
    if isinstance(d, DiagnosticFailure):
        report.add("regime-decompose", params, "decomposition", d.stage, passed=False, witness=d.to_json())
        return
    report.add("regime-outside-count", params, r - 1, d.outside_count)
    report.add("regime-equality", params, True, d.equality)
    report.add("regime-balance", params, True, balance_ok(n, r, len(d.V1)) and balance_ok(n, r, len(d.V2)),
               witness=None if balance_ok(n, r, len(d.V1)) else {"V1": len(d.V1), "V2": len(d.V2)})
    v = verify_decomposition(g, d, r)
    report.add("regime-verify", params, True, v.ok, witness=None if v.ok else v.to_json())
    report.add("regime-free-certificate", {**params, "length": 2 * k + 1}, True,
               certifies_free_of_odd_cycle(d, 2 * k + 1))
    report.notes.append(f"certificate-mode: C_{2 * k + 1}-freeness of T*({r},{n}) is certified by its block structure")


def planted_instance(seed: int, index: int) -> dict[str, Any]:
    """Parameters of planted instance ``index`` of the corpus generated from ``seed``."""
    rng = _rng(seed, index)
    a, b = (int(x) for x in rng.integers(200, 401, size=2))
    sizes = PLANTED_SIZE_LISTS[int(rng.integers(len(PLANTED_SIZE_LISTS)))]
    outside = sum(s - 1 for s in sizes)
    r = outside + 1 + int(rng.integers(2))  # sometimes leave slack so equality must be false
    return {
        "a": a, "b": b, "sizes": list(sizes), "anchor_policy": ("distinct", "chain")[index % 2],
        "seed": int(rng.integers(2**63)), "r": r, "k": -(-(r + 4) // 2),
    }


def suite_planted(report: VerificationReport, count: int = 100, seed: int = 0) -> None:
    for i in range(count):
        p = planted_instance(seed, i)
        g, truth = make_planted(p["a"], p["b"], p["sizes"], p["anchor_policy"], p["seed"])
        params = {"corpus_seed": seed, "index": i, **p}
        d = decompose(g, p["k"], p["r"])
        if isinstance(d, DiagnosticFailure):
            report.add("planted", params, truth.outside_count, None, passed=False, witness=d.to_json())
            continue
        v = verify_decomposition(g, d, p["r"])
        eq_ok = d.outside_count == p["r"] - 1 or not d.equality
        ok = d.outside_count == truth.outside_count and v.ok and eq_ok
        report.add("planted", params, truth.outside_count, d.outside_count, passed=ok,
                   witness=None if ok else {"verdict": v.to_json(), "equality": d.equality})


# -- cores (criterion 6) --------------------------------------------------------------


def path_parities(g: Graph, S: int, max_order: int) -> dict[tuple[int, int], set[bool]]:
    """Exhaustive oracle: for each pair in S, the order parities (True = even) of simple
    paths inside G[S] with at most ``max_order`` vertices."""
    adj = g.adj
    found: dict[tuple[int, int], set[bool]] = {}

    def walk(start: int, v: int, visited: int, order: int) -> None:
        if v != start:
            found.setdefault((min(start, v), max(start, v)), set()).add(order % 2 == 0)
        if order == max_order:
            return
        for w in iter_bits(adj[v] & S & ~visited):
            walk(start, w, visited | 1 << w, order + 1)

    for s in iter_bits(S):
        walk(s, s, 1 << s, 1)
    return found


def _expected_core_outcome(verts: list[int], parities, strong: bool):
    for pair in combinations(verts, 2):
        got = parities.get(pair, set())
        if True not in got:
            return pair, "even"
        if strong and False not in got:
            return pair, "odd"
    return None


def _witness_valid(g: Graph, S: int, x: int, y: int, path, even: bool, max_order: int) -> bool:
    vs = path.vertices
    return (vs[0] == x and vs[-1] == y and len(set(vs)) == len(vs) and len(vs) <= max_order
            and (len(vs) % 2 == 0) == even and all(S >> v & 1 for v in vs)
            and all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)))


def suite_cores(report: VerificationReport, count: int = 500, max_s: int = 9, seed: int = 0) -> None:
    bad = []
    for i in range(count):
        rng = _rng(seed + 2, i)
        n = int(rng.integers(4, 13))
        g = _random_graph(rng, n, float(rng.uniform(0.2, 0.7)))
        size = int(rng.integers(2, min(max_s, n) + 1))
        verts = sorted(rng.choice(n, size=size, replace=False).tolist())
        k = int(rng.integers(1, 6))
        strong = bool(rng.integers(2))
        S = to_mask(verts)
        expected = _expected_core_outcome(verts, path_parities(g, S, 2 * k), strong)
        res = verify_core(g, verts, k, strong)
        if isinstance(res, CoreCertificate):
            ok = expected is None and all(
                _witness_valid(g, S, x, y, ev, True, 2 * k)
                and (not strong or _witness_valid(g, S, x, y, od, False, 2 * k))
                for (x, y), (ev, od) in res.witnesses.items())
        else:
            ok = expected == (res.pair, res.missing)
        if not ok:
            bad.append({"seed": [seed + 2, i], "graph6": to_graph6(g), "S": verts, "k": k, "strong": strong})
    report.add("core-oracle", {"count": count, "max_s": max_s, "seed": seed + 2}, 0, len(bad),
               witness=bad[:5] or None)
    for L in (3, 5, 7, 9):
        c = make_cycle(L)
        for k in range((L + 1) // 2, L + 1):
            res = verify_core(c, range(L), k, strong=True)
            report.add("odd-cycle-core", {"L": L, "k": k}, True, isinstance(res, CoreCertificate),
                       witness=None if res else {"pair": res.pair, "missing": res.missing})
    g = make_tstar(3, 50)
    cert = grow_strong_core(g, shortest_odd_cycle(g), 4)
    triangle = sorted([0, 48, 49])
    report.add("tstar-core", {"r": 3, "n": 50, "k": 4}, triangle, list(cert.vertices))


# -- lemmas (criterion 7) -----------------------------------------------------------


def triangle_free_graph(rng: np.random.Generator, n: int) -> Graph:
    """Random triangle-free graph: scan the pairs in random order and keep an edge when
    its ends have no common neighbour, stopping after a random number of edges."""
    pairs = list(combinations(range(n), 2))
    order = rng.permutation(len(pairs))
    target = int(rng.integers(n, 2 * n + 1))
    adj = [0] * n
    m = 0
    for idx in order:
        u, v = pairs[idx]
        if adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        m += 1
        if m == target:
            break
    return Graph.from_adjacency(adj)


def suite_lemmas(report: VerificationReport, peel_count: int = 1000, claim_count: int = 500,
                 pair_budget: int = 10_000, seed: int = 0) -> None:
    bad = []
    for i in range(peel_count):
        rng = _rng(seed + 3, i)
        n = int(rng.integers(2, 41))
        g = _random_graph(rng, n, float(rng.uniform(0.02, 0.9)))
        if g.m == 0:
            g = g.with_edges([(0, 1)])
        try:
            h = min_degree_peel(g, Fraction(g.m, g.n))
        except RuntimeError:
            bad.append({"seed": [seed + 3, i], "graph6": to_graph6(g), "empty": True})
            continue
        hg = h.graph
        if hg.n == 0 or min(hg.degrees()) * g.n < g.m:
            bad.append({"seed": [seed + 3, i], "graph6": to_graph6(g)})
    report.add("peel-min-degree", {"count": peel_count, "seed": seed + 3}, 0, len(bad), witness=bad[:5] or None)

    bad = []
    made = attempts = 0
    while made < claim_count:
        rng = _rng(seed + 4, attempts)
        attempts += 1
        g = triangle_free_graph(rng, int(rng.integers(5, 17)))
        cyc = shortest_odd_cycle(g)
        if cyc is None:
            continue
        made += 1
        cmask = to_mask(cyc.vertices)
        over = [v for v in range(g.n) if not cmask >> v & 1 and (g.adj[v] & cmask).bit_count() > 2]
        chords = g.edges_within(cmask) - cyc.length
        if cyc.length < 5 or over or chords:
            bad.append({"seed": [seed + 4, attempts - 1], "graph6": to_graph6(g),
                        "cycle": list(cyc.vertices), "vertices": over, "chords": chords})
    report.add("shortest-odd-cycle-neighbours", {"count": claim_count, "seed": seed + 4}, 0, len(bad),
               witness=bad[:5] or None)

    g = make_tstar(3, 2000)
    viol = check_common_neighborhood_bound(g, 4, pair_budget, seed=seed + 5)
    report.add("common-neighbourhood", {"r": 3, "n": 2000, "k": 4, "pairs": pair_budget, "seed": seed + 5},
               0, len(viol), witness=[v.__dict__ for v in viol[:5]] or None)


# -- Turan number at tiny scale (criterion 8) ---------------------------------------


def _closes_cycle(adj, u: int, v: int, length: int) -> bool:
    """Whether G + uv would contain a cycle with ``length`` vertices through uv, i.e. G has
    a u-v path with ``length - 1`` edges."""
    need = length - 1

    def dfs(x: int, visited: int, used: int) -> bool:
        if used == need - 1:
            return bool(adj[x] >> v & 1)
        for w in iter_bits(adj[x] & ~visited & ~(1 << v)):
            if dfs(w, visited | 1 << w, used + 1):
                return True
        return False

    return dfs(u, 1 << u | 1 << v, 0)


def cycle_free_graphs_with_at_least(n: int, length: int, min_edges: int) -> list[tuple[int, ...]]:
    """All labeled graphs on n vertices without a ``length``-cycle and with at least
    ``min_edges`` edges (adjacency bitsets).

    Edges are decided pair by pair; adding an edge only creates cycles, so a branch is
    cut as soon as the pair would close a forbidden cycle or too few pairs remain.
    """
    pairs = list(combinations(range(n), 2))
    adj = [0] * n
    out: list[tuple[int, ...]] = []

    def rec(i: int, m: int) -> None:
        if m + len(pairs) - i < min_edges:
            return
        if i == len(pairs):
            out.append(tuple(adj))
            return
        u, v = pairs[i]
        if not _closes_cycle(adj, u, v, length):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rec(i + 1, m + 1)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        rec(i + 1, m)

    rec(0, 0)
    return out


def is_balanced_complete_bipartite(g: Graph) -> bool:
    res = two_color(g.adj, g.all_vertices)
    if res[0] is None:
        return False
    a, b = res[0].bit_count(), res[1].bit_count()
    return abs(a - b) <= 1 and g.m == a * b


def suite_turan(report: VerificationReport, ns=(6, 7), k: int = 2) -> None:
    length = 2 * k + 1
    for n in ns:
        params = {"n": n, "k": k}
        target = n * n // 4
        graphs = cycle_free_graphs_with_at_least(n, length, target)
        sizes = [sum(a.bit_count() for a in adj) // 2 for adj in graphs]
        top = max(sizes, default=None)
        report.add("turan-max-edges", params, target, top)
        extremal = [Graph.from_adjacency(list(adj), check=False) for adj, s in zip(graphs, sizes) if s == top]
        others = [g for g in extremal if not is_balanced_complete_bipartite(g)]
        report.add("turan-unique-extremal", params, 0, len(others),
                   witness={"extremal_labeled": len(extremal), "not_complete_bipartite": len(others),
                            "examples": [to_graph6(g) for g in others[:3]]} if others else None)


# -- driver ------------------------------------------------------------------------------


def _solvers(report, **kw):
    tstar_keys = {"rs", "ns"}
    suite_tstar_values(report, **{k: v for k, v in kw.items() if k in tstar_keys})
    suite_solver_oracles(report, **{k: v for k, v in kw.items() if k not in tstar_keys})


def _decomposition(report, count: int = 100, seed: int = 0, regime: bool = True):
    if regime:
        suite_regime(report)
    suite_planted(report, count=count, seed=seed)


_RUNNERS: dict[str, Callable[..., None]] = {
    "formulas": suite_formulas,
    "solvers": _solvers,
    "decomposition": _decomposition,
    "cores": suite_cores,
    "lemmas": suite_lemmas,
    "turan": suite_turan,
}


def run_suite(name: str, **params) -> VerificationReport:
    """Run one named suite (or ``"all"``); failures are report content, not exceptions."""
    if name == "all":
        report = VerificationReport("all")
        t0 = time.perf_counter()
        for s in SUITES:
            report.extend(run_suite(s))
        report.wall_time = time.perf_counter() - t0
        return report
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    report = VerificationReport(name)
    t0 = time.perf_counter()
    _RUNNERS[name](report, **params)
    report.wall_time = time.perf_counter() - t0
    return report
