import networkx as nx
import pytest

from oddstab import (
    FamilySpec, VerificationReport, biconnected_components, has_cycle_of_length, is_bipartite,
    make_blowup_c5, make_complete_bipartite, make_planted, make_tstar, make_turan, run_suite,
    shortest_odd_cycle, threshold_edges, to_graph6, turan_edges,
)
from oddstab.families import make_random
from oddstab.harness import cycle_free_graphs_with_at_least, planted_instance
from oracles import cycle_free_extremal_counts, to_nx


def test_tstar_examples():
    g = make_tstar(3, 20)
    assert g.m == 84 == threshold_edges(20, 3)
    for n in (2, 7, 10):
        assert nx.is_isomorphic(to_nx(make_tstar(1, n)), nx.complete_bipartite_graph(n // 2, (n + 1) // 2))
    blocks = biconnected_components(make_tstar(4, 12)).blocks
    shapes = sorted((len(b), make_tstar(4, 12).edges_within(sum(1 << v for v in b))) for b in blocks)
    assert shapes == [(4, 6), (9, 20)]


@pytest.mark.parametrize("r, n", [(2, 9), (3, 20), (4, 13), (6, 30)])
def test_tstar_shared_vertex_on_larger_side(r, n):
    g = make_tstar(r, n)
    clique_only = set(range(n - r + 1, n))
    base = set(range(n - r + 1))
    both = [v for v in range(n) if set(g.neighbors(v)) & (base - {0}) and set(g.neighbors(v)) & clique_only]
    assert both == [0]
    color = is_bipartite(g.induced(sorted(base)).graph).coloring
    side0 = [v for v in base if color[v] == color[0]]
    assert len(side0) == (n - r + 2) // 2


@pytest.mark.parametrize("r, n", [(0, 5), (6, 5), (5, 5)])
def test_tstar_rejects_bad_parameters(r, n):
    with pytest.raises(ValueError):
        make_tstar(r, n)


def test_turan_and_bipartite_families():
    assert make_turan(2, 9).m == 20
    assert make_complete_bipartite(3, 3).m == 9
    for r in range(1, 6):
        for n in range(r, 25):
            g = make_turan(r, n)
            assert g.m == turan_edges(r, n) == nx.turan_graph(n, r).number_of_edges()


def test_c5_blowup():
    c5 = make_blowup_c5([1, 1, 1, 1, 1])
    assert nx.is_isomorphic(to_nx(c5), nx.cycle_graph(5))
    g = make_blowup_c5([2, 3, 1, 4, 2])
    assert g.m == 2 * 3 + 3 * 1 + 1 * 4 + 4 * 2 + 2 * 2
    assert shortest_odd_cycle(g).length == 5
    with pytest.raises(ValueError):
        make_blowup_c5([1, 1, 1, 1])


def test_planted_examples():
    g, truth = make_planted(300, 300, [3, 2], "distinct", 5)
    assert truth.outside_count == 3 and g.n == 603
    g, truth = make_planted(10, 10, [], "distinct", 5)
    assert truth.outside_count == 0 and is_bipartite(g) and g.m == 100
    g, truth = make_planted(50, 50, [4], "chain", 5)
    assert truth.outside_count == 3 and len(truth.suspensions) == 1
    assert len(truth.suspensions[0].vertices) == 4


def test_planted_chain_nests_suspensions():
    g, truth = make_planted(12, 12, [3, 3, 2], "chain", 2)
    s1, s2, s3 = truth.suspensions
    assert s1.anchor in truth.V1 + truth.V2
    assert s2.anchor in s1.vertices and s2.anchor != s1.anchor
    assert s3.anchor in s2.vertices and s3.anchor != s2.anchor


def test_planted_errors():
    with pytest.raises(ValueError, match="at least 2"):
        make_planted(5, 5, [1], "distinct", 0)
    with pytest.raises(ValueError, match="anchor exhaustion"):
        make_planted(1, 1, [2, 2, 2], "distinct", 0)
    with pytest.raises(ValueError, match="anchor exhaustion"):
        make_planted(1, 1, [4], "chain", 0)
    with pytest.raises(ValueError):
        make_planted(5, 5, [2], "spiral", 0)


def test_generation_is_deterministic():
    specs = [
        FamilySpec("random", {"n": 40, "p": 0.3, "seed": 11}),
        FamilySpec("planted", {"a": 30, "b": 20, "sizes": [3, 2], "anchor_policy": "chain", "seed": 3}),
        FamilySpec("t-star", {"r": 4, "n": 30}),
        FamilySpec("turan", {"r": 3, "n": 10}),
        FamilySpec("c5-blowup", {"sizes": [1, 2, 3, 2, 1]}),
        FamilySpec("complete-bipartite", {"a": 2, "b": 5}),
    ]
    for spec in specs:
        assert to_graph6(spec.build()) == to_graph6(spec.build())
    assert to_graph6(make_random(40, 0.3, 11)) != to_graph6(make_random(40, 0.3, 12))
    with pytest.raises(ValueError):
        FamilySpec("petersen").build()


def test_tstar_free_of_long_odd_cycles_at_small_scale():
    for r in range(3, 7):
        for n in (r + 8, 30):
            g = make_tstar(r, n)
            for k in range(2, 9):
                if 2 * k >= r + 4 and 2 * k + 1 <= n:
                    assert has_cycle_of_length(g, 2 * k + 1) is None


def test_report_bookkeeping():
    rep = VerificationReport("demo")
    rep.add("a", {"x": 1}, 3, 3)
    rec = rep.add("b", {"x": 2}, 3, 4)
    assert rep.summary == {"total": 2, "passed": 1, "failed": 1}
    assert not rep.ok and rec.witness == {"replay": {"x": 2}}
    js = rep.to_json()
    assert js["summary"]["failed"] == 1 and "PCG64" in js["generator"]


def test_small_suites_pass():
    assert run_suite("formulas", ns=(20, 50)).ok
    rep = run_suite("solvers", rs=(3,), ns=(14,), exhaustive_n=4, random_count=20, edge_count=20)
    assert [r.name for r in rep.failures()] == ["tstar-d2"]  # the clique needs only r-2 deletions
    assert run_suite("cores", count=30).ok
    assert run_suite("lemmas", peel_count=50, claim_count=30, pair_budget=500).ok
    rep = run_suite("decomposition", count=4, regime=False)
    assert rep.ok and rep.summary["total"] == 4
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_planted_corpus_parameters():
    p = planted_instance(0, 3)
    assert p == planted_instance(0, 3)
    assert 200 <= p["a"] <= 400 and 200 <= p["b"] <= 400
    assert p["anchor_policy"] == "chain"
    outside = sum(s - 1 for s in p["sizes"])
    assert p["r"] in (outside + 1, outside + 2) and 2 * p["k"] >= p["r"] + 4


@pytest.mark.parametrize("n", [5, 6, 7])
def test_cycle_free_search_matches_full_enumeration(n):
    top, count = cycle_free_extremal_counts(n, 5)
    graphs = cycle_free_graphs_with_at_least(n, 5, top)
    assert len(graphs) == count
    assert all(sum(a.bit_count() for a in adj) // 2 == top for adj in graphs)


def test_turan_suite_records():
    rep = run_suite("turan")
    by = {(r.name, r.params["n"]): r for r in rep.records}
    assert by["turan-max-edges", 6].passed and by["turan-max-edges", 7].passed
    # frozen from full enumeration: 85 and 105 labeled extremal graphs, of which only
    # the 10 and 35 labeled copies of K_{3,3} and K_{3,4} are bipartite
    assert by["turan-unique-extremal", 6].witness["extremal_labeled"] == 85
    assert by["turan-unique-extremal", 6].observed == 75
    assert by["turan-unique-extremal", 7].witness["extremal_labeled"] == 105
    assert by["turan-unique-extremal", 7].observed == 70
