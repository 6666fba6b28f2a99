"""Acceptance criteria 1-8, each at its stated tolerance and runtime budget."""

import time

import pytest

from oddstab.harness import (
    VerificationReport, suite_cores, suite_formulas, suite_lemmas, suite_planted, suite_regime,
    suite_solver_oracles, suite_tstar_values, suite_turan,
)


def _run(fn, **kw):
    rep = VerificationReport(fn.__name__)
    t0 = time.perf_counter()
    fn(rep, **kw)
    rep.wall_time = time.perf_counter() - t0
    return rep


def _describe(rep, *names):
    parts = []
    for name in names:
        recs = [r for r in rep.records if r.name == name]
        ok = sum(r.passed for r in recs)
        parts.append(f"{name} {ok}/{len(recs)}")
    return ", ".join(parts) + f", {rep.wall_time:.1f}s"


def _first_failures(rep, limit=3):
    return [(r.name, r.params, r.expected, r.observed, r.witness) for r in rep.failures()[:limit]]


def test_criterion_1_formulas(criterion_log):
    rep = _run(suite_formulas, rs=range(1, 7), ns=(20, 50, 100, 500, 2000))
    ok = rep.ok and rep.wall_time < 5
    criterion_log(1, ok, _describe(rep, "tstar-edges"))
    assert rep.ok, _first_failures(rep)
    assert rep.wall_time < 5


@pytest.mark.slow
def test_criterion_2_tstar_bipartization_values(criterion_log):
    rep = _run(suite_tstar_values, rs=(3, 4, 5), ns=range(14, 25))
    ok = rep.ok and rep.wall_time < 120
    detail = _describe(rep, "tstar-d2", "tstar-gamma2")
    if rep.failures("tstar-d2"):
        obs = sorted({(r.params["r"], r.observed) for r in rep.failures("tstar-d2")})
        detail += f"; d2 observed (r, value) {obs}"
    criterion_log(2, ok, detail)
    assert rep.wall_time < 120
    assert rep.ok, _first_failures(rep)


@pytest.mark.slow
def test_criterion_3_regime_instance(criterion_log):
    rep = _run(suite_regime, r=3, k=4, n=2000)
    ok = rep.ok and rep.wall_time < 60
    criterion_log(3, ok, _describe(rep, "regime-outside-count", "regime-equality", "regime-balance", "regime-verify"))
    assert rep.ok, _first_failures(rep)
    assert rep.wall_time < 60


@pytest.mark.slow
def test_criterion_4_planted_recovery(criterion_log):
    rep = _run(suite_planted, count=100, seed=0)
    ok = rep.ok and rep.wall_time < 300
    criterion_log(4, ok, _describe(rep, "planted"))
    assert rep.ok, _first_failures(rep)
    assert rep.wall_time < 300


@pytest.mark.slow
def test_criterion_5_solver_oracles(criterion_log):
    rep = _run(suite_solver_oracles, exhaustive_n=6, random_count=1000, random_n=(7, 12),
               edge_count=1000, max_m=18, seed=0)
    exhaustive = sum(r.params["instances"] for r in rep.records if r.name == "oct-exhaustive" and r.params["n"] == 6)
    ok = rep.ok and rep.wall_time < 600 and exhaustive == 2 ** 15
    detail = _describe(rep, "oct-exhaustive", "oct-random", "gamma2-random", "maxcut-identity")
    criterion_log(5, ok, detail + f"; n=6 covers {exhaustive} labeled graphs")
    assert exhaustive == 2 ** 15
    assert rep.ok, _first_failures(rep)
    assert rep.wall_time < 600


@pytest.mark.slow
def test_criterion_6_core_machinery(criterion_log):
    rep = _run(suite_cores, count=500, max_s=9, seed=0)
    ok = rep.ok and rep.wall_time < 120
    criterion_log(6, ok, _describe(rep, "core-oracle", "odd-cycle-core", "tstar-core"))
    assert rep.ok, _first_failures(rep)
    assert rep.wall_time < 120


@pytest.mark.slow
def test_criterion_7_lemma_properties(criterion_log):
    rep = _run(suite_lemmas, peel_count=1000, claim_count=500, pair_budget=10_000, seed=0)
    ok = rep.ok and rep.wall_time < 300
    criterion_log(7, ok, _describe(rep, "peel-min-degree", "shortest-odd-cycle-neighbours", "common-neighbourhood"))
    assert rep.ok, _first_failures(rep)
    assert rep.wall_time < 300


@pytest.mark.slow
def test_criterion_8_tiny_turan(criterion_log):
    rep = _run(suite_turan, ns=(6, 7), k=2)
    ok = rep.ok and rep.wall_time < 600
    detail = _describe(rep, "turan-max-edges", "turan-unique-extremal")
    for r in rep.failures("turan-unique-extremal"):
        w = r.witness
        detail += (f"; n={r.params['n']}: {w['not_complete_bipartite']} of {w['extremal_labeled']} "
                   f"extremal labeled graphs are not complete bipartite, e.g. {w['examples'][0]}")
    criterion_log(8, ok, detail)
    assert rep.wall_time < 600
    assert rep.ok, _first_failures(rep)
