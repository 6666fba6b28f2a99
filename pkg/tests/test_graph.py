from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddstab import Graph, biconnected_components, is_bipartite, min_degree_peel
from oddstab.families import make_cycle, make_tstar
from oracles import graphs, is_cycle, to_nx


def test_construction_and_queries():
    g = Graph(4, [(2, 1), (0, 1), (3, 2)])
    assert g.n == 4 and g.m == 3
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == (0, 2)
    assert g.degrees() == [1, 2, 2, 1]
    assert g.has_edge(1, 0) and not g.has_edge(0, 3)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)], [(-1, 0)]])
def test_invalid_edges_rejected(edges):
    with pytest.raises(ValueError):
        Graph(3, edges)


def test_induced_keeps_labels():
    g = make_cycle(6)
    sub = g.induced([1, 2, 3, 5])
    assert sub.graph.n == 4 and sub.graph.m == 2
    assert sub.to_parent([0, 3]) == [1, 5]
    assert sub.to_parent_mask(0b11) == 0b110


def test_edge_editing_returns_new_graph():
    g = make_cycle(5)
    h = g.without_edges([(0, 1)])
    assert g.m == 5 and h.m == 4
    assert h.with_edges([(1, 0)]) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_bipartite_witness_matches_networkx(g):
    w = is_bipartite(g)
    assert bool(w) == nx.is_bipartite(to_nx(g))
    if w:
        assert all(w.coloring[u] != w.coloring[v] for u, v in g.edges())
    else:
        assert len(w.odd_walk) % 2 == 1 and is_cycle(g, w.odd_walk)


def _nx_blocks(g):
    return {frozenset(b) for b in nx.biconnected_components(to_nx(g))}


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=11))
def test_blocks_match_networkx(g):
    tree = biconnected_components(g)
    ours = {frozenset(b) for b in tree.blocks if len(b) > 1}
    assert ours == _nx_blocks(g)
    assert set(tree.cut_vertices) == set(nx.articulation_points(to_nx(g)))
    isolated = {v for v in range(g.n) if g.degree(v) == 0}
    assert {next(iter(b)) for b in tree.blocks if len(b) == 1} == isolated


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=10), st.data())
def test_block_path_chains_blocks(g, data):
    tree = biconnected_components(g)
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    segs = tree.block_path(x, y)
    if not nx.has_path(to_nx(g), x, y):
        assert segs is None
        return
    assert segs[0][1] == x and segs[-1][2] == y
    for (b, s, t), (b2, s2, _) in zip(segs, segs[1:]):
        assert t == s2 and t in tree.cut_vertices
    for b, s, t in segs:
        assert s in tree.blocks[b] and t in tree.blocks[b]
    # every simple x-y path uses exactly these blocks
    blocks = [set(tree.blocks[b]) for b, _, _ in segs]
    for i, path in enumerate(nx.all_simple_paths(to_nx(g), x, y)):
        for u, v in zip(path, path[1:]):
            assert any(u in B and v in B for B in blocks)
        if i == 20:
            break


def test_tstar_blocks():
    g = make_tstar(4, 12)
    sizes = sorted(len(b) for b in biconnected_components(g).blocks)
    assert sizes == [4, 9]
    assert set(biconnected_components(g).cut_vertices) == {0}


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_peel_at_average_half_degree(g):
    if g.m == 0:
        return
    h = min_degree_peel(g, Fraction(g.m, g.n))
    assert h.graph.n > 0
    assert min(h.graph.degrees()) * g.n >= g.m


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=12), st.integers(0, 5))
def test_integer_peel_is_the_k_core(g, k):
    h = min_degree_peel(g, k)
    assert set(h.vertices) == set(nx.k_core(to_nx(g), k).nodes)


def test_peel_threshold_forms():
    g = make_cycle(5).with_edges([(0, 2)])
    assert min_degree_peel(g, (3, 1)).graph.n == 0
    assert set(min_degree_peel(g, Fraction(2)).vertices) == set(range(5))
    with pytest.raises(ValueError):
        min_degree_peel(g, -1)
