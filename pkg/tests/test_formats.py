import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from oddstab import Graph, GraphParseError, from_edge_list, from_graph6, read_graph, to_edge_list, to_graph6, write_graph
from oddstab.families import make_cycle, make_random
from oddstab.formats import guess_format, parse_graph
from oracles import graphs, to_nx


def _nx_g6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_agrees_with_networkx_on_random_graphs():
    rng = np.random.default_rng(7)
    for i in range(100):
        g = make_random(int(rng.integers(0, 80)), float(rng.uniform(0, 1)), seed=i)
        s = to_graph6(g)
        assert s == _nx_g6(g)
        back = nx.from_graph6_bytes(s.encode())
        assert sorted(map(tuple, map(sorted, back.edges()))) == list(g.edges())
        assert from_graph6(s) == g


@pytest.mark.parametrize("n", [0, 1, 62, 63, 64, 300])
def test_graph6_size_headers(n):
    g = make_cycle(n) if n >= 3 else Graph(n)
    s = to_graph6(g)
    assert s == _nx_g6(g)
    assert from_graph6(s) == g


def test_graph6_frozen_values():
    # networkx encodings of C5 and K4
    assert to_graph6(make_cycle(5)) == "Dhc"
    assert to_graph6(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])) == "C~"
    assert from_graph6(">>graph6<<Dhc\n") == make_cycle(5)


@pytest.mark.parametrize("text, fragment", [
    ("", "empty"),
    ("D h", "byte 1"),
    ("Dh", "expected 2"),
    ("Dhcc", "extra"),
    ("Dhd", "padding"),
    ("~??", "truncated"),
])
def test_graph6_errors(text, fragment):
    with pytest.raises(GraphParseError, match=fragment):
        from_graph6(text)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=0, max_n=12))
def test_round_trips(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_edge_list(to_edge_list(g)) == g


def test_edge_list_parsing():
    g = from_edge_list("# comment\nn=5\n0 1\n\n1 2  \n# another\n")
    assert g.n == 5 and list(g.edges()) == [(0, 1), (1, 2)]
    assert from_edge_list("0 3\n").n == 4


@pytest.mark.parametrize("text, fragment", [
    ("0 0\n", "line 1: self-loop"),
    ("0 1\n1 0\n", "line 2: duplicate"),
    ("n=3\n0 3\n", "line 2: vertex 3"),
    ("0 1 2\n", "line 1: expected"),
    ("a b\n", "non-integer"),
    ("n=x\n", "header"),
])
def test_edge_list_errors(text, fragment):
    with pytest.raises(GraphParseError, match=fragment):
        from_edge_list(text)


def test_format_detection_and_files(tmp_path):
    g = make_cycle(7)
    for name in ("c.g6", "c.edges", "c.txt"):
        write_graph(g, tmp_path / name)
        assert read_graph(tmp_path / name) == g
    (tmp_path / "plain").write_text(to_graph6(g) + "\n")
    assert guess_format(tmp_path / "plain", to_graph6(g)) == "graph6"
    assert read_graph(tmp_path / "plain") == g
    (tmp_path / "plain2").write_text(to_edge_list(g))
    assert read_graph(tmp_path / "plain2") == g
    with pytest.raises(ValueError):
        parse_graph("Dhc", "sparse6")
