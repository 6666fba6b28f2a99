import json
import subprocess
import sys

import pytest

from oddstab import read_graph, to_graph6
from oddstab.cli import main
from oddstab.families import make_cycle, make_tstar


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def tstar_file(tmp_path):
    path = tmp_path / "tstar.g6"
    path.write_text(to_graph6(make_tstar(3, 60)) + "\n")
    return path


def test_construct_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--family", "t-star", "--r", "3", "--n", "20")
    assert code == 0 and out.strip() == to_graph6(make_tstar(3, 20))
    target = tmp_path / "p.edges"
    code, _, _ = run(capsys, "construct", "--family", "planted", "--a", "30", "--b", "20",
                     "--sizes", "3,2", "--anchor-policy", "chain", "--seed", "4", "--out", "edges", "-o", str(target))
    assert code == 0 and read_graph(target).n == 53
    code, _, err = run(capsys, "construct", "--family", "turan", "--r", "3")
    assert code == 2 and "--n" in err
    code, _, err = run(capsys, "construct", "--family", "planted", "--a", "1", "--b", "1", "--sizes", "2,2,2")
    assert code == 2 and "anchor exhaustion" in err


def test_analyze(capsys, tstar_file):
    code, out, _ = run(capsys, "analyze", str(tstar_file))
    data = json.loads(out)
    assert code == 0
    assert data["n"] == 60 and data["odd_girth"] == 3 and not data["bipartite"]
    assert data["blocks"] == 2 and data["cut_vertices"] == [0]


def test_decompose_verify_and_bounds(capsys, tmp_path, tstar_file):
    cert = tmp_path / "cert.json"
    code, _, _ = run(capsys, "decompose", str(tstar_file), "--k", "4", "--r", "3", "--cert", str(cert))
    assert code == 0
    data = json.loads(cert.read_text())
    assert data["outside_count"] == 2 and data["equality"]
    code, out, _ = run(capsys, "verify-cert", str(tstar_file), str(cert), "--r", "3")
    assert code == 0 and json.loads(out)["accepted"]
    code, out, _ = run(capsys, "verify-cert", str(tstar_file), str(cert), "--r", "2")
    assert code == 1 and json.loads(out)["clause"] == "outside-bound"
    code, out, _ = run(capsys, "gamma2", str(tstar_file), "--cert", str(cert))
    assert code == 0 and json.loads(out)["value"] == 1 and not json.loads(out)["exact"]
    code, out, _ = run(capsys, "gamma2", str(tstar_file))
    assert code == 2
    code, out, _ = run(capsys, "check-free", str(tstar_file), "--length", "9", "--cert", str(cert))
    data = json.loads(out)
    assert code == 0 and data["free"] and data["certificate_says_free"]


def test_decompose_failure_exits_one(capsys, tmp_path):
    path = tmp_path / "c9.edges"
    path.write_text("\n".join(f"{i} {(i + 1) % 9}" for i in range(9)) + "\n")
    code, out, _ = run(capsys, "decompose", str(path), "--k", "2", "--r", "3")
    assert code == 1 and json.loads(out)["failure"]["stage"] == "odd-girth"


def test_d2_and_core(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(make_tstar(4, 14)))
    code, out, _ = run(capsys, "d2", str(path))
    assert code == 0 and json.loads(out)["value"] == 2
    code, out, _ = run(capsys, "d2", str(path), "--budget", "1")
    assert code == 1
    code, out, _ = run(capsys, "core", str(path), "--k", "4")
    assert code == 0 and json.loads(out)["vertices"] == [0, 11, 12, 13]
    code, out, _ = run(capsys, "core", str(path), "--k", "4", "--seed-cycle", "0,1,2")
    assert code == 1 and "not a cycle" in json.loads(out)["message"]


def test_check_free_finds_cycle(capsys, tmp_path):
    path = tmp_path / "c7.g6"
    path.write_text(to_graph6(make_cycle(7)))
    code, out, _ = run(capsys, "check-free", str(path), "--length", "7")
    assert code == 1 and len(json.loads(out)["cycle"]) == 7
    code, out, _ = run(capsys, "check-free", str(path), "--length", "5")
    assert code == 0


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("0 0\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "self-loop" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.g6"))
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["decompose"])
    assert exc.value.code == 2


def test_verify_theorem(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, _, err = run(capsys, "verify-theorem", "--suite", "formulas", "--param", "ns=[20, 50]",
                       "--report", str(report))
    data = json.loads(report.read_text())
    assert code == 0 and data["summary"]["failed"] == 0 and "checks passed" in err
    code, out, _ = run(capsys, "verify-theorem", "--suite", "solvers", "--param", "rs=[3]", "--param", "ns=[14]",
                       "--param", "exhaustive_n=3", "--param", "random_count=5", "--param", "edge_count=5")
    assert code == 1 and json.loads(out)["summary"]["failed"] == 1
    code, _, err = run(capsys, "verify-theorem", "--suite", "formulas", "--param", "bogus=1")
    assert code == 2


def test_entry_point_runs():
    res = subprocess.run([sys.executable, "-m", "oddstab.cli", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("oddstab ")
