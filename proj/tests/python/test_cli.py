import os
import subprocess

import pytest

CLI = os.environ.get("GCGT_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="GCGT_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_generate_make_check_decode(tmp_path):
    graph = tmp_path / "k6.txt"
    tests = tmp_path / "t.txt"
    assert run("generate-graph", "--family", "complete:6", "--out", str(graph)).returncode == 0
    assert graph.read_text().splitlines()[0] == "6 15"
    r = run("make-tests", "--graph", str(graph), "--method", "random", "--d", "1", "--tau", "60", "--seed", "2",
            "--out", str(tests))
    assert r.returncode == 0
    r = run("check-disjunct", "--tests", str(tests), "--d", "1")
    assert (r.returncode, r.stdout.strip()) == (0, "DISJUNCT")
    out = run("run-tests", "--tests", str(tests), "--defective", "4").stdout.strip()
    assert run("decode", "--tests", str(tests), "--outcomes", out).stdout.strip() == "4"


def test_non_disjunct_exit_code(tmp_path):
    tests = tmp_path / "t.txt"
    tests.write_text("3 2\n0 1\n1 2\n")
    r = run("check-disjunct", "--tests", str(tests), "--d", "1")
    assert r.returncode == 1
    assert r.stdout.strip() == "0 | 1"


def test_usage_errors():
    assert run("check-disjunct", "--d", "1").returncode == 2
    assert run("generate-graph", "--family", "fat_tree:5").returncode == 2
    assert run("experiment", "disjunct-prob", "--family", "complete:5", "--taus", "1").returncode == 2
    assert run("bogus").returncode == 2


def test_lab_rows():
    r = run("lab", "ruin", "--gamma", "0.5", "--a", "3", "--b", "1", "--trials", "1000", "--header")
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "lab,graph,params,trials,seed,empirical,bound,stderr"
    assert lines[1].split(",")[6] == "0.25"
    r = run("lab", "connectivity", "--family", "complete:16", "--p", "0.95", "--trials", "200")
    assert r.returncode == 0 and len(r.stdout.strip().splitlines()) == 1


def test_experiment_and_plot(tmp_path):
    csv = tmp_path / "out.csv"
    manifest = tmp_path / "m.json"
    args = ["experiment", "random-failures", "--family", "fat_tree:4", "--d", "1", "--taus", "0:20:10",
            "--trials", "10", "--seed", "3"]
    assert run(*args, "--out", str(csv), "--manifest", str(manifest)).returncode == 0
    assert run(*args, "--threads", "4").stdout == csv.read_text()
    assert '"master_seed": 3' in manifest.read_text()
    r = run("plot", "--csv", str(csv), "--out-dir", str(tmp_path / "plots"))
    assert r.returncode == 0
    svgs = list((tmp_path / "plots").glob("*.svg"))
    assert len(svgs) == 1
