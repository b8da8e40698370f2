import json
import os
import subprocess
import sys

import pytest

from packcolor.cli import run
from packcolor.gadgets import GADGETS, gadget_g1
from packcolor.graph import format_graph_text, parse_graph_text


def cli(*args, stdin=None, env=None):
    proc = subprocess.run([sys.executable, "-m", "packcolor", *args], input=stdin, capture_output=True,
                          text=True, env=env, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def ex13(tmp_path):
    p = tmp_path / "ex13.txt"
    p.write_text(cli("gadget", "ex13")[1])
    return p


def test_solve_unsat_example(ex13):
    code, out, _ = cli("solve", "--sequence", "1,1,3", str(ex13))
    assert code == 1 and json.loads(out)["status"] == "UNSAT"


def test_color_then_verify_in_separate_processes(ex13, tmp_path):
    code, out, _ = cli("color", "--sequence", "1,1,2", str(ex13))
    assert code == 0
    col = tmp_path / "c.json"
    col.write_text(out)
    assert set(json.loads(out)["labels"]) == {"u1", "u2", "u3", "u4", "v1", "v2"}
    code, out, _ = cli("verify", "--coloring", str(col), str(ex13))
    assert code == 0 and json.loads(out)["ok"]


def test_pipe_h_into_dp():
    _, text, _ = cli("gadget", "h")
    code, out, _ = cli("solve", "--sequence", "1,2,2,4", "--engine", "dp", stdin=text)
    assert code == 1 and json.loads(out)["status"] == "UNSAT"


def test_gadget_round_trip():
    for name, make in GADGETS.items():
        code, out, _ = cli("gadget", name)
        assert code == 0
        g, labels = parse_graph_text(out)
        lg = make()
        assert g == lg.graph and g.edges == lg.graph.edges
        assert labels == lg.labels


def test_gadget_pendant():
    code, out, _ = cli("gadget", "g1", "--pendant")
    g, labels = parse_graph_text(out)
    assert g == gadget_g1(with_pendant=True).graph and "z6" in labels


def test_pin_by_label():
    _, text, _ = cli("gadget", "g1", "--pendant")
    code, out, _ = cli("solve", "--sequence", "1,1,2,5", "--pin", "z6=4", stdin=text)
    assert code == 1
    code, out, _ = cli("solve", "--sequence", "1,1,2,5", "--engine", "dp", stdin=text)
    payload = json.loads(out)
    assert code == 0 and payload["status"] == "SAT" and "coloring" in payload


def test_color_1124_and_feasible_verify(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(cli("gen", "--n", "40", "--seed", "3")[1])
    code, out, _ = cli("color", "--sequence", "1,1,2,4", str(g))
    assert code == 0
    c = tmp_path / "c.json"
    c.write_text(out)
    code, out, _ = cli("verify", "--feasible", "--coloring", str(c), str(g))
    assert code == 0 and json.loads(out)["violations"] == []


def test_verify_reports_violations(tmp_path, ex13):
    c = tmp_path / "bad.json"
    c.write_text(json.dumps({"sequence": [1, 1, 2], "colors": {str(v): 1 for v in range(6)}}))
    code, out, _ = cli("verify", "--coloring", str(c), str(ex13))
    assert code == 1 and not json.loads(out)["ok"]


def test_color_negative_and_usage_exits(tmp_path):
    path4 = tmp_path / "p.txt"
    path4.write_text("4 3\n0 1\n1 2\n2 3\n")
    assert cli("color", "--sequence", "1,1,2", str(path4))[0] == 1
    assert cli("color", "--sequence", "1,2,3", str(path4))[0] == 2
    _, pet, _ = cli("gadget", "petersen")
    assert cli("color", "--sequence", "1,1,2,4", stdin=pet)[0] == 1
    assert cli("recognize", stdin=pet)[0] == 1
    assert cli("solve", "--sequence", "1,1,2,2", "--engine", "dp", stdin=pet)[0] == 1
    assert cli("solve", "--sequence", "1,1,2,2", stdin=pet)[0] == 1


def test_input_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n")
    code, _, err = cli("recognize", str(bad))
    assert code == 2 and "error" in err
    assert cli("recognize", str(tmp_path / "missing.txt"))[0] == 2
    assert cli("solve", "--sequence", "2,1", str(bad))[0] == 2
    assert cli("gadget", "nope")[0] == 2
    assert cli()[0] == 2
    assert cli("solve", "--sequence", "1,1,2", "--pin", "x", stdin="2 1\n0 1\n")[0] == 2


def test_recognize_payload(ex13):
    code, out, _ = cli("recognize", str(ex13))
    data = json.loads(out)
    assert code == 0 and data["outerplanar"] and data["two_connected"]
    assert sorted(map(len, data["faces"])) == [3, 3, 4]


def test_pcn():
    code, out, _ = cli("pcn", stdin="3 3\n0 1\n1 2\n2 0\n")
    assert code == 0 and json.loads(out)["pcn"] == 3
    code, out, _ = cli("pcn", "--max", "2", stdin="3 3\n0 1\n1 2\n2 0\n")
    assert code == 1 and json.loads(out)["pcn"] is None


def test_timeouts_exit_3():
    _, text, _ = cli("gadget", "bigg")
    assert cli("solve", "--sequence", "1,1,2,5", "--budget", "0", stdin=text)[0] == 3
    env = dict(os.environ, PACKCOLOR_BUDGET="0")
    assert cli("solve", "--sequence", "1,1,2,5", stdin=text, env=env)[0] == 3
    assert cli("pcn", stdin=text, env=env)[0] == 3


def test_subdivide():
    code, out, _ = cli("subdivide", stdin="3 3\n0 1\n1 2\n2 0\n")
    g, labels = parse_graph_text(out)
    assert code == 0 and (g.n, g.m) == (6, 6)
    assert sorted(labels) == ["mid0_1", "mid0_2", "mid1_2"]


def test_gen_deterministic():
    a = cli("gen", "--n", "20", "--seed", "9", "--two-connected")[1]
    b = cli("gen", "--n", "20", "--seed", "9", "--two-connected")[1]
    assert a == b
    assert cli("recognize", stdin=a)[0] == 0


def test_run_in_process(capsys, tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text(format_graph_text(parse_graph_text("3 3\n0 1\n1 2\n2 0\n")[0]))
    assert run(["color", "--sequence", "1,1,2", str(p)]) == 0
    assert json.loads(capsys.readouterr().out)["sequence"] == [1, 1, 2]
    assert run(["--help"]) == 0
