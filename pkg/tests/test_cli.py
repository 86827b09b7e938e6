import json
import subprocess
import sys
from pathlib import Path

import pytest

from p2stable.cli import run
from p2stable.curvewt import CurveGerm
from p2stable.markov import MarkovTree
from p2stable.quotsing import CyclicQuotient
from p2stable.report import Report
from p2stable.surfcat import surface_from_json

DATA = Path(__file__).resolve().parent.parent / "data"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_markov_enumerate(capsys):
    code, out, _ = call(capsys, "markov", "enumerate", "--max", "29")
    assert code == 0
    for t in ["(1, 1, 1)", "(1, 1, 2)", "(1, 2, 5)", "(1, 5, 13)", "(2, 5, 29)"]:
        assert t in out
    assert "5 triples" in out


def test_markov_enumerate_json_roundtrip(capsys):
    code, out, _ = call(capsys, "markov", "enumerate", "--max", "200", "--json")
    data = json.loads(out)
    tree = MarkovTree.from_json(data)
    assert code == 0 and len(tree.triples) == 9 and len(tree.edges) == 8


def test_markov_check(capsys):
    assert call(capsys, "markov", "check", "1", "5", "13")[0] == 0
    assert call(capsys, "markov", "check", "1", "2", "3")[0] == 1


def test_sing_info(capsys):
    code, out, _ = call(capsys, "sing", "info", "25", "19", "--json")
    data = json.loads(out)
    assert code == 0
    assert CyclicQuotient.from_json(data["singularity"]) == CyclicQuotient(25, 4)
    assert data["zk_squared"] == "-4" and data["k2rho_change"] == "0"
    assert data["class_T"] == [1, 5, 4] and data["resolution"] == [-7, -2, -2, -2]


def test_sing_info_domain_error(capsys):
    code, _, err = call(capsys, "sing", "info", "4", "2")
    assert code == 1 and "coprime" in err


def test_sing_cycle(capsys):
    code, out, _ = call(capsys, "sing", "cycle", "--cycle=-2,-2,-2,-11,-2,-2,-2,-11", "--h1", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["krel_squared"] == "-18" and data["mu_minus"] == -1


def test_sing_cycle_degenerate(capsys):
    assert call(capsys, "sing", "cycle", "--cycle=-2,-2,-2")[0] == 1


def test_curve_quintic(capsys):
    code, out, _ = call(capsys, "curve", "test", "--degree", "5", "--germ", str(DATA / "quintic_a12.json"))
    assert code == 1
    assert "FAIL" in out and "(2,13)" in out and "26" in out and "25" in out


def test_curve_complete_square_json(capsys):
    code, out, _ = call(
        capsys, "curve", "test", "--degree", "5", "--germ", str(DATA / "quintic_a12_unnormalized.json"),
        "--complete-square", "--order", "20", "--json",
    )
    data = json.loads(out)
    assert code == 1
    assert CurveGerm.from_json(data["germ"]).terms == {(0, 2): 1, (13, 0): 1}
    assert data["shift"] == {"6": "-1/2"}
    assert data["verdict"]["witness"] == [2, 13] and data["verdict"]["bound"] == "25"


def test_curve_pass_and_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO('{"terms": [{"i": 0, "j": 2, "c": "1"}, {"i": 3, "j": 0, "c": "1"}]}'))
    code, out, _ = call(capsys, "curve", "test", "--degree", "4", "--germ", "-")
    assert code == 0 and "PASS" in out


def test_curve_git_rejects_high_degree(capsys):
    code, _, err = call(capsys, "curve", "test", "--degree", "5", "--git", "--germ", str(DATA / "quintic_a12.json"))
    assert code == 1 and "total degree" in err


def test_curve_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"terms": [{"i": 0, "j": 2, "c": "0.5"}]}')
    assert call(capsys, "curve", "test", "--degree", "5", "--germ", str(bad))[0] == 1
    assert call(capsys, "curve", "test", "--degree", "5", "--germ", str(tmp_path / "missing.json"))[0] == 1


@pytest.mark.parametrize("name,degree", [("p112_u_p112.json", 4), ("p115_u_p145.json", 5), ("p115_u_x6.json", 5), ("p1_4_25.json", 5)])
def test_surface_check(capsys, name, degree):
    path = DATA / name
    code, out, _ = call(capsys, "surface", "check", str(path), "--degree", str(degree), "--json")
    rep = Report.from_json(json.loads(out))
    assert code == 0 and rep.passed
    surface_from_json(json.loads(path.read_text()))


def test_surface_check_failure(capsys, tmp_path):
    bad = tmp_path / "p113.json"
    bad.write_text('{"kind": "wps", "weights": [1, 1, 3]}')
    code, out, _ = call(capsys, "surface", "check", str(bad), "--degree", "5")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("degree,rows", [("4", 3), ("5", 7)])
def test_catalog_verify(capsys, degree, rows):
    code, out, _ = call(capsys, "catalog", "verify", "--degree", degree, "--json")
    data = json.loads(out)
    assert code == 0 and len(data["rows"]) == rows
    assert Report.from_json(data).passed


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["markov"], ["markov", "enumerate"], ["catalog", "verify", "--degree", "6"],
     ["sing", "info", "x", "1"]],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(argv) == 2


def test_deterministic_output_subprocess():
    argv = [sys.executable, "-m", "p2stable", "catalog", "verify", "--degree", "5", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second


def test_no_floats_in_json(capsys):
    for argv in (["catalog", "verify", "--degree", "5", "--json"], ["sing", "info", "25", "4", "--json"]):
        _, out, _ = call(capsys, *argv)

        def walk(x):
            assert not isinstance(x, float)
            if isinstance(x, dict):
                for v in x.values():
                    walk(v)
            elif isinstance(x, list):
                for v in x:
                    walk(v)

        walk(json.loads(out))
