import csv
import io
import json
import subprocess
import sys

import pytest

from rqcodes.cli import main
from rqcodes.linalg import parse_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_simplex(capsys):
    code, out, _ = run(capsys, "gen", "--family", "simplex-alpha", "--q", "1", "--k", "1")
    assert code == 0
    assert out.splitlines()[1] == "0 1 2 3"
    assert parse_matrix(out).entries.tolist() == [[0, 1, 2, 3]]


def test_gen_parameter_error(capsys):
    code, out, err = run(capsys, "gen", "--family", "macdonald-alpha", "--q", "1", "--k", "2", "--u", "2")
    assert code == 2 and out == ""
    assert len(err.strip().splitlines()) == 1


def test_gen_guard(capsys):
    code, _, err = run(capsys, "gen", "--family", "simplex-alpha", "--q", "3", "--k", "3")
    assert code == 3 and "guard" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "wdist", "--family", "simplex-alpha", "--q", "1")
    assert code == 2
    code, _, _ = run(capsys, "wdist", "--family", "binary-simplex-alpha", "--k", "2")
    assert code == 2


def test_wdist(capsys):
    code, out, _ = run(capsys, "wdist", "--family", "simplex-alpha", "--q", "1", "--k", "1", "--metric", "lee")
    assert code == 0 and out == '{"0":1,"4":3}\n'
    _, out, _ = run(capsys, "wdist", "--family", "simplex-alpha", "--q", "1", "--k", "1", "--metric", "hom", "--gamma", "1", "--format", "json")
    obj = json.loads(out)
    assert obj["family"] == "simplex-alpha" and obj["params"] == {"q": 1, "k": 1}
    assert obj["distribution"] == {"0": 1, "4": 3}


def test_covradius(capsys):
    code, out, _ = run(capsys, "covradius", "--family", "repetition", "--c", "theta", "--q", "1", "--n", "1", "--metric", "lee")
    assert code == 0 and out == "1\n"
    _, out, _ = run(capsys, "covradius", "--family", "repetition", "--c", "theta", "--q", "1", "--n", "2", "--engine", "profile_dp", "--format", "json")
    obj = json.loads(out)
    assert set(obj) == {"family", "params", "metric", "radius", "engine", "certificate"}
    assert obj["radius"] == 2 and obj["engine"] == "profile_dp"


def test_gray(capsys):
    code, out, _ = run(capsys, "gray", "--family", "simplex-alpha", "--q", "1", "--k", "1", "--map", "lee")
    assert code == 0 and out == "00101101\n"
    _, out, _ = run(capsys, "gray", "--family", "simplex-alpha", "--q", "1", "--k", "1", "--map", "hom", "--mode", "weight-exact")
    assert len(out.strip()) == 16


def test_enum_torsion_project(capsys, tmp_path):
    _, out, _ = run(capsys, "enum", "--family", "repetition", "--c", "theta", "--q", "1", "--n", "2")
    assert out == "0 0\n2 2\n"
    _, out, _ = run(capsys, "torsion", "--family", "simplex-alpha", "--q", "1", "--k", "1", "--set", "theta")
    assert out == "0101\n"
    _, out, _ = run(capsys, "torsion", "--family", "simplex-alpha", "--q", "1", "--k", "1", "--format", "json")
    assert json.loads(out)["size"] == 1
    path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "project", "--family", "simplex-alpha", "--q", "2", "--k", "1", "--out", str(path))
    assert code == 0
    P = parse_matrix(path.read_text())
    assert P.ring.q == 1 and P.cols == 16


def test_input_file_round_trip(capsys, tmp_path):
    path = tmp_path / "g.txt"
    run(capsys, "gen", "--family", "simplex-beta", "--q", "1", "--k", "2", "--out", str(path))
    code, out, _ = run(capsys, "wdist", "--input", str(path), "--metric", "lee")
    assert code == 0 and json.loads(out)
    code, out, _ = run(capsys, "gen", "--input", str(path))
    assert out == path.read_text()
    code, _, _ = run(capsys, "wdist", "--input", str(tmp_path / "missing.txt"))
    assert code == 2


def test_audit_cmd(capsys):
    code, out, _ = run(capsys, "audit", "--max-q", "1", "--max-k", "2")
    assert code == 0 and "thm-3.5-ii" in out
    code, out, _ = run(capsys, "audit", "--max-q", "1", "--max-k", "1", "--max-n", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["claim", "source", "params", "normalization", "claimed", "computed", "verdict", "note"]
    code, _, _ = run(capsys, "audit", "--max-q", "1", "--max-k", "1", "--max-n", "1", "--fail-on-mismatch")
    assert code == 1
    code, _, _ = run(capsys, "audit", "--max-q", "0")
    assert code == 2


def test_verify(capsys, tmp_path):
    path = tmp_path / "g.txt"
    run(capsys, "gen", "--family", "simplex-alpha", "--q", "1", "--k", "1", "--out", str(path))
    code, out, _ = run(capsys, "verify", "--input", str(path), "--max-q", "2", "--max-k", "1")
    assert code == 0 and "round-trips" in out


def test_enum_limit_env(monkeypatch, capsys):
    monkeypatch.setenv("RQCODES_ENUM_LIMIT", "8")
    code, _, _ = run(capsys, "enum", "--family", "simplex-alpha", "--q", "1", "--k", "2")
    assert code == 3


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "rqcodes", "gray", "--family", "simplex-alpha", "--q", "1", "--k", "1"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout == "00101101\n"
