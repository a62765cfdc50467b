import json

from .. import cli, serialization
from .. modules import build_E, build_O


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build(tmp_path, capsys):
    path = tmp_path / "m.json"
    code, _, _ = _run(capsys, "build", "E:d=3,a=2,b=3,c=7", "-o", str(path))
    assert code == 0
    document = json.loads(path.read_text())
    assert document["dim"] == 4
    assert len(document["t0"]) == 4 and all(len(row) == 4 for row in document["t0"])
    assert serialization.load_module(str(path)) == build_E(3, 2, 3, 7)


def test_build_racah(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _, _ = _run(capsys, "build", "R:d=0,a=1,b=0,c=0", "-o", str(path))
    assert code == 0
    document = json.loads(path.read_text())
    assert document["A"] == [["2"]]
    assert document["delta"] == "2"


def test_build_parity_error(capsys):
    code, _, err = _run(capsys, "build", "E:d=2,a=1,b=1,c=1")
    assert code == 2
    assert "d must be odd for family E" in err


def test_errors_reach_stderr_once_per_run(capsys):
    _run(capsys, "build", "O:d=1,a=1,b=1,c=1")
    code, _, err = _run(capsys, "build", "E:d=2,a=1,b=1,c=1")
    assert code == 2
    assert err.count("d must be odd for family E") == 1
    assert "d must be even" not in err


def test_usage_error(capsys):
    code, _, _ = _run(capsys, "frobnicate")
    assert code == 2


def test_verify(tmp_path, capsys):
    path = tmp_path / "m.json"
    _run(capsys, "build", "E:d=3,a=2,b=3,c=7", "-o", str(path))
    code, out, _ = _run(capsys, "verify", str(path))
    assert code == 0
    assert json.loads(out)["ok"]


def test_verify_corrupted(tmp_path, capsys):
    path = tmp_path / "m.json"
    _run(capsys, "build", "E:d=3,a=2,b=3,c=7", "-o", str(path))
    document = json.loads(path.read_text())
    document["t1"][0][0] = "100"
    path.write_text(json.dumps(document))
    code, out, _ = _run(capsys, "verify", str(path))
    assert code == 1
    report = json.loads(out)
    assert not report["ok"]
    assert report["h_relations"]["violations"]


def test_verify_malformed(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, _ = _run(capsys, "verify", str(path))
    assert code == 2

    path.write_text(json.dumps({"t0": [["1"]]}))
    code, _, _ = _run(capsys, "verify", str(path))
    assert code == 2


def test_verify_central_squares(tmp_path, capsys):
    path = tmp_path / "o.json"
    path.write_text(serialization.dumps(serialization.module_to_json(build_O(0, 1, 1, 1))))
    code, out, _ = _run(capsys, "verify", str(path))
    assert code == 0
    assert json.loads(out)["h_relations"]["central_squares"][0] == "25/16"


def test_lattice_expect(capsys):
    code, out, _ = _run(capsys, "lattice", "O:d=2,a=1,b=1,c=-1/2", "--expect", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["shape"] == "chain4"
    assert report["mismatches"] == []
    assert [node["dim"] for node in report["nodes"]] == [0, 1, 2, 3]
    assert all(record["verified"] for record in report["subquotients"])

    code, out, _ = _run(capsys, "lattice", "E:d=3,a=2,b=3,c=7", "--expect")
    assert code == 0
    assert "shape: diamond" in out


def test_lattice_refusals(capsys):
    code, _, _ = _run(capsys, "lattice", "R:d=2,a=1,b=1,c=1")
    assert code == 2
    code, _, _ = _run(capsys, "lattice", "E:d=3,a=1,b=1,c=1")
    assert code == 3


def test_sweep_minimal(capsys):
    code, out, _ = _run(capsys, "sweep", "--trials", "1", "--seed", "1", "--dmax", "1")
    assert code == 0
    summary = json.loads(out)
    assert summary["trials"] == 1
    assert summary["failures"] == []
    assert summary["passed"] + summary["skipped"] == 1


def test_sweep_is_reproducible(capsys):
    argv = ("sweep", "--trials", "4", "--seed", "7", "--dmax", "5")
    first = _run(capsys, *argv)
    second = _run(capsys, *argv)
    assert first[0] == 0
    assert first[1] == second[1]
