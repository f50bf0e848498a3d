import json
import subprocess
import sys

import pytest

from colorsuper.cli import main
from colorsuper.envelope import export_bf
from colorsuper.graded_algebra import load_algebra, save_algebra
from faults import scaled


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_clifford(capsys):
    code, out, _ = run(capsys, "verify", "clifford", "--p", "2", "--q", "1")
    assert code == 0
    assert "checked 64, violations 0" in out


def test_json_schema(capsys):
    code, out, _ = run(capsys, "bf", "verify", "--modes", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"command", "parameters", "checked_count", "violations"}
    assert data["violations"] == [] and data["checked_count"] > 0


def test_corrupted_file_reports_violations(capsys, tmp_path):
    bad, (i, j) = scaled(export_bf(1), "beta_1", "F", -1)
    path = tmp_path / "bad.json"
    save_algebra(bad, path)
    code, out, _ = run(capsys, "verify", "colorjacobi", "--file", str(path), "--json")
    data = json.loads(out)
    assert code == 1
    assert data["violations"]
    assert [min(i, j), max(i, j)] in [v["at"] for v in data["violations"]]


def test_clean_file(capsys, tmp_path):
    path = tmp_path / "bf1.json"
    assert run(capsys, "bf", "export", "--modes", "1", "--out", str(path))[0] == 0
    assert load_algebra(path).dim == 11
    assert run(capsys, "verify", "colorjacobi", "--file", str(path))[0] == 0


@pytest.mark.parametrize("argv", [
    ["verify", "colorjacobi", "--file", "/nonexistent/x.json"],
    ["verify", "clifford", "--p", "-1", "--q", "0"],
    ["verify", "clifford", "--p", "0", "--q", "0"],
    ["bf", "verify", "--modes", "0"],
    ["oracle", "fock", "--modes", "1", "--cutoff", "5"],
    ["oracle", "gamma", "--p", "9", "--q", "0"],
    ["rep", "show", "nonsense"],
    ["build", "tensor", "--algebra", "nope", "--p", "1", "--q", "0", "--out", "x.json"],
    ["frobnicate"],
    [],
], ids=lambda a: " ".join(a) or "empty")
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_malformed_json_is_usage_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run(capsys, "verify", "colorjacobi", "--file", str(path))[0] == 2


def test_bad_worker_count(capsys, tmp_path, monkeypatch):
    path = tmp_path / "bf1.json"
    save_algebra(export_bf(1), path)
    monkeypatch.setenv("COLORALG_WORKERS", "zero")
    assert run(capsys, "verify", "colorjacobi", "--file", str(path))[0] == 2
    monkeypatch.setenv("COLORALG_WORKERS", "0")
    assert run(capsys, "verify", "colorjacobi", "--file", str(path))[0] == 2


def test_parallel_output_is_identical(capsys, tmp_path, monkeypatch):
    bad, _ = scaled(export_bf(1), "a_1", "adag_1", 3)
    path = tmp_path / "bad.json"
    save_algebra(bad, path)
    serial = run(capsys, "verify", "colorjacobi", "--file", str(path), "--json")
    monkeypatch.setenv("COLORALG_WORKERS", "2")
    parallel = run(capsys, "verify", "colorjacobi", "--file", str(path), "--json")
    assert serial == parallel and serial[0] == 1


def test_build_tensor(capsys, tmp_path):
    path = tmp_path / "osp.json"
    code, out, _ = run(capsys, "build", "tensor", "--algebra", "osp(1|2)", "--p", "1", "--q", "1",
                       "--out", str(path), "--audit")
    assert code == 0 and "dim 10" in out
    assert load_algebra(path).dim == 10


def test_build_tensor_from_file(capsys, tmp_path):
    src = tmp_path / "heis.json"
    from colorsuper.superalgebra_io import fermionic_heisenberg, save
    save(fermionic_heisenberg(), src)
    out = tmp_path / "out.json"
    assert run(capsys, "build", "tensor", "--algebra", str(src), "--p", "2", "--q", "0", "--out", str(out))[0] == 0
    assert load_algebra(out).dim == 6


def test_rep_commands(capsys):
    code, out, _ = run(capsys, "rep", "verify")
    assert code == 0 and "pairs: 121" in out and "monomials: 40" in out
    code, out, _ = run(capsys, "rep", "show", "alpha_1")
    assert code == 0 and out.strip() == "alpha_1 = -theta2"


def test_oracle_dumps(capsys, tmp_path):
    g = tmp_path / "g.json"
    assert run(capsys, "oracle", "gamma", "--p", "1", "--q", "1", "--dump", str(g))[0] == 0
    assert set(json.loads(g.read_text())) == {"g1", "g2"}
    f = tmp_path / "f.json"
    assert run(capsys, "oracle", "fock", "--modes", "1", "--cutoff", "6", "--dump", str(f))[0] == 0
    assert {"a_1", "adag_1", "F"} <= set(json.loads(f.read_text()))


def test_help_exits_cleanly(capsys):
    assert run(capsys, "--help")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "colorsuper", "verify", "clifford", "--p", "1", "--q", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "violations 0" in proc.stdout
