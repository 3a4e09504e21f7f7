import json
import subprocess
import sys

import pytest

from wheelsym.cli import main
from wheelsym.cycfield import CycField
from wheelsym.partitions import Partition
from wheelsym.polyring import monomial_sym


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def poly_file(tmp_path, lam, M=1, n=None):
    field = CycField(M)
    f = monomial_sym(Partition(lam), field, n)
    path = tmp_path / "poly.json"
    path.write_text(json.dumps(f.poly.to_json()))
    return str(path)


def test_partitions_command(capsys):
    code, out, _ = run_cli(
        capsys, "partitions", "--n", "2", "--max-weight", "3", "--filter", "all"
    )
    assert code == 0
    blob = json.loads(out)
    assert blob["schema"] == "1"
    assert blob["count"] == len(blob["partitions"])
    assert "1,0" in blob["partitions"]


def test_hl_command(capsys):
    code, out, _ = run_cli(
        capsys, "hl", "--lambda", "2,0", "--n", "2", "--t-order", "2"
    )
    assert code == 0
    blob = json.loads(out)
    assert set(blob["m_coeffs"]) == {"2,0", "1,1"}
    # 1 - t = 2 at t = -1
    assert blob["m_coeffs"]["1,1"]["num"] == ["2"]


def test_hl_nonadmissible_is_internal_fault(capsys):
    # the normalization has a pole at the root of unity: exit code 3
    code, _, err = run_cli(
        capsys, "hl", "--lambda", "1,1", "--n", "2", "--t-order", "2"
    )
    assert code == 3
    assert "fault" in err


def test_member_command(capsys, tmp_path):
    path = poly_file(tmp_path, (1, 0), M=2)
    code, out, _ = run_cli(capsys, "member", "--k", "1", "--r", "2", "--poly", path)
    assert code == 0
    assert json.loads(out)["member"] is True

    path = poly_file(tmp_path, (1, 1), M=2)
    code, out, _ = run_cli(capsys, "member", "--k", "1", "--r", "2", "--poly", path)
    assert code == 0
    blob = json.loads(out)
    assert blob["member"] is False
    assert blob["witness"]["monomial"] == [2, 0]


def test_dim_command(capsys):
    code, out, _ = run_cli(
        capsys, "dim", "--k", "1", "--r", "2", "--n", "2", "--max-deg", "3"
    )
    assert code == 0
    entries = {(e["n"], e["d"]): e["dim"] for e in json.loads(out)["entries"]}
    assert entries == {(2, 0): 0, (2, 1): 1, (2, 2): 1, (2, 3): 2}


def test_char_command_both(capsys):
    code, out, _ = run_cli(
        capsys,
        "char", "--k", "1", "--r", "2", "--zmax", "2", "--vmax", "4",
        "--method", "both",
    )
    assert code == 0
    cells = json.loads(out)["cells"]
    assert all(c["match"] for c in cells)


def test_char_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "char", "--k", "1", "--zmax", "1", "--vmax", "2", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,d,formula"
    assert lines[1] == "0,0,1"


def test_epsilon_and_straighten(capsys):
    code, out, _ = run_cli(capsys, "epsilon", "--k", "1", "--i", "1")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert terms["2,0"]["num"] == ["2"]
    assert terms["1,1"]["num"] == ["-1"]

    code, out, _ = run_cli(capsys, "straighten", "--k", "1", "--e", "1,1")
    assert code == 0
    assert json.loads(out)["terms"] == {"2,0": {"M": 2, "den": ["1"], "num": ["2"]}}


def test_basis_verify(capsys):
    code, out, _ = run_cli(
        capsys,
        "basis", "--k", "1", "--r", "4", "--n", "2", "--max-deg", "4", "--verify",
    )
    assert code == 0
    blob = json.loads(out)
    assert blob["report"]["ok"] is True
    assert blob["elements"]


def test_split_command(capsys, tmp_path):
    path = poly_file(tmp_path, (1, 0), M=6)
    code, out, _ = run_cli(capsys, "split", "--k", "1", "--r", "4", "--poly", path)
    assert code == 0
    cof = json.loads(out)["cofactors"]
    assert cof == {"1,0": {"0,0": {"M": 6, "den": ["1", "1"], "num": ["1", "0"]}}}


def test_verify_suites(capsys):
    for suite in ("char-k1r2", "bn-identities", "hl-basis-k1"):
        code, out, _ = run_cli(capsys, "verify", "--suite", suite)
        assert code == 0
        assert json.loads(out)["ok"] is True


def test_usage_errors(capsys):
    # bad partition string
    code, _, err = run_cli(capsys, "hl", "--lambda", "1,x", "--n", "2", "--t-order", "2")
    assert code == 2
    # missing polynomial file
    code, _, err = run_cli(capsys, "member", "--k", "1", "--r", "2", "--poly", "/nope.json")
    assert code == 2
    # incompatible parameters
    code, _, err = run_cli(capsys, "dim", "--k", "1", "--r", "3", "--n", "2", "--max-deg", "1")
    assert code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import wheelsym.cli as cli

    monkeypatch.setitem(cli.CHAR_SUITES, "char-k1r2", (1, 2, 1, 1))
    monkeypatch.setattr(
        cli, "chi_k2", lambda k, z, v: type("S", (), {"coefficient": lambda self, n, d: 99})()
    )
    code, out, _ = run_cli(capsys, "verify", "--suite", "char-k1r2")
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_determinism_across_processes_and_jobs(tmp_path):
    outs = []
    for jobs in ("1", "2", "1"):
        res = subprocess.run(
            [sys.executable, "-m", "wheelsym.cli", "verify", "--suite", "char-k1r2",
             "--jobs", jobs],
            capture_output=True,
        )
        assert res.returncode == 0
        outs.append(res.stdout)
    assert outs[0] == outs[1] == outs[2]


def test_out_file_matches_stdout(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "dim", "--k", "1", "--r", "2", "--n", "2", "--max-deg", "2",
        "--out", str(target),
    )
    assert code == 0 and out == ""
    code, out, _ = run_cli(
        capsys, "dim", "--k", "1", "--r", "2", "--n", "2", "--max-deg", "2"
    )
    assert target.read_text() == out
