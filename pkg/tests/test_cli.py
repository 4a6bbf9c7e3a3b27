import json
import subprocess
import sys

import pytest

from nzgraph import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_n3_q2(capsys):
    code, out, _ = run(capsys, "verify", "-n", "3", "-q", "2")
    assert code == 0
    rows = {line.split("\t")[2]: line.split("\t") for line in out.splitlines()[1:-1]}
    assert rows["lambda"][4:] == ["3", "3 (bound 3)", "pass"]
    assert rows["identifying-number"][4:] == ["3", "3", "pass"]
    assert "fail" not in {r[-1] for r in rows.values()}


def test_verify_n1_q2_skips_theorem_rows(capsys):
    code, out, _ = run(capsys, "verify", "-n", "1", "-q", "2", "--format", "json")
    doc = json.loads(out)
    status = {r["claim"]: r["status"] for r in doc["rows"]}
    assert code == 0
    assert status["order"] == status["size"] == status["degree"] == "pass"
    assert status["lambda"] == status["identifying-number"] == "skipped"


def test_verify_n2_q2(capsys):
    _, out, _ = run(capsys, "verify", "-n", "2", "-q", "2", "--format", "json")
    rows = {r["claim"]: r for r in json.loads(out)["rows"]}
    assert rows["lambda"]["status"] == rows["identifying-number"]["status"] == "pass"
    assert rows["ld-lower-bound"]["status"] == "skipped"


def test_verify_n3_q3(capsys):
    _, out, _ = run(capsys, "verify", "-n", "3", "-q", "3", "--format", "json")
    rows = {r["claim"]: r for r in json.loads(out)["rows"]}
    assert rows["lambda"]["computed"] == "19 (bound 19)"
    assert rows["lambda"]["status"] == rows["twin-deletion-ld"]["status"] == "pass"


def test_verify_failure_exit(capsys, monkeypatch):
    import nzgraph.verify as v

    monkeypatch.setitem(v._CHECKS, "order", lambda inst: ("1", "2", v.FAIL))
    code, out, _ = run(capsys, "verify", "-n", "2", "-q", "2")
    assert code == 1 and "\tfail\n" in out


def test_solve_id_nonexistent(capsys):
    code, out, _ = run(capsys, "solve-id", "-n", "2", "-q", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["nonexistent"] is True and doc["optimum"] is None


def test_solve_ld_text(capsys):
    code, out, _ = run(capsys, "solve-ld", "-n", "3", "-q", "2")
    assert code == 0
    assert "optimum\t3\n" in out and "witness\t100,010,001\n" in out


def test_solve_id_side_by_side(capsys):
    _, out, _ = run(capsys, "solve-id", "-n", "3", "-q", "2", "--format", "json",
                    "--strict-id-definition", "false")
    doc = json.loads(out)
    assert doc["strict"]["optimum"] == doc["literal"]["optimum"] == 3


def test_exchange_n4(capsys):
    code, out, _ = run(capsys, "exchange", "-n", "4", "-q", "2", "--size-cap", "7",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["holds"] is False
    assert {doc["witness"]["l1_size"], doc["witness"]["l2_size"]} == {4, 7}


def test_exchange_q3(capsys):
    _, out, _ = run(capsys, "exchange", "-n", "2", "-q", "3")
    assert out.startswith("holds\ttrue\n")


def test_twins_output(capsys):
    _, out, _ = run(capsys, "twins", "-n", "2", "-q", "3")
    assert out == "adjacent 2 10 20\nadjacent 2 01 02\nadjacent 4 11 21 12 22\n"
    _, out, _ = run(capsys, "twins", "-n", "3", "-q", "2")
    assert out == ""


def test_build_and_export(capsys):
    _, out, _ = run(capsys, "build", "-n", "3", "-q", "2", "--format", "json")
    assert json.loads(out)["size"] == 15
    _, out, _ = run(capsys, "export", "-n", "3", "-q", "2", "--format", "json")
    assert len(json.loads(out)["edges"]) == 15
    _, out, _ = run(capsys, "export", "-n", "1", "-q", "2")
    assert out == 'graph ncg {\n  "1";\n}\n'


def test_budget_exit(capsys):
    code, out, err = run(capsys, "solve-ld", "-n", "5", "-q", "2", "--budget", "10")
    assert code == 3 and out == "" and "budget" in err


@pytest.mark.parametrize("argv", [
    ["solve-ld", "-n", "3"],
    ["verify", "-n", "3"],
    ["export", "-n", "3", "-q", "2", "--format", "text"],
    ["build", "-n", "0", "-q", "2"],
    ["build", "-n", "2", "-q", "2", "--budget", "0"],
    ["solve-id", "-n", "2", "-q", "2", "--strict-id-definition", "maybe"],
    ["frobnicate"],
])
def test_invalid_arguments(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_cap_exceeded_exit(capsys):
    code, _, err = run(capsys, "build", "-n", "20", "-q", "2")
    assert code == 2 and "cap" in err


def test_figures(tmp_path, capsys):
    code, out, err = run(capsys, "verify", "-n", "2", "-q", "3", "--figures", str(tmp_path))
    assert code == 0
    assert (tmp_path / "claims.png").stat().st_size > 0
    assert (tmp_path / "degree_n2_q3.png").exists()
    assert "claims.png" in err and "claims.png" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nzgraph", "build", "-n", "2", "-q", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("n\t2\nq\t2\norder\t3\n")
