import csv
import io
import json
import subprocess
import sys

import pytest

from sp6boundary.cli import EXIT_MISMATCH, EXIT_OK, EXIT_UNKNOWN_FACT, EXIT_USAGE, main, run
from sp6boundary.report import ReportDocument


def test_boundary_json():
    code, text = run(["boundary", "--format", "json"])
    assert code == EXIT_OK
    assert json.loads(text)["H"] == [1, 0, 1, 0, 1, 2, 2, 1, 0, 1, 0, 1]


def test_kostant_a1_markdown():
    code, text = run(["kostant", "--parabolic", "a1"])
    rows = [l for l in text.splitlines() if l.startswith("| ") and not l.startswith("| w ")]
    assert code == 0 and len(rows) == 6 and rows[-1].startswith("| 12321 ")


def test_weyl_table_csv():
    code, text = run(["weyl-table", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][0] == "w" and len(rows) == 49
    assert rows[-1] == ["121321323", "121321323", "9", "-a1", "-a2", "-a3"]


def test_weights_modes():
    code, text = run(["weights", "--parabolic", "a3", "--format", "json"])
    doc = json.loads(text)
    row = next(r for r in doc["rows"] if r["labels"]["w"] == "32")
    assert row["values"] == {"m1": "1", "m2": "2", "m3": "-3"}
    code, text = run(["weights", "--parabolic", "b", "--symbolic", "--format", "json"])
    assert json.loads(text)["rows"][0]["values"]["m2"] == "n2 + n3"
    code, _ = run(["weights", "--parabolic", "b", "--symbolic", "--lambda", "1", "0", "0"])
    assert code == EXIT_USAGE


def test_parity_and_face():
    code, text = run(["parity", "--parabolic", "a1", "--format", "json"])
    assert json.loads(text)["surviving"] == ["e", "12", "123", "12321"]
    code, text = run(["face", "--parabolic", "a1", "--format", "json"])
    assert json.loads(text)["dims"] == [1, 0, 1, 0, 0, 2, 1, 1]


def test_pages():
    code, text = run(["e1", "--format", "json"])
    doc = json.loads(text)
    assert len(doc["rows"]) == 20 and doc["d_squared_defect"] == []
    code, text = run(["e2", "--sign-policy", "paper-fixture", "--format", "json"])
    assert len(json.loads(text)["rows"]) == 10
    code, text = run(["e3", "--format", "json"])
    d2 = json.loads(text)["d2"]
    assert d2[0]["q"] == 5 and d2[0]["support"] == []


def test_verify_passes():
    code, text = run(["verify", "--format", "json"])
    doc = json.loads(text)
    assert code == EXIT_OK and doc["passed"]
    assert len(doc["rows"]) == 15


def test_verify_reports_failures(monkeypatch):
    from sp6boundary import verify

    monkeypatch.setattr(verify, "check_main_theorem", lambda pipe: (False, "forced"))
    monkeypatch.setattr(
        verify, "CHECKS", [(n, verify.check_main_theorem if n == "main-theorem" else f, p) for n, f, p in verify.CHECKS]
    )
    code, text = run(["verify", "--check", "main-theorem"])
    assert code == EXIT_MISMATCH and "forced" in text


def test_usage_errors():
    assert run(["kostant", "--parabolic", "zz"])[0] == EXIT_USAGE
    assert run([])[0] == EXIT_USAGE
    assert run(["boundary", "--format", "xml"])[0] == EXIT_USAGE


def test_unknown_fact_exit_code(capsys):
    code = main(["face", "--parabolic", "a1", "--lambda", "0", "2", "0"])
    assert code == EXIT_UNKNOWN_FACT
    assert "Sp4" in capsys.readouterr().err


def test_report_json_round_trip():
    _, text = run(["parity", "--parabolic", "a13", "--format", "json"])
    doc = ReportDocument.from_json(text)
    assert ReportDocument.from_json(doc.to_json()) == doc
    assert doc.to_json() == text.rstrip("\n")
    with pytest.raises(ValueError):
        ReportDocument("nope", [])


def test_every_row_has_provenance():
    for argv in (["weyl-table"], ["kostant", "--parabolic", "a2"], ["e1"], ["boundary"], ["verify"]):
        doc = json.loads(run(argv + ["--format", "json"])[1])
        assert all(set(r) == {"labels", "values", "provenance"} and r["provenance"] for r in doc["rows"])


def test_deterministic_output():
    assert run(["e1", "--format", "json"]) == run(["e1", "--format", "json"])


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "sp6boundary", "boundary", "--format", "json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["H"][5] == 2
