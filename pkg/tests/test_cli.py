from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from terminvar import reports
from terminvar.cli import EXIT_CAP, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_models_list(capsys):
    code, out, _ = run(["models", "list"], capsys)
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("generic\t")
    assert len(out.splitlines()) == 5


def test_invariants_json(capsys):
    code, out, _ = run(["invariants", "--catalog", "k2/216,153"], capsys)
    rec = json.loads(out)
    assert code == EXIT_OK
    assert (rec["rank"], rec["N2"], rec["N3"], rec["b2"], rec["pi1"]) == (4, 1, 1, 7, "{1}")
    assert rec["census"]["a2"] == 20 and rec["topology"]["c4"] == "577/12"


def test_invariants_bd12_note(capsys):
    code, out, _ = run(["invariants", "--catalog", "k2/12,1"], capsys)
    rec = json.loads(out)
    assert rec["b2"] == 6 and rec["epsilon"] == 1 and "note" in rec
    assert rec["smooth"] is False


@pytest.mark.parametrize("fmt", ["csv", "md"])
def test_invariants_formats(fmt, capsys):
    code, out, _ = run(["invariants", "--catalog", "k3/8,5", "--format", fmt], capsys)
    assert code == EXIT_OK
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(out)))
        rec = dict(zip(rows[0], rows[1]))
        assert rec["b2"] == "11" and rec["census.a2"] == "64" and rec["census.s2"] == "18"
    else:
        assert "| b2 | 11 |" in out


def test_invariants_spec_file(tmp_path, capsys):
    spec = {"model": "e2-zeta3", "n": 2, "generators": [{"m": "g3"}]}
    p = tmp_path / "g.json"
    p.write_text(json.dumps(spec))
    code, out, _ = run(["invariants", "--spec", str(p)], capsys)
    rec = json.loads(out)
    assert code == EXIT_OK and rec["b2"] == 7 and rec["census"]["a3"] == 12


def test_usage_errors(tmp_path, capsys):
    assert run(["invariants", "--catalog", "k2/3,1"], capsys)[0] == EXIT_USAGE  # ambiguous
    assert run(["invariants", "--spec", str(tmp_path / "missing.json")], capsys)[0] == EXIT_USAGE
    bad = tmp_path / "bad.json"
    bad.write_text('{"model": "generic"}')
    assert run(["invariants", "--spec", str(bad)], capsys)[0] == EXIT_USAGE
    assert run(["frobnicate"], capsys)[0] == EXIT_USAGE
    assert run(["table", "nope"], capsys)[0] == EXIT_USAGE
    assert run(["enumerate", "--model", "generic", "--g0", "C3", "--n", "2"], capsys)[0] == EXIT_USAGE


def test_size_cap_exit(monkeypatch, capsys):
    monkeypatch.setenv("TERMINVAR_SIZE_CAP", "50")
    assert run(["invariants", "--catalog", "k2/216,153"], capsys)[0] == EXIT_CAP


def test_enumerate_large_needs_flag(capsys):
    code, _, err = run(["enumerate", "--model", "quaternionic", "--g0", "BT24", "--n", "2"], capsys)
    assert code == EXIT_CAP and "--large" in err


def test_enumerate_c2(capsys):
    code, out, _ = run(["enumerate", "--model", "generic", "--g0", "C2", "--n", "2"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert [r["id"] for r in rows] == ["2,1", "6,1", "18,4", "54,14", "162,54"]
    assert {r["b2"] for r in rows} == {"8"}


def test_singularities(capsys):
    code, out, _ = run(["singularities", "--catalog", "k2/24,3"], capsys)
    conf = json.loads(out)
    assert code == EXIT_OK
    assert conf["census"] == {"a2": 20, "a3": 12, "a4": 3, "s2": 0, "smooth": False}
    assert {s["type"] for s in conf["surfaces"]} == {"A1", "A2"}


def test_singularities_n3(capsys):
    code, out, _ = run(["singularities", "--catalog", "k3/32,51"], capsys)
    assert code == EXIT_OK and json.loads(out)["census"]["smooth"] is True


@pytest.mark.parametrize("fmt", ["md", "csv", "json"])
def test_table_deterministic(fmt, capsys):
    a = run(["table", "kummer-n3-sing", "--format", fmt], capsys)[1]
    b = run(["table", "kummer-n3-sing", "--format", fmt], capsys)[1]
    assert a == b and a
    if fmt == "json":
        assert [r["a2"] for r in json.loads(a)["rows"]] == [140, 112, 64, 0, 0]


def test_table_rationals_csv(capsys):
    code, out, _ = run(["table", "kummer-n2-sing", "--format", "csv", "--jobs", "2"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 17
    assert rows[1]["c4"] == "166/3"


def test_verify_ok(capsys):
    code, out, _ = run(["verify", "fixed-loci"], capsys)
    assert code == EXIT_OK and out.strip().endswith("0 mismatches")


def test_verify_mismatch(monkeypatch, capsys):
    real = reports.expected_rows

    def tampered(name):
        rows = real(name)
        rows[0] = dict(rows[0], points=37)
        return rows

    monkeypatch.setattr(reports, "expected_rows", tampered)
    code, out, _ = run(["verify", "fixed-loci"], capsys)
    assert code == EXIT_MISMATCH and "1 mismatches" in out


def test_console_script_entry():
    out = subprocess.run(
        [sys.executable, "-m", "terminvar.cli", "models", "list"], capture_output=True, text=True, check=True
    )
    assert "quaternionic" in out.stdout
