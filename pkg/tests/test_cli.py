from __future__ import annotations

import csv
import io
import json

import pytest

from dscx import counting, goldens
from dscx.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_prints_fvector(capsys, tmp_path):
    target = tmp_path / "c.txt"
    assert run(capsys, "generate", "--model", "dsc", "--n", "3", "--out", str(target))[:2] == (0, "16 23 9 1\n")
    assert target.read_text().startswith("dscx-complex v1 model=dsc generation=3")
    assert run(capsys, "generate", "--model", "dsc1", "--n", "5")[1] == "32 31\n"


def test_generate_guard_exit_code(capsys):
    code, _, err = run(capsys, "generate", "--model", "dsc", "--n", "9")
    assert code == 3
    assert "MAX_SIMPLICES" in err and "--ack-resources" in err


def test_usage_errors(capsys):
    assert run(capsys, "generate", "--model", "cube", "--n", "2")[0] == 2
    assert run(capsys, "fvector", "--n", "5..2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["census"])
    assert exc.value.code == 2


def test_parse_range():
    assert parse_range("4") == [4]
    assert parse_range("2..5") == [2, 3, 4, 5]


def test_fvector_rows_and_closed_forms(capsys):
    code, out, _ = run(capsys, "fvector", "--model", "dsc", "--n", "8", "--check-closed-forms")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["N_d"]) for r in rows] == goldens.FVECTORS[8]
    assert all(r["codiagonal"] == "1" and r["series"] == "1" for r in rows)
    code, out, _ = run(capsys, "fvector", "--model", "dsc2", "--n", "0..6", "--check-closed-forms", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data[-1]["fvector"] == ["625", "1000", "376"]
    assert all(all(r["checks"].values()) for r in data)


def test_fvector_large_generation(capsys):
    code, out, _ = run(capsys, "fvector", "--n", "100", "--format", "json")
    assert int(json.loads(out)[0]["fvector"][0]) == counting.n0_closed(100)


def test_census_rows(capsys):
    code, out, _ = run(capsys, "census", "--model", "dsc", "--n", "8", "--d", "5")
    rows = [(int(r["degree"]), int(r["multiplicity"])) for r in csv.DictReader(io.StringIO(out))]
    assert rows == [tuple(e) for e in goldens.CENSUS[(5, 8)]]
    code, out, _ = run(capsys, "census", "--model", "dsc2", "--n", "4", "--d", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["entries"] == [[0, "15"], [1, "45"], [2, "12"], [3, "3"]]


def test_census_verify(capsys):
    code, _, err = run(capsys, "census", "--model", "dsc", "--n", "5", "--verify")
    assert code == 0 and "FAIL" not in err


def test_spectrum_outputs(capsys):
    code, out, err = run(capsys, "spectrum", "--model", "dsc2", "--n", "6")
    assert code == 0
    assert "d=1 N=1000 zeros=0" in err and "d=2 N=376 zeros=0" in err
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 625 + 1000 + 376
    # 17-digit floats round-trip
    v = rows[5]["eigenvalue"]
    assert repr(float(v)) == repr(float(f"{float(v):.17g}"))
    code, out, _ = run(capsys, "spectrum", "--model", "dsc1", "--n", "13", "--engine", "poly", "--lambda2-only")
    scaled = float(out.splitlines()[1].split(",")[3])
    assert abs(scaled / goldens.LAMBDA2_SCALED_LIMIT - 1) < 1e-3


def test_spectrum_poly_engine_is_tree_only(capsys):
    assert run(capsys, "spectrum", "--model", "dsc", "--n", "3", "--engine", "poly")[0] == 2


def test_charpoly_export(capsys):
    code, out, err = run(capsys, "charpoly", "--n", "1..5", "--check")
    assert code == 0 and out.splitlines()[2] == "pi 3 : 2 -12 18 -8 1"
    assert "FAIL" not in err


def test_output_is_byte_identical(tmp_path, monkeypatch, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["spectrum", "--model", "dsc", "--n", "4", "--out", str(a)])
    monkeypatch.setenv("DSCX_THREADS", "4")
    main(["spectrum", "--model", "dsc", "--n", "4", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify-all", "--json")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    names = {c["check"] for c in report["checks"]}
    assert {"fvector_goldens", "census_and_conjectures", "boundary_and_betti", "polynomial_goldens", "lambda2_constants"} <= names


def test_verify_all_catches_off_by_one(monkeypatch, capsys):
    original = counting._step

    def broken(prev, top):
        row = original(prev, top)
        return [row[0] + 1] + row[1:]

    monkeypatch.setattr(counting, "_step", broken)
    code, out, _ = run(capsys, "verify-all")
    assert code == 1
    assert "FAIL fvector_goldens" in out
