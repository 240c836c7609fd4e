from __future__ import annotations

import io
import json
import sys

import pytest

from twodist.cli import main

REPORT_KEYS = {
    "graph6", "n", "d", "representable", "spherical", "lambda1", "lambda2", "mu1",
    "mult_lambda2_A", "mult_lambda2_PAP", "ratio_k", "min_dimension", "borderline", "decided_by",
}


def _run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_test_pentagon(capsys):
    code, out, _ = _run(capsys, "test", "Dhc")
    assert code == 0
    row = json.loads(out)
    assert set(row) == REPORT_KEYS
    assert row["spherical"] is True and row["min_dimension"] == 2
    assert row["ratio_k"] == pytest.approx(1.6180339887, abs=1e-9)


def test_test_c4_and_trace(capsys):
    code, out, _ = _run(capsys, "test", "--trace", "Cr")
    assert code == 0
    row = json.loads(out)
    assert row["representable"] is False
    assert row["trace"]["verdict"] is False


def test_test_stdin(capsys, monkeypatch):
    code, out, _ = _run(capsys, "test", stdin="Dhc\nCr\n", monkeypatch=monkeypatch)
    assert code == 0
    assert [json.loads(x)["spherical"] for x in out.splitlines()] == [True, False]


def test_malformed_exits_2(capsys):
    code, _, err = _run(capsys, "test", "D!c")
    assert code == 2 and "error" in err


def test_bad_tolerance(capsys):
    code, _, _ = _run(capsys, "--tol", "0", "test", "Dhc")
    assert code == 2


def test_spectrum(capsys):
    code, out, _ = _run(capsys, "spectrum", "Dhc", "A_", "IheA@GUAo")
    rows = [json.loads(x) for x in out.splitlines()]
    assert rows[0]["lambda"] == pytest.approx([2, 0.618034, 0.618034, -1.618034, -1.618034], abs=1e-6)
    assert rows[0]["interlacing"] is True
    assert rows[1]["lambda"] == pytest.approx([1, -1])
    assert rows[2]["mu"][0] == pytest.approx(1.0) and rows[2]["lambda"][1] == pytest.approx(1.0)


def test_realize_outputs(capsys, tmp_path):
    svg = tmp_path / "c5.svg"
    code, out, _ = _run(capsys, "realize", "Dhc", "--plot", str(svg))
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 2 and data["k"] == pytest.approx(1.6180339887)
    assert svg.read_text().startswith("<svg")
    code, out, _ = _run(capsys, "realize", "Cr")
    assert code == 1 and "error" in json.loads(out)


def test_census(capsys, tmp_path):
    code, out, _ = _run(capsys, "census", "-n", "6", "--out", str(tmp_path / "c6"))
    assert code == 0
    assert json.loads(out)[0]["counts"] == {"3": 6, "4": 36}
    assert (tmp_path / "c6.csv").exists() and (tmp_path / "c6.json").exists()


def test_sample_seed_precedence(capsys, monkeypatch):
    monkeypatch.setenv("TWODIST_SEED", "11")
    _, env_out, _ = _run(capsys, "sample", "-n", "8", "--trials", "2000")
    _, flag_out, _ = _run(capsys, "sample", "-n", "8", "--trials", "2000", "--seed", "12")
    assert json.loads(env_out)["seed"] == 11
    assert json.loads(flag_out)["seed"] == 12
    _, csv_out, _ = _run(capsys, "--format", "csv", "sample", "-n", "8", "--trials", "2000", "--seed", "11")
    assert csv_out.splitlines()[1].split(",")[2] == str(json.loads(env_out)["hits"])
