import csv
import io
import json
import subprocess
import sys

import pytest

from ringfourier.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, family_specs, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ring_info(capsys):
    code, out, _ = run(capsys, "ring", "info", "zmod(4)")
    info = json.loads(out)
    assert code == EXIT_OK
    assert info["radical_size"] == 2 and info["quotient_size"] == 2
    code, out, _ = run(capsys, "ring", "info", "mat(2,gf(2))", "--text")
    assert code == EXIT_OK and "unit_count       6" in out


def test_salem_json(capsys):
    code, out, _ = run(capsys, "salem", "zmod(4)", "-d", "2")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["C"] == pytest.approx(2.0) and rep["argmax"] == "2|2" and rep["lower_bound"] is False


def test_salem_probe(capsys):
    code, out, _ = run(capsys, "salem", "mat(2,gf(5))", "--probe", "e11")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["lower_bound"] is True
    assert rep["C"] == pytest.approx(5 ** 0.5, rel=1e-9)


def test_salem_spectrum_csv(tmp_path, capsys):
    path = tmp_path / "s.csv"
    assert run(capsys, "salem", "gf(3)", "--spectrum", str(path))[0] == EXIT_OK
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 9 and rows[0]["frequency_string"] == "0|0"


@pytest.mark.parametrize("argv,code", [
    (["salem", "gf(6)"], EXIT_USAGE),
    (["salem", "gf(5)", "--poly", "x1 +"], EXIT_USAGE),
    (["salem", "gf(5)", "--poly", "x1*x2", "-d", "2"], EXIT_USAGE),
    (["salem", "gf(5)", "--probe", "e11"], EXIT_USAGE),
    (["salem", "mat(4,gf(3))"], EXIT_BUDGET),
    (["verify", "--suite", "nope"], EXIT_USAGE),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_verify_failure_exit(monkeypatch, capsys):
    from ringfourier import cli
    from ringfourier.verification import CheckRecord

    monkeypatch.setitem(cli.SUITES, "broken", lambda seed=0: [CheckRecord("x", [], {}, {}, 0.0, False)])
    monkeypatch.setattr(cli, "run_suite", lambda name, seed=0: cli.SUITES[name](seed))
    code, _, err = run(capsys, "verify", "--suite", "broken")
    assert code == EXIT_FAIL and "FAILED x" in err


def test_verify_jsonl_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert run(capsys, "verify", "--suite", "nu", "--out", str(a))[0] == EXIT_OK
    assert run(capsys, "verify", "--suite", "nu", "--out", str(b))[0] == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 108


def test_sweep_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert run(capsys, "sweep", "--family", "fields", "--max-size", "9", "--out", str(p))[0] == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    rows = list(csv.DictReader(a.open()))
    assert [r["ring"] for r in rows] == ["gf(2)", "gf(3)", "gf(4)", "gf(5)", "gf(7)", "gf(8)", "gf(9)"]
    for r in rows:
        if int(r["characteristic"]) != 2:
            assert float(r["C"]) == pytest.approx(1.0)
    assert "wall_time" not in rows[0]


def test_sweep_mat2_odd_q_increasing(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "mat2", "--max-size", "7", "--timings")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and "wall_time" in rows[0]
    odd = [float(r["C"]) for r in rows if int(r["characteristic"]) != 2]
    assert len(odd) == 3 and odd[0] < odd[1] < odd[2]


def test_family_specs():
    assert family_specs("zmod-prime-powers", 27) == ["zmod(4)", "zmod(8)", "zmod(9)", "zmod(16)", "zmod(25)",
                                                     "zmod(27)"]
    assert "prod(gf(2),zmod(9))" in family_specs("products", 18)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "ringfourier", "salem", "gf(5)"], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["C"] == pytest.approx(1.0)
