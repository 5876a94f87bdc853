import json
import subprocess
import sys

import pytest

from pentadyn.cli import main, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_exit_codes(capsys):
    code, out, _ = run(capsys, "decide", "--point", "1/3")
    assert code == 10
    data = json.loads(out)
    assert data["schema"] == 1 and data["kind"] == "Aperiodic"
    assert (data["preperiod"], data["cycle"]) == (2, 4)
    code, out, _ = run(capsys, "decide", "--point", "0")
    assert code == 0 and json.loads(out)["period"] == 1
    code, out, _ = run(capsys, "decide", "--point", "1/2")
    assert code == 0 and json.loads(out)["kind"] == "Periodic"


def test_input_errors(capsys):
    assert run(capsys, "decide", "--point", "5")[0] == 2
    assert run(capsys, "decide", "--point", "1/")[0] == 2
    assert run(capsys, "decide")[0] == 2
    assert run(capsys, "render", "--set", "Y", "--depth", "11")[0] == 2
    assert run(capsys, "scan", "--n", "6")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_code_matches_library(capsys):
    code, out, _ = run(capsys, "code", "--point", "1/3", "--len", "26")
    assert code == 0
    assert json.loads(out)["word"] == "10110101011010101101101101"


def test_orbit_csv_and_json(capsys):
    code, out, _ = run(capsys, "orbit", "--point", "1/3", "--steps", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,point,re,im" and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "orbit", "--point", "1/3", "--map", "S", "--steps", "2")
    assert len(json.loads(out)["orbit"]) == 3


def test_outputs_are_byte_identical(capsys):
    a = run(capsys, "decide", "--point", "1/3")[1]
    b = run(capsys, "decide", "--point", "1/3")[1]
    assert a == b


def test_render_counts(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "--set", "Yprime", "--depth", "4", "--out", str(tmp_path))
    assert code == 0 and json.loads(out)["pieces"] == 256
    first = (tmp_path / "Yprime_4.svg").read_bytes()
    run(capsys, "render", "--set", "Yprime", "--depth", "4", "--out", str(tmp_path))
    assert (tmp_path / "Yprime_4.svg").read_bytes() == first
    code, out, _ = run(capsys, "render", "--set", "D", "--depth", "3", "--out", str(tmp_path))
    assert json.loads(out)["pieces"] == 64
    code, out, _ = run(capsys, "render", "--set", "orbit", "--point", "1/3", "--N", "200",
                       "--out", str(tmp_path))
    assert (tmp_path / "orbit_200.svg").exists()


def test_scan_json(capsys):
    code, out, _ = run(capsys, "scan", "--n", "5", "--resolution", "4", "--max-iter", "200")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and data["monotone"]


def test_verify_suites_that_hold(capsys):
    for suite in ("constants", "osc", "cylinders", "automaton"):
        code, out, _ = run(capsys, "verify", "--suite", suite)
        assert code == 0, suite
        assert json.loads(out)["ok"]


def test_verify_diagrams_small():
    assert run_suite("diagrams", samples=20)["ok"]


def test_verify_conjecture_small():
    report = run_suite("conjecture", samples=3)
    assert report["pairs"] == 49 and report["ok"]


def test_verify_self_inducing_reports_p0_failures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "self-inducing", "--N", "300")
    data = json.loads(out)
    assert code == 1 and not data["ok"]
    assert data["failures_outside_P0"] == []


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pentadyn", "decide", "--point", "1/3"],
                          capture_output=True, text=True)
    assert proc.returncode == 10
    assert json.loads(proc.stdout)["kind"] == "Aperiodic"


@pytest.mark.parametrize("n", [7, 9])
def test_scan_other_orders(capsys, n):
    code, out, _ = run(capsys, "scan", "--n", str(n), "--resolution", "3", "--max-iter", "100",
                       "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "i,j,s,t,period"
