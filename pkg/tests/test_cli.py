import json
import subprocess
import sys
from dataclasses import replace
from fractions import Fraction

import pytest

from mopkit import cli
from mopkit.exactnum import GammaScaled


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coeffs_json(capsys):
    code, out, _ = run(capsys, "coeffs", "--alpha", "0,1/2", "--beta", "0", "--n", "1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "jacobi-pineiro"
    assert [c["coefficients"] for c in doc["components"]] == [["-10"], ["15"]]
    assert doc["components"][0]["component"] == 1


def test_coeffs_round_trip_exact_strings(capsys):
    code, out, _ = run(capsys, "coeffs", "--family", "laguerre1", "--alpha", "0,1/2", "--n", "1,1")
    assert code == 0
    second = json.loads(out)["components"][1]["coefficients"][0]
    assert GammaScaled.parse(second) == 2 / GammaScaled(1, (Fraction(3, 2),))


def test_coeffs_float_and_csv(capsys):
    code, out, _ = run(
        capsys, "coeffs", "--family", "laguerre1", "--alpha", "0,1/2", "--n", "1,1", "--mode", "float", "--output", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "component,power,coefficient"
    assert lines[2].startswith("2,0,2.256758334191025")


def test_negative_alpha_syntax(capsys):
    code, out, _ = run(capsys, "coeffs", "--alpha=-1/2,1/3", "--beta", "1", "--n", "2,1")
    assert code == 0


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--alpha", "0,1/2,1/3", "--beta", "1/2", "--n", "2,1,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    names = [c["check"] for c in doc["checks"]]
    assert "oracle_type1" in names and "biorthogonal" in names and "pairing[j=4]" in names


def test_verify_laguerre_includes_limit(capsys):
    code, out, _ = run(capsys, "verify", "--family", "laguerre1", "--alpha", "1/4,-1/3", "--n", "2,2")
    assert code == 0
    assert any(c["check"].startswith("limit_exact") for c in json.loads(out)["checks"])


def test_verify_integer_alpha_difference(capsys):
    code, _, err = run(capsys, "verify", "--alpha", "0,1", "--beta", "0", "--n", "1,1")
    assert code == 2
    assert json.loads(err)["error"] == "ATSystemError"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--alpha", "0,1/2", "--n", "1,1"],
        ["verify", "--alpha", "0,x", "--beta", "0", "--n", "1,1"],
        ["verify", "--alpha", "0,1/2", "--beta", "0", "--n", "1,1,1"],
        ["verify", "--alpha", "0,1/2", "--beta", "0", "--n", "0,0"],
        ["coeffs", "--alpha", "0,1/2", "--beta", "0", "--n", "1,1", "--precision-bits", "20"],
        ["limit", "--family", "jacobi-pineiro", "--alpha", "0,1/2", "--beta", "0", "--n", "1,1"],
    ],
)
def test_input_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_fault_injection_detected(capsys, monkeypatch):
    real = cli.build_vector

    def tampered(ws, n):
        v = real(ws, n)
        comp = v.components[0]
        coeffs = (comp.coeffs[0] + Fraction(1, 10**6),) + comp.coeffs[1:]
        return replace(v, components=(replace(comp, coeffs=coeffs),) + v.components[1:])

    monkeypatch.setattr(cli, "build_vector", tampered)
    code, out, err = run(capsys, "verify", "--alpha", "0,1/2", "--beta", "0", "--n", "2,1")
    assert code == 1
    failed = [c for c in json.loads(out)["checks"] if c["status"] == "fail"]
    assert failed and all(c["residual"] != "0" for c in failed)
    assert "failed" in err


def test_incompatible_gamma_is_internal(capsys, monkeypatch):
    real = cli.build_vector

    def broken(ws, n):
        v = real(ws, n)
        comp = v.components[0]
        wrong = comp.prefactor * GammaScaled(1, (Fraction(1, 7),))
        return replace(v, components=(replace(comp, prefactor=wrong),) + v.components[1:])

    monkeypatch.setattr(cli, "build_vector", broken)
    code, _, err = run(capsys, "verify", "--alpha", "0,1/2", "--beta", "0", "--n", "2,1")
    assert code == 3
    assert json.loads(err)["error"] == "IncompatibleGammaError"


def test_kp_file(capsys, tmp_path):
    path = tmp_path / "kp.json"
    path.write_text(
        json.dumps(
            [
                {"a": -1, "b": [2], "k": [1]},
                {"a": -2, "f": [3], "m": [1], "b": [1], "k": [2]},
                {"a": "-3", "f": ["1/3"], "m": [2], "b": ["2/5", "1/7"], "k": [3, 1]},
            ],
            indent=1,
        )
    )
    code, out, _ = run(capsys, "kp", str(path))
    assert code == 0
    doc = json.loads(out)
    assert [r["lhs"] for r in doc["instances"][:2]] == ["1/3", "7/18"]
    assert all(r["equal"] for r in doc["instances"])


def test_kp_bad_instance_does_not_abort_batch(capsys, tmp_path):
    path = tmp_path / "kp.json"
    path.write_text('[\n{"a": -1, "b": [2], "k": [1]},\n{"a": -1, "b": ["1/2", "3/2"], "k": [2, 1]},\n{"a": -1, "b": [3], "k": [1]}\n]\n')
    code, out, _ = run(capsys, "kp", str(path))
    assert code == 1
    recs = json.loads(out)["instances"]
    assert [r["equal"] for r in recs] == [True, False, True]
    assert recs[1]["line"] == 3 and "repeated" in recs[1]["error"]


def test_kp_parse_error_reports_line(capsys, tmp_path):
    path = tmp_path / "kp.json"
    path.write_text('[\n{"a": -1, "b": [2], "k": [1]},\n{"a": -1, "b": [2] "k": [1]}\n]\n')
    code, _, err = run(capsys, "kp", str(path))
    assert code == 2
    assert f"{path}:3" in json.loads(err)["message"]


def test_kp_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "kp", str(tmp_path / "nope.json"))
    assert code == 2


def test_sweep_deterministic(capsys):
    argv = ["sweep", "--p", "2", "--degree-max", "3", "--no-timing", "--seed", "7"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0 and first[1] == second[1]
    lines = first[1].strip().splitlines()
    assert lines[0] == "p,index,checks_passed,checks_total,status,max_bits"
    assert len(lines) == 1 + 2 + 3 + 4


def test_sweep_empty_lattice(capsys):
    code, out, _ = run(capsys, "sweep", "--p", "2", "--degree-max", "0", "--no-timing")
    assert code == 0
    assert out.strip().splitlines() == ["p,index,checks_passed,checks_total,status,max_bits"]


def test_sweep_timing_column(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "laguerre1", "--p", "2", "--degree-max", "2")
    assert code == 0
    assert out.splitlines()[0].endswith(",wall_ms")


def test_sweep_out_file(capsys, tmp_path):
    target = tmp_path / "sweep.json"
    code, out, _ = run(capsys, "sweep", "--p", "2", "--degree-max", "2", "--output", "json", "--out-file", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["status"] == "pass"


def test_limit_command(capsys):
    code, out, _ = run(capsys, "limit", "--alpha", "1/3,-1/2", "--n", "3,2", "--x", "3/2")
    assert code == 0
    doc = json.loads(out)
    assert doc["rate_ok"] is True and all(e["equal"] for e in doc["exact"])


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "mopkit.cli", "coeffs", "--alpha", "0", "--beta", "0", "--n", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["components"][0]["coefficients"] == ["-6", "12"]
