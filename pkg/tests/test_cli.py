import json
import subprocess
import sys

import pytest

from hypratio.cli import JobSpec, main, parse_grid, parse_point
from hypratio.continuation import Bank
from hypratio.errors import ParameterError


def run_cli(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def records(out):
    rows = []
    for line in out.strip().splitlines():
        rows.append(dict(item.split("=", 1) for item in _split(line)))
    return rows


def _split(line):
    # values are bare tokens or double-quoted strings
    parts, buf, quoted = [], "", False
    for ch in line:
        if ch == '"':
            quoted = not quoted
        if ch == " " and not quoted:
            parts.append(buf)
            buf = ""
        else:
            buf += ch
    parts.append(buf)
    return parts


def test_indices(capsys):
    status, out = run_cli(capsys, "indices", "--n1", "0", "--n2", "1", "--m", "1")
    assert status == 0
    (rec,) = records(out)
    assert (rec["n_low"], rec["n_high"], rec["p"], rec["l"], rec["r"]) == ("0", "1", "0", "0", "0")


def test_zeros(capsys):
    status, out = run_cli(capsys, "zeros", "--a", "1.5", "--b", "-0.5", "--c", "1.2")
    assert status == 0
    count, zero = records(out)
    assert count["nu"] == "1"
    assert 0 < float(zero["re"]) < 1 and float(zero["im"]) == 0
    assert float(zero["residue_re"]) == pytest.approx(-0.6372782905678154, rel=1e-12)


def test_verify_boundary(capsys):
    status, out = run_cli(capsys, "verify", "--suite", "boundary", "--a", "0.5", "--b", "0.5", "--c", "1.5", "--n1", "0", "--n2", "1", "--m", "1")
    assert status == 0
    (rec,) = records(out)
    assert float(rec["max_deviation"]) <= 1e-8 and rec["passed"] == "true"


@pytest.mark.parametrize("suite", ["repr", "products"])
def test_verify_other_suites(capsys, suite):
    status, out = run_cli(capsys, "verify", "--suite", suite, "--a", "0.5", "--b", "0.7", "--c", "1.4", "--n1", "1", "--n2", "1", "--m", "1")
    assert status == 0
    assert all(rec["passed"] == "true" for rec in records(out))


def test_eval_csv(capsys):
    status, out = run_cli(
        capsys, "eval", "--a", "0.5", "--b", "0.7", "--c", "1.4", "--n1", "1", "--n2", "1", "--m", "1",
        "--z", "-1,0", "--z", "2,0,upper", "--format", "csv",
    )
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0] == "z_re,z_im,R_re,R_im,abs_err_vs_oracle"
    assert len(lines) == 3
    assert float(lines[2].split(",")[4]) <= 1e-8


def test_grid_csv(capsys):
    status, out = run_cli(capsys, "eval", "--a", "0.5", "--b", "0.7", "--c", "1.4", "--n1", "0", "--n2", "1", "--m", "1", "--grid", "-3,0.5,4", "--format", "csv")
    assert status == 0
    assert len(out.strip().splitlines()) == 5


def test_document_format(capsys):
    status, out = run_cli(capsys, "represent", "--a", "1.5", "--b", "-0.5", "--c", "1.2", "--n1", "0", "--n2", "1", "--m", "1", "--strategy", "t", "--format", "doc", "--z", "-1,0")
    assert status == 0
    doc = json.loads(out)
    assert doc["status"] == 0
    assert doc["records"]


def test_output_is_byte_identical(capsys):
    argv = ["product", "--a", "0.5", "--b", "0.7", "--c", "1.4", "--z", "-2,0", "--z", "0.3,0.2"]
    first = run_cli(capsys, *argv)
    assert run_cli(capsys, *argv) == first


def test_numbers_carry_metadata(capsys):
    _, out = run_cli(capsys, "boundary", "--a", "0.5", "--b", "0.5", "--c", "1.5", "--n1", "0", "--n2", "1", "--m", "1", "--z", "2", "--tol", "1e-9", "--digits", "25")
    (rec,) = records(out)
    assert rec["tol"] == "1.0000000000000001e-09" and rec["digits"] == "25" and "level" in rec


def test_digits_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("HYPRATIO_DIGITS", "22")
    _, out = run_cli(capsys, "eval", "--a", "0.5", "--b", "0.7", "--c", "1.4", "--n1", "1", "--n2", "1", "--m", "1", "--z", "-1,0")
    assert records(out)[0]["digits"] == "22"


def test_parameter_rejection(capsys):
    status, out = run_cli(capsys, "eval", "--a", "0.5", "--b", "0.7", "--c", "1.4", "--n1", "1", "--n2", "1", "--m", "1", "--z", "2,0")
    assert status == 2
    assert records(out)[0]["record"] == "error"
    status, out = run_cli(capsys, "eval", "--a", "0.5", "--b", "0.7", "--c", "-2", "--z", "-1,0")
    assert status == 2


def test_numerical_failure(capsys):
    # a zero on the cut makes the boundary formula meaningless
    status, out = run_cli(capsys, "boundary", "--a", "1", "--b", "-2", "--c", "0.8", "--n1", "0", "--n2", "1", "--m", "1", "--z", "1.2")
    assert status == 3
    assert records(out)[0]["kind"] == "PoleError"


def test_job_validation():
    with pytest.raises(ParameterError):
        JobSpec("eval", None, None, [], {})
    with pytest.raises(ParameterError):
        parse_point("1,2,3,4")
    assert parse_point("2,0,lower").bank is Bank.LOWER
    assert len(parse_grid("-1,0.5,3")) == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypratio", "indices", "--n1", "1", "--n2", "1", "--m", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "r=0" in proc.stdout
