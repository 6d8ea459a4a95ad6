"""Command-line surface: outputs, formats, exit codes."""

import csv
import io
import json
import subprocess
import sys

import pytest

from sbopoly import cli


def run(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_pretty_golden(capsys):
    code, out, _ = run(["gen", "hermite-sbo", "--i", "1", "--n", "4"], capsys)
    assert code == 0
    assert out.strip() == "P[1;4] = x^4 - 7/4 x^2 + 1/8"


def test_gen_json_exact(capsys):
    code, out, _ = run(
        ["gen", "hermite-sbo", "--i", "0", "--n-max", "4", "--format", "json"],
        capsys)
    assert code == 0
    payload = json.loads(out)
    assert [entry["n"] for entry in payload] == [0, 1, 2, 3, 4]
    assert payload[2]["coeffs"] == ["-1/4", "0/1", "1/1"]


def test_gen_csv_header_and_float_view(capsys):
    code, out, _ = run(
        ["gen", "hermite-sbo", "--i", "0", "--n", "2", "--format", "csv"],
        capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == list(cli.serialize.CSV_HEADER)
    assert rows[1][6] == "-1/4"

    code, out, _ = run(
        ["gen", "hermite-sbo", "--i", "0", "--n", "2", "--format", "csv",
         "--float-digits"],
        capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][6] == "-0.25"


def test_gen_latex(capsys):
    code, out, _ = run(
        ["gen", "hermite-sbo", "--i", "1", "--n", "4", "--format", "latex"],
        capsys)
    assert code == 0
    assert r"\hat{P}_{1;4}(x) &=" in out


def test_gen_symbolic_laguerre(capsys):
    code, out, _ = run(["gen", "laguerre-sbo", "--i", "1", "--n", "2"], capsys)
    assert code == 0
    assert "a" in out


def test_eval_exact_and_float(capsys):
    code, out, _ = run(
        ["eval", "hermite-sbo", "--i", "1", "--n", "4", "--at", "0"], capsys)
    assert code == 0
    assert out.strip() == "1/8"

    code, out, _ = run(
        ["eval", "hermite-sbo", "--i", "1", "--n", "4", "--at", "0.5"], capsys)
    assert code == 0
    assert abs(float(out) - (0.5**4 - 1.75 * 0.25 + 0.125)) < 1e-12


def test_eval_symbolic_value(capsys):
    code, out, _ = run(
        ["eval", "laguerre-sbo", "--i", "1", "--n", "2", "--at", "0"], capsys)
    assert code == 0
    assert out.strip() == "(a^2+2a+1)/2"


def test_table_p0(capsys):
    code, out, _ = run(
        ["table-p0", "hermite", "--i", "2", "--n", "4"], capsys)
    assert code == 0
    assert out.strip() == "p[2;4] = 19"


def test_table_p0_range(capsys):
    code, out, _ = run(
        ["table-p0", "laguerre", "--i", "0", "--n-max", "2", "--alpha", "0"],
        capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p[0;0] = 1"
    assert len(lines) == 3


def test_zeros_json(capsys):
    code, out, _ = run(
        ["zeros", "laguerre-sbo", "--i", "1", "--n", "2", "--alpha", "0",
         "--format", "json"],
        capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["real_root_count"] == 2
    roots = payload["roots"]
    assert abs(roots[0] - 0.21922359359558485) < 1e-12
    assert abs(roots[1] - 2.2807764064044151) < 1e-12


def test_zeros_symbolic_exponent_is_usage_error(capsys):
    code, _, err = run(["zeros", "laguerre-sbo", "--i", "1", "--n", "2"], capsys)
    assert code == 2
    assert "error:" in err


def test_verify_small_suite(capsys):
    code, out, _ = run(
        ["verify", "--suite", "exact", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["counts"]["pass"] > 0


def test_verify_pretty_deterministic(capsys):
    args = ["verify", "--suite", "classical", "--n-max", "8", "--format", "pretty"]
    code1, out1, _ = run(args, capsys)
    code2, out2, _ = run(args, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.strip().splitlines()[-1].endswith("ok")


def test_usage_errors_exit_2(capsys):
    code, _, err = run(["gen", "hermite-sbo", "--n", "4"], capsys)
    assert code == 2
    assert "error:" in err

    with pytest.raises(SystemExit) as exc:
        cli.main(["gen", "nosuch", "--n", "4"])
    assert exc.value.code == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "sbopoly.cli", "table-p0", "hermite",
         "--i", "2", "--n", "4"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "p[2;4] = 19"
