import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from detlab import RATIONAL, GF, parse_scalar
from detlab import cli

GOLDEN = Path(__file__).parent / "golden"
INPUTS = GOLDEN / "inputs"

# name, argv (input files relative to golden/inputs), expected exit code
CASES = [
    ("det_identity", ["det", "identity3.txt"], 0),
    ("det_2x2", ["det", "m2.txt"], 0),
    ("det_gf7", ["det", "--field", "gf:7", "gf7.txt"], 0),
    ("det_swap_elimination", ["det", "--algorithm", "elimination", "swap.txt"], 0),
    ("det_cofactor", ["det", "--algorithm", "cofactor", "m2.txt"], 0),
    ("det_machine", ["det", "--machine", "m2.txt"], 0),
    ("det_parse_error", ["det", "bad.txt"], 2),
    ("det_not_square", ["det", "rect.txt"], 3),
    ("solve_identity", ["solve", "sys_identity.txt"], 0),
    ("solve_diag", ["solve", "sys_diag.txt"], 0),
    ("solve_fractions", ["solve", "sys_frac.txt"], 0),
    ("solve_gf7_machine", ["solve", "--field", "gf:7", "--machine", "sys_diag.txt"], 0),
    ("solve_singular", ["solve", "sys_parallel.txt"], 4),
    ("solve_singular_machine", ["solve", "--machine", "sys_parallel.txt"], 4),
    ("solve_not_square", ["solve", "sys_rect.txt"], 3),
    ("solve_parse_error", ["solve", "sys_noseparator.txt"], 2),
    ("verify_det3", ["verify", "det:3"], 0),
    ("verify_xminusy", ["verify", "xminusy"], 0),
    ("verify_xy", ["verify", "xy"], 0),
    ("verify_lifted_gf7", ["verify", "--field", "gf:7", "--seed", "17", "--trials", "50", "lifted:lifted:det:1"], 0),
    ("verify_scaled_machine", ["verify", "--machine", "--trials", "30", "scaled:-2/3:det:2"], 0),
    ("verify_bad_descriptor", ["verify", "det:zero"], 2),
    ("independent_identity", ["independent", "identity3.txt"], 0),
    ("independent_parallel", ["independent", "parallel.txt"], 0),
    ("independent_two_in_f3", ["independent", "indep2.txt"], 0),
    ("independent_machine", ["independent", "--machine", "indep2.txt"], 0),
    ("independent_parse_error", ["independent", "bad.txt"], 2),
]


def run_cli(argv, capsys):
    argv = [str(INPUTS / a) if (INPUTS / a).is_file() else a for a in argv]
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("name,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code, capsys):
    got_code, out, err = run_cli(argv, capsys)
    assert got_code == code, err
    path = GOLDEN / f"{name}.out"
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")
    if code == 2:
        assert err.startswith("detlab: ")
        assert out == ""


def test_golden_values():
    assert (GOLDEN / "det_gf7.out").read_text().startswith("det = 4\n")
    assert (GOLDEN / "det_2x2.out").read_text().startswith("det = -2\n")
    assert (GOLDEN / "det_identity.out").read_text().startswith("det = 1\n")
    assert (GOLDEN / "solve_identity.out").read_text().startswith("x = (3, 5)\n")
    assert (GOLDEN / "solve_diag.out").read_text().startswith("x = (2, 3)\n")
    assert "certificate = (2, -1)" in (GOLDEN / "solve_singular.out").read_text()


def test_exit_5_on_unexpected_violation(monkeypatch, capsys):
    # pretend xy is documented to satisfy the main equation
    monkeypatch.setattr(
        cli,
        "classification",
        lambda f: {"main_equation": True, "multilinearity": True, "antisymmetry": False},
    )
    code, out, _ = run_cli(["verify", "xy"], capsys)
    assert code == 5
    assert "main_equation: FAIL (UNEXPECTED)" in out
    assert out.rstrip().endswith("result: property violation")


def test_bad_flags_exit_2(capsys):
    for argv in (
        ["det", "--field", "gf:8", "m2.txt"],
        ["verify", "--trials", "0", "det:2"],
        ["verify", "--seed", "-1", "det:2"],
        ["det", "--algorithm", "fast", "m2.txt"],
    ):
        with pytest.raises(SystemExit) as info:
            run_cli(argv, capsys)
        assert info.value.code == 2


def test_missing_file_exit_2(capsys):
    code, _, err = run_cli(["det", str(INPUTS / "does-not-exist.txt")], capsys)
    assert code == 2 and err


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("2 3\n4 1\n"))
    code, out, _ = run_cli(["det", "--field", "gf:7"], capsys)
    assert code == 0 and out.startswith("det = 4\n")


def test_machine_records_round_trip_through_scalar_parser(capsys):
    code, out, _ = run_cli(["solve", "--machine", "sys_frac.txt"], capsys)
    rec = json.loads(out)
    assert rec["command"] == "solve" and rec["field"] == "rational"
    for text in rec["x"] + rec["numerators"] + [rec["denominator"]]:
        assert str(parse_scalar(text, RATIONAL)) == text

    code, out, _ = run_cli(["verify", "--machine", "--field", "gf:7", "xy"], capsys)
    rec = json.loads(out)
    g = GF(7)
    for prop in rec["properties"]:
        if "witness" in prop:
            for vec in prop["witness"]["inputs"]["t"]:
                assert [str(parse_scalar(x, g)) for x in vec] == vec


def _subprocess(argv):
    return subprocess.run(
        [sys.executable, "-m", "detlab.cli", *argv],
        capture_output=True,
        check=False,
        cwd=INPUTS,
    )


def test_byte_identical_reruns_in_fresh_processes():
    for argv in (
        ["verify", "--seed", "99", "--trials", "40", "xminusy"],
        ["verify", "--machine", "--seed", "7", "--trials", "25", "det:3"],
        ["det", "--field", "gf:7", "gf7.txt"],
        ["solve", "sys_parallel.txt"],
    ):
        first, second = _subprocess(argv), _subprocess(argv)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode
    assert _subprocess(["det", "--field", "gf:7", "gf7.txt"]).stdout.startswith(b"det = 4\n")
