import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from ztame.cli import corpus_cases, main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
REGEN = os.environ.get("ZTAME_REGEN_GOLDEN") == "1"

GOLDEN_CASES = {
    "check_auto_triangular": ["check-auto", "-f", "x + y^2", "-g", "y"],
    "check_auto_anick_trace": ["check-auto", "--trace", "-f", "x + z*(x*z - z*y)", "-g", "y + (x*z - z*y)*z"],
    "check_coord_anick": ["check-coord", "-f", "x + z*(x*z - z*y)"],
    "check_coord_tame_trace": ["check-coord", "--trace", "-f", "y + (x + y^2)^2"],
    "compose_reduced": ["compose", str(DATA / "word_reduced.json")],
    "normal_form_mixed": ["normal-form", str(DATA / "word_mixed.json")],
    "jacobian_anick": ["jacobian", "-f", "x + z*(x*z - z*y)", "-g", "y + (x*z - z*y)*z"],
    "ge2_anick": ["ge2", str(DATA / "anick_jacobian.json")],
    "ge2_elementary": ["ge2", str(DATA / "elementary_product.json")],
    "corpus": ["corpus"],
}


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_output(name, capsys):
    code, out, _ = run(GOLDEN_CASES[name], capsys)
    assert code == 0
    path = GOLDEN / f"{name}.json"
    if REGEN:
        path.write_text(out)
    assert out == path.read_text()


def test_output_is_deterministic(capsys):
    argv = GOLDEN_CASES["check_auto_anick_trace"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_verdicts(capsys):
    _, out, _ = run(["check-auto", "-f", "x + y^2", "-g", "y"], capsys)
    assert json.loads(out)["verdict"] == "TameAutomorphism"
    _, out, _ = run(["check-coord", "-f", "x + z*(x*z - z*y)"], capsys)
    assert json.loads(out)["verdict"] == "NotZTameCoordinate"
    _, out, _ = run(["ge2", str(DATA / "anick_jacobian.json")], capsys)
    assert json.loads(out)["verdict"] == "NotReducible"


def test_trace_flag(capsys):
    argv = ["check-auto", "-f", "x + z*(x*z - z*y)", "-g", "y + (x*z - z*y)*z"]
    assert "trace" not in json.loads(run(argv, capsys)[1])
    assert json.loads(run(argv + ["--trace"], capsys)[1])["trace"]


@pytest.mark.parametrize(
    "argv",
    [
        ["check-auto", "-f", "x +", "-g", "y"],
        ["check-coord", "-f", "x ) y"],
        ["check-coord", "-f", "0"],
        ["compose", str(DATA / "missing.json")],
        ["compose", str(DATA / "bad_generator.json")],
        ["ge2", str(DATA / "word_reduced.json")],
        ["jacobian", "-f", "x*y", "-g", "y"],
    ],
)
def test_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == ""
    assert "error" in json.loads(err)


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["check-auto", "-f", "x"])
    assert info.value.code == 2


def test_corpus_report():
    cases = corpus_cases(seed=7)
    assert [c["name"] for c in cases[:2]] == ["anick", "sigma_t^2"]
    assert sum(c["name"].startswith("tame_round_trip") for c in cases) == 3
    assert all(c["pass"] for c in cases)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ztame.cli", "check-auto", "-f", "z^2", "-g", "y"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "NotAutomorphism"
