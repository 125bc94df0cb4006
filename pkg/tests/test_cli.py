from __future__ import annotations

import json

import pytest

from dimbasis.cli import main
from conftest import FIXTURE_DIR

PIPE = str(FIXTURE_DIR / "pipe.dim")
LAMINAR = str(FIXTURE_DIR / "laminar.dim")
FALLING = str(FIXTURE_DIR / "falling_body.dim")
TWO_BODY = str(FIXTURE_DIR / "two_body.dim")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_laminar(capsys):
    code, out, _ = run(capsys, "rank", "--input", LAMINAR)
    assert code == 0
    assert out == "3\n"


def test_basis_sets_text(capsys):
    code, out, _ = run(capsys, "basis-sets", "--input", FALLING)
    assert code == 0
    assert len(out.splitlines()) == 9
    assert out.splitlines()[0] == "{S(t), V0}"


def test_circuit_basis_text_golden(capsys):
    code, out, _ = run(capsys, "circuit-basis", "--input", PIPE)
    assert code == 0
    assert out.splitlines() == [
        "(dP/l)·rho·d^3 / mu^2",
        "(dP/l)·mu / (rho^2·u^3)",
        "(dP/l)·d / (rho·u^2)",
        "(dP/l)·d^2 / (mu·u)",
        "rho·d·u / mu",
    ]


def test_circuit_basis_json_contains_reynolds(capsys):
    code, out, _ = run(capsys, "circuit-basis", "--input", PIPE, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schemaVersion"] == 1
    assert payload["quantities"] == ["dP/l", "rho", "mu", "d", "u"]
    exponents = [inv["exponents"] for inv in payload["invariants"]]
    assert [0, 1, -1, 1, 1] in exponents
    assert len(exponents) == 5


def test_full_column_rank_yields_empty_invariants(capsys, tmp_path):
    path = tmp_path / "full.dim"
    path.write_text(json.dumps({
        "dimensions": ["L", "T"],
        "quantities": [
            {"name": "a", "dims": [1, 0]},
            {"name": "b", "dims": [0, 1]},
        ],
    }))
    code, out, _ = run(capsys, "circuit-basis", "--input", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["invariants"] == []


def test_representations_count_and_latex(capsys):
    code, out, _ = run(capsys, "representations", "--input", PIPE, "--format", "latex")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert all(r"\Phi_{" in line for line in lines)


def test_representations_dependent_flag_overrides(capsys):
    code, out, _ = run(
        capsys, "representations", "--input", PIPE, "--dependent", "u", "--exclude", "dP/l"
    )
    assert code == 0
    assert all(line.startswith("u = ") for line in out.splitlines())


def test_representations_without_dependent_errors(capsys, tmp_path):
    path = tmp_path / "nodep.dim"
    path.write_text(json.dumps({
        "dimensions": ["L"],
        "quantities": [{"name": "a", "dims": [1]}, {"name": "b", "dims": [1]}],
    }))
    code, _, err = run(capsys, "representations", "--input", str(path))
    assert code == 1
    assert "dependent" in err


def test_representations_warning_on_empty_system(capsys, tmp_path):
    path = tmp_path / "empty.dim"
    path.write_text(json.dumps({
        "dimensions": ["L"],
        "quantities": [{"name": "a", "dims": [1]}, {"name": "b", "dims": [1]}],
        "dependent": "a",
        "excluded": ["b"],
    }))
    code, out, err = run(capsys, "representations", "--input", str(path))
    assert code == 0
    assert out == ""
    assert "no admissible basis set" in err


def test_two_body_scaling_json(capsys):
    code, out, _ = run(capsys, "representations", "--input", TWO_BODY, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["relation"] == "Psi"
    scalings = [rep["scaling"] for rep in payload["representations"]]
    assert scalings[0] == [["d", 3, 2], ["m1", -1, 2], ["G", -1, 2]]
    assert scalings[1] == [["d", 3, 2], ["m2", -1, 2], ["G", -1, 2]]


def test_graver_brute_method(capsys, tmp_path):
    path = tmp_path / "g.dim"
    path.write_text(json.dumps({
        "dimensions": ["X"],
        "quantities": [
            {"name": "q1", "dims": [1]},
            {"name": "q2", "dims": [2]},
            {"name": "q3", "dims": [1]},
        ],
    }))
    code, out, _ = run(capsys, "graver", "--input", str(path), "--graver-method", "brute:4")
    assert code == 0
    assert out.splitlines() == ["q2 / q3^2", "q1·q3 / q2", "q1 / q3", "q1^2 / q2"]
    code2, out2, _ = run(capsys, "graver", "--input", str(path))
    assert code2 == 0
    assert out2 == out


def test_check_passes_on_fixtures(capsys):
    for path in (PIPE, LAMINAR, FALLING, TWO_BODY):
        code, out, _ = run(capsys, "check", "--input", path)
        assert code == 0
        assert "violation" not in out
        assert out.count("ok:") == 5


def test_check_json_format(capsys):
    code, out, _ = run(capsys, "check", "--input", LAMINAR, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert all(entry["ok"] for entry in payload["checks"])


# ------------------------------------------------------------- exit codes


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "rank", "--input", "no/such/file.dim")
    assert code == 1
    assert "cannot read" in err


def test_parse_error_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.dim"
    path.write_text("{broken")
    code, _, err = run(capsys, "rank", "--input", str(path))
    assert code == 1
    assert "error" in err


def test_size_cap_exits_2(capsys):
    code, _, err = run(capsys, "circuits", "--input", PIPE, "--max-n", "3")
    assert code == 2
    assert "cap" in err


def test_bad_graver_method_exits_1(capsys):
    code, _, err = run(capsys, "graver", "--input", PIPE, "--graver-method", "brute:zero")
    assert code == 1
    assert "bound" in err


def test_usage_error_exits_1(capsys):
    assert main(["no-such-command", "--input", PIPE]) == 1


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0


def test_unknown_dependent_exits_1(capsys):
    code, _, err = run(capsys, "representations", "--input", PIPE, "--dependent", "xyz")
    assert code == 1
    assert "unknown dependent" in err


def test_check_violation_exits_3(capsys, monkeypatch):
    import dimbasis.cli as cli_module

    monkeypatch.setattr(
        cli_module, "_run_checks", lambda problem, args: [("forced", False, "probe")]
    )
    code, out, _ = run(capsys, "check", "--input", PIPE)
    assert code == 3
    assert "violation: forced" in out


def test_text_runs_are_deterministic(capsys):
    first = run(capsys, "unified-basis", "--input", FALLING)
    second = run(capsys, "unified-basis", "--input", FALLING)
    assert first == second
