import json

import pytest

from algebra.exact_scalars import Level
from api.cli import EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_OK, EXIT_RESOURCE, main, parse_config
from skein.diagram import save_diagram, theta_network
from skein.recoupling import theta
from utilities.serialization import load_scalar


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_basis_command(capsys):
    code, out = _run(capsys, "basis", "--r", "5", "--genus", "2")
    assert code == EXIT_OK
    payload = json.loads(out.out)
    assert payload["dimension"] == 20 and len(payload["rows"]) == 20
    assert payload["verlinde"] == pytest.approx(20)


@pytest.mark.parametrize("argv", [["basis", "--genus", "9"], ["basis", "--r", "2"], ["frobnicate"],
                                  ["basis", "--format", "yaml"], ["eval"]])
def test_invalid_input_exits_with_one(capsys, argv):
    code, out = _run(capsys, *argv)
    assert code == EXIT_INVALID
    assert out.err.startswith("error:")


def test_eval_theta_file(capsys, tmp_path):
    path = tmp_path / "theta.skein"
    save_diagram(theta_network(1, 1, 2), path)
    code, out = _run(capsys, "eval", "--r", "5", "--file", str(path), "--strategy", "naive")
    assert code == EXIT_OK
    payload = json.loads(out.out)
    assert load_scalar(payload["value"]) == theta(1, 1, 2, Level(5))
    assert payload["file"] == "theta.skein"


def test_eval_empty_diagram_is_one(capsys, tmp_path):
    path = tmp_path / "empty.skein"
    path.write_text("# nothing to see\n")
    code, out = _run(capsys, "eval", "--file", str(path))
    assert code == EXIT_OK
    assert json.loads(out.out)["value"]["numeric"] == [1.0, 0.0]


def test_eval_open_diagram_is_invalid(capsys, tmp_path):
    path = tmp_path / "open.skein"
    path.write_text("CUP 0 1\n")
    code, out = _run(capsys, "eval", "--file", str(path))
    assert code == EXIT_INVALID
    assert "NotClosed" in out.err


def test_budget_exhaustion_exits_with_two(capsys, tmp_path):
    path = tmp_path / "theta.skein"
    save_diagram(theta_network(2, 2, 2), path)
    code, out = _run(capsys, "eval", "--r", "5", "--file", str(path), "--strategy", "naive", "--budget", "1")
    assert code == EXIT_RESOURCE
    assert "term budget" in out.err


def test_tables_as_csv(capsys):
    code, out = _run(capsys, "tables", "--r", "4", "--format", "csv")
    assert code == EXIT_OK
    lines = out.out.splitlines()
    assert lines[0] == "kind,labels,value"
    assert sum(1 for line in lines if line.startswith("delta,")) == 3


def test_rep_with_named_curve(capsys):
    code, out = _run(capsys, "rep", "--r", "3", "--curve", "meridian")
    assert code == EXIT_OK
    payload = json.loads(out.out)
    assert [m["name"] for m in payload["matrices"]] == ["meridian"]
    assert payload["matrices"][0]["matrix"]["shape"] == [2, 2]


def test_rep_unknown_curve(capsys):
    code, _ = _run(capsys, "rep", "--r", "3", "--curve", "nowhere")
    assert code == EXIT_INVALID


def test_irr_and_invariants(capsys):
    code, out = _run(capsys, "irr", "--r", "5")
    assert code == EXIT_OK
    assert json.loads(out.out)["verdict"] == "irreducible"
    code, out = _run(capsys, "invariants", "--r", "5", "--bound", "2")
    assert code == EXIT_OK
    assert json.loads(out.out)["count"] == 1


def test_check_passes_and_writes_output(tmp_path, capsys):
    target = tmp_path / "check.json"
    code, out = _run(capsys, "check", "--r", "3", "--output", str(target))
    assert code == EXIT_OK
    assert out.out == ""
    payload = json.loads(target.read_text())
    assert payload["passed"]
    assert {row["name"] for row in payload["rows"]} >= {"modular_relations", "counterexample_reducible"}


def test_check_reports_failures(capsys):
    # at r=6 two colors share a twist eigenvalue
    code, out = _run(capsys, "check", "--r", "6")
    assert code == EXIT_CHECK_FAILED
    rows = {row["name"]: row["passed"] for row in json.loads(out.out)["rows"]}
    assert not rows["pants_eigentuples_distinct"]


def test_parse_config_budget_from_environment(monkeypatch):
    monkeypatch.setenv("SKEINREP_BUDGET", "1234")
    assert parse_config(["basis"]).budget == 1234
    assert parse_config(["basis", "--budget", "5"]).budget == 5


@pytest.mark.parametrize("argv", [["tables", "--r", "5"], ["rep", "--r", "3", "--genus", "2", "--format", "csv"],
                                  ["invariants", "--r", "6", "--bound", "2", "--format", "text"]])
def test_output_is_identical_across_runs(tmp_path, capsys, argv):
    first, second = tmp_path / "first.out", tmp_path / "second.out"
    assert _run(capsys, *argv, "--output", str(first))[0] == EXIT_OK
    assert _run(capsys, *argv, "--output", str(second))[0] == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    code, out = _run(capsys, *argv)
    assert code == EXIT_OK
    assert out.out == _run(capsys, *argv)[1].out
