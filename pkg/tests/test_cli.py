import json
import os

import pytest
from click.testing import CliRunner

from cli import main
from graph_core import to_edge_list, to_graph6
from tests.named_graphs import C4, C5, THETA7


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_analyze_text(runner):
    result = runner.invoke(main, ["analyze"], input=to_edge_list(THETA7))
    assert result.exit_code == 0
    assert "family: EvenLinked" in result.output
    assert "mismatches: none" in result.output


def test_analyze_json(runner):
    result = runner.invoke(main, ["analyze", "--json"], input=to_edge_list(THETA7))
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["classification"]["tag"] == "EvenLinked"
    assert report["oracle"]["core"] == [3]
    assert report["predicted"]["identity_class"] == "TwoAlpha"


def test_analyze_graph6(runner):
    result = runner.invoke(main, ["analyze", "--format", "g6", "--no-oracle"], input=to_graph6(C5) + "\n")
    assert result.exit_code == 0
    assert "family: OneOddCycle" in result.output
    assert "oracle:" not in result.output


def test_analyze_out_of_scope(runner):
    result = runner.invoke(main, ["analyze"], input=to_edge_list(C4))
    assert result.exit_code == 0
    assert "OutOfScope" in result.output


def test_analyze_malformed_input(runner):
    result = runner.invoke(main, ["analyze"], input="3 2\n0 1\n")
    assert result.exit_code == 2


def test_verify(runner):
    result = runner.invoke(main, ["verify", "--families", "OddLinked,FusedOdd", "--count", "2", "--max-n", "10"])
    assert result.exit_code == 0
    assert "checked: 4" in result.output
    assert "unexpected mismatches: 0" in result.output


def test_verify_writes_json_output(runner, tmp_path):
    output = tmp_path / "summary.json"
    result = runner.invoke(main, [
        "verify", "--families", "OneOddCycle", "--count", "2", "--max-n", "9", "--json", "--output", str(output),
    ])
    assert result.exit_code == 0
    summary = json.loads(output.read_text())
    assert summary["families"]["OneOddCycle"]["checked"] == 2
    assert summary["mismatch_records"] == []


@pytest.mark.parametrize("args", [
    ["--count", "0"],
    ["--workers", "0"],
    ["--families", "Bogus"],
    ["--families", "EvenLinked", "--max-n", "6"],
    ["--seed", "-1"],
])
def test_verify_usage_errors(runner, args):
    assert runner.invoke(main, ["verify"] + args).exit_code == 2


def test_bicritical_fraction(runner):
    result = runner.invoke(main, ["bicritical-fraction", "--n", "4", "--p", "1.0", "--trials", "10"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["n,p,trials,fraction", "4,1.0,10,1.0"]


def test_bicritical_fraction_rejects_bad_orders(runner):
    assert runner.invoke(main, ["bicritical-fraction", "--n", "four"]).exit_code == 2
    assert runner.invoke(main, ["bicritical-fraction", "--n", "4", "--trials", "0"]).exit_code == 2


def test_gen(runner, tmp_path):
    result = runner.invoke(main, ["gen", "OneOddCycle", "--max-n", "9", "--count", "2", "--out-dir", str(tmp_path)])
    assert result.exit_code == 0
    paths = result.output.split()
    assert len(paths) == 2
    for path in paths:
        assert os.path.exists(path)
        assert os.path.exists(path[:-len(".el")] + ".recipe.json")


def test_gen_budget_too_small(runner, tmp_path):
    result = runner.invoke(main, ["gen", "FusedOdd", "--max-n", "4", "--out-dir", str(tmp_path)])
    assert result.exit_code == 2


def test_enumerate(runner):
    result = runner.invoke(main, ["enumerate", "--max-n", "5"], input="Bw\n" + to_graph6(C4) + "\n")
    assert result.exit_code == 0
    assert "checked: 1" in result.output


def test_enumerate_empty_stream(runner):
    assert runner.invoke(main, ["enumerate"], input="").exit_code == 2


def test_bicritical_fraction_golden_values(runner):
    args = ["bicritical-fraction", "--n", "8,10,12", "--p", "0.5", "--trials", "500", "--seed", "42"]
    result = runner.invoke(main, args)
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "n,p,trials,fraction",
        "8,0.5,500,0.482",
        "10,0.5,500,0.74",
        "12,0.5,500,0.918",
    ]
    assert runner.invoke(main, args).output == result.output


def test_analyze_reports_assumed_bicriticality(runner, monkeypatch):
    monkeypatch.setattr("bicritical.BICRITICAL_ORACLE_LIMIT", 4)
    result = runner.invoke(main, ["analyze"], input=to_edge_list(C5))
    assert result.exit_code == 0
    assert "bicriticality: assumed, not checked" in result.output

    strict = runner.invoke(main, ["analyze", "--strict"], input=to_edge_list(C5))
    assert strict.exit_code == 2
