from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from eqgeom import cli, verify


@pytest.fixture()
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli.main, list(args))

    return invoke


def test_geometry_stats_json(run):
    res = run("geometry", "stats", "--n", "6", "--m", "2", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert (data["points"], data["lines"], data["lines_per_point"], data["diameter"]) == (15, 15, 3, 2)


def test_output_is_deterministic(run):
    for args in [("geometry", "lines", "--n", "6", "--m", "2"), ("aut", "group", "--n", "6", "--m", "2", "--format", "json")]:
        assert run(*args).output == run(*args).output


def test_aut_group_order(run):
    res = run("aut", "group", "--n", "7", "--m", "2", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["order"] == 40320
    assert all(sorted(g["perm"]) == list(range(1, 8)) for g in data["generators"])


def test_aut_group_reports_two_factor_generators(run):
    data = json.loads(run("aut", "group", "--n", "8", "--m", "2", "--format", "json").output)
    assert data["order"] == 2580480
    assert any(len(g.get("word", [])) == 2 for g in data["generators"])


def test_aut_group_classify_small(run):
    res = run("aut", "group", "--n", "4", "--m", "1", "--classify")
    assert res.exit_code == 0 and "classification_failures: 0" in res.output


def test_aut_group_classify_too_large(run):
    assert run("aut", "group", "--n", "8", "--m", "2", "--classify").exit_code == 2


def test_aut_classify(run):
    res = run("aut", "classify", "--n", "7", "--m", "2", "--perm", "2,1,3,4,5,6,7", "--map", "l:1")
    assert res.exit_code == 0 and res.output.strip() == "perm 2,1,3,4,5,6,7 after l(1)"
    assert run("aut", "classify", "--n", "7", "--m", "2", "--perm", "1,1,3,4,5,6,7").exit_code == 2


def test_aut_gamma_group(run):
    res = run("aut", "gamma-group", "--n", "4", "--m", "1", "--format", "json")
    assert json.loads(res.output) == {"order": 48, "geometry_order": 24, "equal": False}


def test_codes_commands(run):
    res = run("codes", "decompose", "--matrix", "1100,0110", "--format", "json")
    assert json.loads(res.output) == {"k": 2, "s": 1, "r": 1, "t": 2, "n": 4}
    assert "max_dim: 3" in run("codes", "maxdim", "--n", "7", "--t", "4").output
    assert run("codes", "decompose", "--matrix", "1000,0100").exit_code == 2


def test_codes_decompose_from_file(run, tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("0001111\n0110011\n1010101\n")
    res = run("codes", "decompose", "--file", str(p), "--format", "json")
    assert res.exit_code == 0 and json.loads(res.output)["t"] == 4


def test_bad_parameters_are_usage_errors(run):
    assert run("geometry", "stats", "--n", "5", "--m", "2").exit_code == 2
    assert run("geometry", "stats", "--n", "6").exit_code == 2
    assert run("johnson", "build", "--n", "5", "--t", "2", "--i", "2").exit_code == 2
    assert run("qary", "stats", "--q", "2", "--k", "2").exit_code == 2
    assert run("verify", "no-such-check").exit_code == 2
    assert run("verify", "config-counts", "--max-n", "2").exit_code == 2


def test_johnson_commands(run):
    res = run("johnson", "path", "--n", "6", "--t", "3", "--i", "1", "--from", "{1,2,3}", "--to", "{1,2,4}")
    assert res.exit_code == 0 and res.output.strip() == "{1,2,3} -> {3,4,5} -> {1,2,4}"
    res = run("johnson", "build", "--n", "5", "--t", "2", "--i", "0", "--format", "json")
    assert json.loads(res.output)["degree"] == 3
    no_path = run("johnson", "path", "--n", "6", "--t", "3", "--i", "0", "--from", "{1,2,3}", "--to", "{1,2,4}")
    assert no_path.exit_code == 2


def test_qary_commands(run):
    assert json.loads(run("qary", "stats", "--q", "3", "--k", "2", "--format", "json").output)["num_points"] == 16
    data = json.loads(run("qary", "example", "--format", "json").output)
    assert data["collinear"] is False and data["common_neighbors"] == 0 and data["diameter"] == 3


def test_export_to_file(run, tmp_path):
    out = tmp_path / "g.json"
    res = run("geometry", "export", "--n", "6", "--m", "2", "--output", str(out))
    assert res.exit_code == 0 and res.output == ""
    assert len(json.loads(out.read_text())["points"]) == 15
    dot = tmp_path / "g.dot"
    run("geometry", "export", "--n", "6", "--m", "2", "--format", "dot", "--output", str(dot))
    assert dot.read_text().startswith("graph")


def test_verify_pass_and_fail(run, monkeypatch):
    res = run("verify", "config-counts", "--max-n", "8")
    assert res.exit_code == 0 and res.output.startswith("PASS")
    monkeypatch.setattr(verify, "run_check", lambda tag, max_n, seed: verify.CheckResult(tag, False, ["boom"]))
    res = run("verify", "config-counts")
    assert res.exit_code == 1 and "FAIL" in res.output and "boom" in res.output


def test_version(run):
    assert run("--version").exit_code == 0
