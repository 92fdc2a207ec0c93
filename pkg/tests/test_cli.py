"""Tests for the command-line interface."""

import json
import tempfile
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli import cli

SAMPLE_CATALOG = Path(__file__).parent.parent / "sample_data" / "torus_knots.json"


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("KNOTLAB_CATALOG", "KNOTLAB_OUTPUT", "KNOTLAB_WORKERS"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def runner():
    return CliRunner()


def test_catalog_listing(runner):
    result = runner.invoke(cli, ["catalog"])
    assert result.exit_code == 0
    assert "trefoil" in result.output
    assert "1 - t + t^2" in result.output


def test_catalog_json(runner):
    result = runner.invoke(cli, ["catalog", "--json"])
    assert result.exit_code == 0
    records = json.loads(result.stdout)
    assert [r["name"] for r in records][:2] == ["unknot", "trefoil"]
    assert set(records[0]) == {"name", "size", "epsilon", "alexander"}


def test_invariants(runner):
    result = runner.invoke(cli, ["invariants", "trefoil"])
    assert result.exit_code == 0
    assert "Alexander polynomial: 1 - t + t^2" in result.output
    assert "nonsingular: pass" in result.output


def test_invariants_json(runner):
    result = runner.invoke(cli, ["invariants", "figure-eight", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["alexander"] == {"0": "1", "1": "-3", "2": "1"}
    assert payload["hermitian"] is True
    assert len(payload["pairing"]) == 2


def test_unknown_knot(runner):
    result = runner.invoke(cli, ["invariants", "granny"])
    assert result.exit_code == 4
    assert "granny" in result.output


def test_verify_even(runner):
    result = runner.invoke(cli, ["verify", "trefoil", "--k", "2", "--no-scaling"])
    assert result.exit_code == 0
    assert "✓ [Informal] informal-minus(k=2): Metabolizer" in result.output
    assert "consistency: pass" in result.output


def test_verify_odd_json(runner):
    result = runner.invoke(
        cli, ["verify", "trefoil", "--k", "1", "--eps=-1", "--no-scaling", "--json"]
    )
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["passed"] is True
    assert payload["eps"] == -1
    assert len(payload["candidates"]) == 6


def test_verify_odd_without_eps(runner):
    result = runner.invoke(cli, ["verify", "trefoil", "--k", "3"])
    assert result.exit_code == 5


def test_verify_eps_with_even_k(runner):
    result = runner.invoke(cli, ["verify", "trefoil", "--k", "2", "--eps", "1"])
    assert result.exit_code == 5


def test_verify_bad_integer(runner):
    result = runner.invoke(cli, ["verify", "trefoil", "--k", "two"])
    assert result.exit_code == 5


def test_verify_bad_eps(runner):
    result = runner.invoke(cli, ["verify", "trefoil", "--k", "1", "--eps", "2"])
    assert result.exit_code == 5


def test_missing_option(runner):
    result = runner.invoke(cli, ["verify", "trefoil"])
    assert result.exit_code == 5


def test_branched(runner):
    result = runner.invoke(cli, ["branched", "trefoil", "--k=-1..2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["knot"] == "trefoil"
    assert payload["skipped"] == [0]
    assert [row["order"] for row in payload["rows"]] == [1, 1, 3]


def test_branched_human_note(runner):
    result = runner.invoke(cli, ["branched", "trefoil", "--k", "0..3"])
    assert result.exit_code == 0
    assert "k=0 skipped" in result.output


def test_branched_bad_range(runner):
    assert runner.invoke(cli, ["branched", "trefoil", "--k", "3..1"]).exit_code == 5
    assert runner.invoke(cli, ["branched", "trefoil", "--k", "1-3"]).exit_code == 5


def test_catalog_from_environment(runner, monkeypatch):
    monkeypatch.setenv("KNOTLAB_CATALOG", str(SAMPLE_CATALOG))
    result = runner.invoke(cli, ["invariants", "skew-stevedore"])
    assert result.exit_code == 0
    assert "eps -1" in result.output


def test_catalog_option(runner):
    result = runner.invoke(cli, ["catalog", "--catalog", str(SAMPLE_CATALOG)])
    assert result.exit_code == 0
    assert "T(2,7)" in result.output


def test_malformed_catalog(runner):
    with tempfile.TemporaryDirectory() as tmpdir:
        path = Path(tmpdir) / "broken.json"
        path.write_text("")
        result = runner.invoke(cli, ["catalog", "--catalog", str(path)])
    assert result.exit_code == 2
    assert "line 1" in result.output


def test_invalid_catalog_entry(runner):
    with tempfile.TemporaryDirectory() as tmpdir:
        path = Path(tmpdir) / "invalid.json"
        path.write_text('[\n  {"name": "bad", "matrix": [[1, 0], [0, 1]]}\n]\n')
        result = runner.invoke(cli, ["catalog", "--catalog", str(path)])
    assert result.exit_code == 3


def test_invariants_unknot(runner):
    result = runner.invoke(cli, ["invariants", "unknot"])
    assert result.exit_code == 0
    assert "trivial module" in result.output


def test_branched_unknot(runner):
    result = runner.invoke(cli, ["branched", "unknot", "--k", "1..6", "--json"])
    assert result.exit_code == 0
    assert {row["order"] for row in json.loads(result.stdout)["rows"]} == {1}


def test_float_epsilon_is_a_parse_error(runner):
    with tempfile.TemporaryDirectory() as tmpdir:
        path = Path(tmpdir) / "float.json"
        path.write_text('[\n  {"name": "trefoil", "epsilon": 1.0, "matrix": [[-1, 1], [0, -1]]}\n]\n')
        listing = runner.invoke(cli, ["catalog", "--catalog", str(path)])
        invariants = runner.invoke(cli, ["invariants", "trefoil", "--catalog", str(path)])
    assert listing.exit_code == 2
    assert invariants.exit_code == 2


def test_malformed_workers_setting(runner, monkeypatch):
    monkeypatch.setenv("KNOTLAB_WORKERS", "two")
    result = runner.invoke(cli, ["catalog"])
    assert result.exit_code == 5
    assert "KNOTLAB_WORKERS" in result.output
