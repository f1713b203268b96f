"""Command-line surface, driven through click's CliRunner."""
import json

import pytest
from click.testing import CliRunner

from cli.main import basechange
from instances.helpers import bundled_path

B2 = str(bundled_path("b2"))
BUNDLE = str(bundled_path("bundle"))


@pytest.fixture
def runner():
    return CliRunner()


def _write(tmp_path, text: str) -> str:
    path = tmp_path / "scratch.inst"
    path.write_text(text, encoding="utf-8")
    return str(path)


# ── validate ──────────────────────────────────────────────────────────────────

def test_validate_bundled_file(runner):
    result = runner.invoke(basechange, ["validate", B2])
    assert result.exit_code == 0
    assert "ok    smcc:B2" in result.output


def test_validate_reports_violations(runner, tmp_path):
    text = (bundled_path("b2").read_text(encoding="utf-8")
            + "smcc:\n  - id: B2bad\n    quantale: B2\n    overrides:\n      - {table: ihom, key: ['1', '0'], value: '1'}\n")
    result = runner.invoke(basechange, ["validate", _write(tmp_path, text), "--format", "json"])
    assert result.exit_code == 1
    assert json.loads(result.output)["smcc:B2bad"]["violations"]


def test_validate_parse_error_exits_2(runner, tmp_path):
    result = runner.invoke(basechange, ["validate", _write(tmp_path, "version: 1\nquantale: [\n")])
    assert result.exit_code == 2
    assert "error:" in result.output


# ── check / report ────────────────────────────────────────────────────────────

def test_check_single_suite(runner):
    result = runner.invoke(basechange, ["check", "smcc", "--file", B2])
    assert result.exit_code == 0
    assert "1 pass, 0 fail, 0 error, 0 skipped" in result.output


def test_check_json(runner):
    result = runner.invoke(basechange, ["check", "smcc", "autoenrich", "--file", B2, "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["suites"] == ["smcc", "autoenrich"]
    assert data["summary"]["pass"] == 2


def test_check_unknown_suite(runner):
    result = runner.invoke(basechange, ["check", "nope", "--file", B2])
    assert result.exit_code == 2
    assert "unknown suite 'nope'" in result.output


def test_report_on_bundle(runner):
    result = runner.invoke(basechange, ["report", BUNDLE, "--format", "json", "--probe-bound", "8"])
    data = json.loads(result.output)
    assert data["summary"]["fail"] == 0
    assert data["summary"]["error"] == 0
    assert result.exit_code == 0


# ── construct ─────────────────────────────────────────────────────────────────

def test_construct_autoenrichment(runner):
    result = runner.invoke(basechange, ["construct", "autoenrich", "B2", "--file", B2, "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["objects"] == ["0", "1"]
    assert data["unit_obj"] == "1"


def test_construct_normality_witness(runner):
    result = runner.invoke(basechange, ["construct", "normality", "t", "--file", BUNDLE, "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"functor": "t", "normal": False, "witness": ["0"]}


def test_construct_wrong_arity(runner):
    result = runner.invoke(basechange, ["construct", "push", "q", "--file", BUNDLE])
    assert result.exit_code == 2
    assert "takes 2 argument(s)" in result.output


def test_construct_unknown_entity(runner):
    result = runner.invoke(basechange, ["construct", "grave", "nope", "--file", BUNDLE])
    assert result.exit_code == 2
    assert "no functor with id 'nope'" in result.output
