"""Suite registry and runner: expansion, statuses, exit codes and report determinism."""
import importlib
import json

import pytest

from engine.laws import LawReport
from instances.helpers import bundled_path, load, parse_text, resolve
from suites.registry import SUITES, CheckTask, Suite, UnknownSuiteError, expand
from suites.runner import format_text, run_suites

BROKEN_B2 = """\
version: 1
name: broken
quantale:
  - id: B2
    elements: ['0', '1']
    order: [['0', '1']]
    unit: '1'
    tensor:
      '0': {'0': '0', '1': '0'}
      '1': {'0': '0', '1': '1'}
smcc:
  - id: B2bad
    quantale: B2
    overrides:
      - {table: ihom, key: ['1', '0'], value: '1'}
"""


def _raising_suite(exc: Exception) -> Suite:
    def boom() -> LawReport:
        raise exc

    return Suite("smcc", "raises", "boom", lambda r, b: [CheckTask("smcc", "boom", boom)])


# ── Expansion ─────────────────────────────────────────────────────────────────

def test_expand_all_follows_registry_order():
    assert expand(["all"]) == list(SUITES)


def test_expand_keeps_registry_order_and_drops_repeats():
    assert expand(["kg", "smcc", "kg"]) == ["smcc", "kg"]


def test_expand_unknown_suite():
    with pytest.raises(UnknownSuiteError) as exc:
        expand(["smcc", "nope"])
    assert exc.value.suite == "nope"


# ── Running ───────────────────────────────────────────────────────────────────

@pytest.mark.asyncio
async def test_smcc_suite_passes_on_b2():
    report = await run_suites(load(bundled_path("b2")), ["smcc"])
    assert [(r.subject, r.status) for r in report.results] == [("B2", "pass")]
    assert report.exit_code == 0


@pytest.mark.asyncio
async def test_suite_without_subjects_is_skipped():
    report = await run_suites(load(bundled_path("b2")), ["adjunction"])
    assert [r.status for r in report.results] == ["skipped"]
    assert report.summary["skipped"] == 1
    assert report.exit_code == 0


@pytest.mark.asyncio
async def test_broken_structure_fails():
    report = await run_suites(resolve(parse_text(BROKEN_B2)), ["smcc"])
    by_subject = {r.subject: r for r in report.results}
    assert by_subject["B2"].status == "pass"
    assert by_subject["B2bad"].status == "fail"
    assert "closed.ev_shape" in {v.law for v in by_subject["B2bad"].violations}
    assert report.exit_code == 1


@pytest.mark.asyncio
async def test_raising_check_is_an_error(monkeypatch):
    monkeypatch.setitem(SUITES, "smcc", _raising_suite(RuntimeError("kaput")))
    report = await run_suites(load(bundled_path("b2")), ["smcc"])
    (result,) = report.results
    assert result.status == "error"
    assert result.error == "RuntimeError: kaput"
    assert report.exit_code == 2


@pytest.mark.asyncio
async def test_report_json_is_deterministic():
    r = load(bundled_path("c3"))
    first = await run_suites(r, ["smcc", "autoenrich"])
    second = await run_suites(r, ["autoenrich", "smcc"])
    assert first.to_json() == second.to_json()
    data = json.loads(first.to_json())
    assert data["schema_version"] == 1
    assert data["summary"]["pass"] == len(data["results"])
    assert "seconds" not in data["results"][0]


@pytest.mark.asyncio
async def test_timings_are_recorded_on_request():
    report = await run_suites(load(bundled_path("b2")), ["smcc"], timings=True)
    assert report.results[0].seconds is not None


@pytest.mark.asyncio
async def test_text_format_lists_violations():
    report = await run_suites(resolve(parse_text(BROKEN_B2)), ["smcc"])
    text = format_text(report)
    assert "[FAIL   ] smcc: B2bad" in text
    assert "closed.ev_shape at (" in text
    assert text.endswith("1 pass, 1 fail, 0 error, 0 skipped")


_ENGINE_MODULES = ("smcc", "enriched", "chbase", "autoenrich", "groth", "adjoint")


def _find_operation(dotted: str):
    for mod in _ENGINE_MODULES:
        target = importlib.import_module(f"engine.{mod}")
        try:
            for part in dotted.split("."):
                target = getattr(target, part)
        except AttributeError:
            continue
        return target
    return None


@pytest.mark.parametrize("sid", list(SUITES))
def test_suite_operations_exist(sid):
    for op in SUITES[sid].operation.split(", "):
        assert callable(_find_operation(op)), f"{sid}: {op}"


@pytest.mark.asyncio
async def test_no_suites_gives_an_empty_passing_report():
    report = await run_suites(load(bundled_path("b2")), [])
    assert report.results == []
    assert report.suites == []
    assert report.exit_code == 0
