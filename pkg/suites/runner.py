"""Run theorem suites over a resolved instance and assemble a deterministic report."""
import asyncio
import json
import logging
import time
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field

from engine import config
from engine.errors import LawViolationError
from engine.laws import LawReport
from instances.helpers import Resolved, load
from suites.registry import SUITES, CheckTask, expand

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

Status = Literal["pass", "fail", "error", "skipped"]


# ── Report payloads ───────────────────────────────────────────────────────────

class ViolationPayload(BaseModel):
    law: str
    instance: list[str]                # cell ids the law was instantiated at
    detail: str = ""


class CheckResult(BaseModel):
    suite: str
    subject: str
    status: Status
    violations: list[ViolationPayload] = Field(default_factory=list)
    structural: list[str] = Field(default_factory=list)
    error: Optional[str] = None
    seconds: Optional[float] = None    # only with timings


class RunReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    instance: str
    suites: list[str]
    results: list[CheckResult] = Field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "error": 0, "skipped": 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def exit_code(self) -> int:
        counts = self.summary
        if counts["error"]:
            return 2
        return 1 if counts["fail"] else 0

    def to_json(self) -> str:
        data = self.model_dump(mode="json", exclude_none=True)
        data["summary"] = self.summary
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _from_report(task: CheckTask, report: LawReport) -> CheckResult:
    c = report.canonical()
    return CheckResult(
        suite=task.suite,
        subject=task.subject,
        status="pass" if c.ok else "fail",
        violations=[ViolationPayload(**v.to_dict()) for v in c.violations],
        structural=list(c.structural),
    )


def _reraise(e: Exception):
    def run() -> LawReport:
        raise e

    return run


def _execute(task: CheckTask, timings: bool) -> CheckResult:
    start = time.perf_counter()
    try:
        result = _from_report(task, task.run())
    except LawViolationError as e:
        logger.warning("%s/%s: %s", task.suite, task.subject, e)
        result = _from_report(task, e.report)
        if result.status == "pass":
            result = result.model_copy(update={"status": "fail", "structural": [str(e)]})
    except Exception as e:
        logger.error("%s/%s failed: %s", task.suite, task.subject, e)
        result = CheckResult(suite=task.suite, subject=task.subject, status="error", error=f"{type(e).__name__}: {e}")
    if result.status == "fail":
        first = result.violations[0].law if result.violations else "structural"
        logger.warning("%s/%s: fail (%s)", task.suite, task.subject, first)
    if timings:
        result = result.model_copy(update={"seconds": round(time.perf_counter() - start, 4)})
    return result


async def run_suites(r: Resolved, suite_ids: list[str], probe_bound: Optional[int] = None,
                     timings: bool = False) -> RunReport:
    """Every task of every requested suite, concurrently; results keep registry order."""
    ids = expand(suite_ids)
    bound = probe_bound or config.probe_bound()
    report = RunReport(instance=r.name, suites=ids)
    planned: list[tuple[str, list[CheckTask]]] = []
    for sid in ids:
        try:
            tasks = SUITES[sid].collect(r, bound)
        except Exception as e:
            logger.error("collecting suite %s failed: %s", sid, e)
            tasks = [CheckTask(sid, "-", _reraise(e))]
        planned.append((sid, tasks))
        logger.info("suite %s: %d checks", sid, len(tasks))

    flat = [t for _, tasks in planned for t in tasks]
    results = await asyncio.gather(*(asyncio.to_thread(_execute, t, timings) for t in flat))
    it = iter(results)
    for sid, tasks in planned:
        if not tasks:
            report.results.append(CheckResult(suite=sid, subject="-", status="skipped"))
            continue
        report.results.extend(next(it) for _ in tasks)
    s = report.summary
    logger.info("%s: %d pass, %d fail, %d error, %d skipped", r.name, s["pass"], s["fail"], s["error"], s["skipped"])
    return report


def run_file(path: str | Path, suite_ids: list[str], probe_bound: Optional[int] = None,
             timings: bool = False) -> RunReport:
    return asyncio.run(run_suites(load(path), suite_ids, probe_bound=probe_bound, timings=timings))


def format_text(report: RunReport) -> str:
    lines = [f"{report.instance}: {', '.join(report.suites) or 'no suites'}", "=" * 60]
    for r in report.results:
        lines.append(f"  [{r.status.upper():7}] {r.suite}: {r.subject}" + (f"  ({r.seconds}s)" if r.seconds is not None else ""))
        for v in r.violations[:5]:
            lines.append(f"            {v.law} at ({', '.join(v.instance)})" + (f": {v.detail}" if v.detail else ""))
        if len(r.violations) > 5:
            lines.append(f"            ... {len(r.violations) - 5} more")
        for msg in r.structural[:3]:
            lines.append(f"            structural: {msg}")
        if r.error:
            lines.append(f"            error: {r.error}")
    s = report.summary
    lines.append("=" * 60)
    lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['error']} error, {s['skipped']} skipped")
    return "\n".join(lines)
