"""
Audit script: lists every entity of an instance file with its size and checker status.
Read-only: changes nothing.

Run against the bundle:
    python scripts/audit_bundle.py
    python scripts/audit_bundle.py --file instances/bundled/c3.inst
"""
import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from dotenv import load_dotenv
load_dotenv(os.getenv("ENV_FILE", ".env"))

from engine.errors import EngineError
from instances.helpers import Resolved, bundled_path, load, validate

logging.basicConfig(
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    level=logging.WARNING,
)
logger = logging.getLogger(__name__)


def _size(section: str, value) -> str:
    if section == "smcc":
        return f"{len(value.objects)} objects, {len(value.cat.morphisms)} morphisms"
    if section == "category":
        return f"{len(value.objects)} objects, {len(value.morphisms)} morphisms"
    if section in ("vcat", "monvcat"):
        return f"{len(value.objects)} objects"
    if section == "functor":
        return f"{value.source.name} → {value.target.name}, {value.strictness}"
    if section == "nat":
        return f"{value.source.name} ⇒ {value.target.name}"
    if section == "base_index":
        return f"{len(value.bases)} bases, {len(value.functors)} functors, {len(value.nats)} transformations"
    if section == "adjunction":
        return f"{value.left.name} ⊣ {value.right.name}"
    return ""


def run_audit(r: Resolved) -> int:
    tables = {
        "category": r.categories, "smcc": r.smccs, "functor": r.functors, "nat": r.nats, "vcat": r.vcats,
        "monvcat": r.monvcats, "base_index": r.base_indexes, "adjunction": r.adjunctions,
    }
    reports = validate(r)
    failing = 0
    print("=" * 60)
    print(f"basechange audit of {r.name}")
    print("=" * 60)
    for section, table in tables.items():
        if not table:
            continue
        print(f"{section} ({len(table)})")
        print("-" * 60)
        for key, value in table.items():
            rep = reports[f"{section}:{key}"]
            status = "ok" if rep.ok else f"{len(rep.violations)} violations, {len(rep.structural)} structural"
            failing += not rep.ok
            print(f"  {key:12} {_size(section, value):40} {status}")
        print()
    print(f"Entities: {r.count()}   failing: {failing}")
    print("=" * 60)
    return failing


def main() -> None:
    parser = argparse.ArgumentParser(description="Audit a basechange instance file")
    parser.add_argument("--file", default=str(bundled_path("bundle")), help="instance file (default: the bundle)")
    args = parser.parse_args()
    try:
        r = load(args.file)
    except EngineError as e:
        print(f"error: {e}")
        sys.exit(2)
    sys.exit(1 if run_audit(r) else 0)


if __name__ == "__main__":
    main()
