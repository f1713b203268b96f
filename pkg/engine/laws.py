"""Law reports: violated law instances and structural errors, kept apart and sorted for output."""
import logging
from dataclasses import dataclass, field

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Violation:
    law: str
    instance: tuple[str, ...]
    detail: str = ""

    def to_dict(self) -> dict:
        return {"law": self.law, "instance": list(self.instance), "detail": self.detail}


@dataclass
class LawReport:
    """Violated law instances plus structural errors, kept apart.

    An empty report (no violations, no structural errors) means the checked
    value is valid.
    """

    violations: list[Violation] = field(default_factory=list)
    structural: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.structural

    def fail(self, law: str, *instance: str, detail: str = "") -> None:
        self.violations.append(Violation(law, tuple(str(x) for x in instance), detail))

    def structural_error(self, message: str) -> None:
        self.structural.append(message)

    def extend(self, other: "LawReport", prefix: str | None = None) -> "LawReport":
        for v in other.violations:
            law = f"{prefix}.{v.law}" if prefix else v.law
            self.violations.append(Violation(law, v.instance, v.detail))
        self.structural.extend(other.structural)
        return self

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def canonical(self) -> "LawReport":
        """Deduplicated and sorted copy; reports compare equal iff canonical forms do."""
        return LawReport(sorted(set(self.violations)), sorted(set(self.structural)))

    def to_dict(self) -> dict:
        c = self.canonical()
        return {
            "violations": [v.to_dict() for v in c.violations],
            "structural": list(c.structural),
        }

    def __bool__(self) -> bool:
        return self.ok
