"""Exception hierarchy for the engine.

Law failures are never raised by checkers; they are collected in a LawReport.
These exceptions cover malformed input, guards, and constructions that must
abort on a failed sub-check.
"""


class EngineError(RuntimeError):
    """Base class for every engine error."""


class StructuralError(EngineError):
    """Unknown ids, shape mismatches, or otherwise malformed tables."""


class CompositionError(StructuralError):
    def __init__(self, g: str, f: str, detail: str = ""):
        self.g = g
        self.f = f
        msg = f"cannot compose {g} after {f}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class QuantaleError(StructuralError):
    def __init__(self, message: str, witness: tuple[str, ...] = ()):
        self.witness = witness
        if witness:
            message = f"{message} (witness {', '.join(witness)})"
        super().__init__(message)


class MonoidError(StructuralError):
    def __init__(self, message: str, witness: tuple[str, ...] = ()):
        self.witness = witness
        if witness:
            message = f"{message} (witness {', '.join(witness)})"
        super().__init__(message)


class PreconditionError(StructuralError):
    def __init__(self, equation: str, detail: str = ""):
        self.equation = equation
        super().__init__(f"precondition {equation} fails" + (f": {detail}" if detail else ""))


class SizeGuardError(EngineError):
    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(
            f"{what} would have {size} cells, above the bound of {bound} "
            f"(raise BASECHANGE_MAX_CELLS to allow it)"
        )


class EnumerationGuardError(EngineError):
    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: {size} candidate families exceeds the bound of {bound}")


class LawViolationError(EngineError):
    """A construction aborted because a sub-check failed. Carries the report."""

    def __init__(self, what: str, report):
        self.what = what
        self.report = report
        first = report.violations[0] if report.violations else None
        detail = f"{first.law} at {first.instance}" if first else "; ".join(report.structural[:1])
        super().__init__(f"{what} failed: {detail}")


class NotNormalError(LawViolationError):
    def __init__(self, what: str, report, witness: tuple[str, ...] = ()):
        self.witness = witness
        super().__init__(what, report)
