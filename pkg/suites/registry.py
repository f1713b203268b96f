"""Theorem suites: each id maps to one engine operation run over the eligible entities of an instance.

collect() only lists work; every CheckTask computes its report when run, so
the runner can spread tasks over threads.
"""
import logging
from collections.abc import Callable
from dataclasses import dataclass

from engine.adjoint import check_adjunction, check_enrichment_route, enrich_adjunction, laxslice_adjunction
from engine.autoenrich import (
    autoenrich,
    check_autoenrichment_2functor,
    check_fundamental_lemma,
    grave,
    reconstruct_iso,
)
from engine.chbase import (
    canonical_normalization,
    check_kg_triangle,
    comparison_KG,
    enumerate_monoidal_vnats,
    is_normal,
    kappa,
)
from engine.enriched import check_symmonclosed
from engine.errors import EngineError
from engine.groth import EnrV, check_split_op2fibration, slice_probe
from engine.laws import LawReport
from engine.smcc import MonoidalFunctor, check_monoidal_functor, check_smcc
from instances.helpers import Resolved

logger = logging.getLogger(__name__)


class UnknownSuiteError(EngineError):
    def __init__(self, suite: str):
        self.suite = suite
        super().__init__(f"unknown suite {suite!r} (known: {', '.join(SUITES)})")


@dataclass(frozen=True)
class CheckTask:
    suite: str
    subject: str
    run: Callable[[], LawReport]


@dataclass(frozen=True)
class Suite:
    id: str
    title: str
    operation: str
    collect: Callable[[Resolved, int], list[CheckTask]]


# ── Helpers ───────────────────────────────────────────────────────────────────

def _functor_tasks(suite: str, r: Resolved, check: Callable[[MonoidalFunctor], LawReport],
                   label: str = "") -> list[CheckTask]:
    """One task per declared functor; a functor that is not symmetric monoidal fails with its own report."""
    tasks = []
    for key, F in r.functors.items():
        def run(F=F) -> LawReport:
            pre = check_monoidal_functor(F, require_symmetric=True)
            return pre if not pre.ok else check(F)

        tasks.append(CheckTask(suite, f"{key}{label}", run))
    return tasks


def _truncated(bound: int, objects, one_cells, two_cells):
    if len(one_cells) > bound or len(two_cells) > bound:
        logger.debug("slice probe cut to %d cells of each dimension", bound)
    return objects[:bound], one_cells[:bound], two_cells[:bound]


# ── Checks ────────────────────────────────────────────────────────────────────

def _normalization(F: MonoidalFunctor) -> LawReport:
    """U^M ⇒ F̀ has exactly one monoidal V-natural transformation, and it is κ."""
    report = LawReport()
    G = grave(F)
    found = enumerate_monoidal_vnats(canonical_normalization(G.source).U, G)
    if len(found) != 1:
        report.fail("normalization.unique", F.name, detail=f"{len(found)} transformations")
    elif found[0] != kappa(G):
        report.fail("normalization.kappa", F.name)
    return report


def _normalization_identity(M) -> LawReport:
    report = LawReport()
    U = canonical_normalization(M).U
    found = enumerate_monoidal_vnats(U, U)
    if len(found) != 1:
        report.fail("normalization.unique", U.name, detail=f"{len(found)} transformations")
    return report


def _kg_iff_normal(F: MonoidalFunctor) -> LawReport:
    report = LawReport()
    invertible, normal = comparison_KG(F).is_isomorphism, is_normal(F)
    if invertible != normal:
        report.fail("normality.kg_iff_normal", F.name, detail=f"K invertible={invertible}, normal={normal}")
    return report


def _right_adjoint_normal(a) -> LawReport:
    report = LawReport()
    if not is_normal(a.right):
        report.fail("normality.right_adjoint", a.right.name)
    return report


def _fundamental_lemma(monoidal: bool) -> Callable[[MonoidalFunctor], LawReport]:
    def run(F: MonoidalFunctor) -> LawReport:
        return check_fundamental_lemma(grave(F), monoidal=monoidal)

    return run


def _adjunction(a) -> LawReport:
    report = check_adjunction(a)
    if report.ok:
        report.extend(check_adjunction(laxslice_adjunction(a)), prefix="laxslice")
    return report


def _enriched_adjunction(a) -> LawReport:
    report = LawReport()
    report.extend(enrich_adjunction(a).report)
    if report.ok:
        report.extend(check_enrichment_route(a))
    return report


def _laxslice(idx, v, bound: int) -> LawReport:
    enr = EnrV(v)
    objects, one_cells, two_cells = _truncated(bound, *slice_probe(idx, v))
    return enr.fibre_functor.check(
        [enr.lift_slice_obj(x) for x in objects],
        [enr.lift_slice_one_cell(c) for c in one_cells],
        [enr.lift_slice_two_cell(a) for a in two_cells],
    )


def _enr_v(idx, v, bound: int) -> LawReport:
    return EnrV(v).check(*_truncated(bound, *slice_probe(idx, v)))


# ── Collectors ────────────────────────────────────────────────────────────────

def _each(suite: str, table: dict, check) -> list[CheckTask]:
    return [CheckTask(suite, key, lambda x=x: check(x)) for key, x in table.items()]


def _per_base(suite: str, r: Resolved, bound: int, check) -> list[CheckTask]:
    tasks = []
    for key, idx in r.base_indexes.items():
        for v in idx.bases:
            tasks.append(CheckTask(suite, f"{key}/{v.name}", lambda idx=idx, v=v: check(idx, v, bound)))
    return tasks


def _collect_normalization(r: Resolved, bound: int) -> list[CheckTask]:
    tasks = _functor_tasks("normalization", r, _normalization)
    tasks.extend(_each("normalization", {f"U^{k}": M for k, M in r.monvcats.items()}, _normalization_identity))
    return tasks


def _collect_normality(r: Resolved, bound: int) -> list[CheckTask]:
    tasks = _each("normality", {f"{k}.right": a for k, a in r.adjunctions.items()}, _right_adjoint_normal)
    tasks.extend(_functor_tasks("normality", r, _kg_iff_normal))
    return tasks


def _collect_fund_lemma(r: Resolved, bound: int) -> list[CheckTask]:
    return (_functor_tasks("fund-lemma", r, _fundamental_lemma(False))
            + _functor_tasks("fund-lemma", r, _fundamental_lemma(True), label=" (monoidal)"))


SUITES: dict[str, Suite] = {
    s.id: s
    for s in (
        Suite("smcc", "structure validity", "check_smcc",
              lambda r, b: _each("smcc", r.smccs, check_smcc)),
        Suite("autoenrich", "autoenrichment is symmetric monoidal closed", "check_symmonclosed",
              lambda r, b: _each("autoenrich", r.smccs, lambda v: check_symmonclosed(autoenrich(v)))),
        Suite("normalization", "uniqueness of the canonical normalization", "enumerate_monoidal_vnats",
              _collect_normalization),
        Suite("reconstruction", "reconstruction isomorphism", "reconstruct_iso",
              lambda r, b: _each("reconstruction", r.monvcats, lambda M: reconstruct_iso(M).report)),
        Suite("kg", "comparison triangle", "check_kg_triangle",
              lambda r, b: _functor_tasks("kg", r, check_kg_triangle)),
        Suite("normality", "right adjoints are normal", "is_normal", _collect_normality),
        Suite("fund-lemma", "fundamental lemma", "check_fundamental_lemma", _collect_fund_lemma),
        Suite("2functor", "2-functoriality of the autoenrichment", "check_autoenrichment_2functor",
              lambda r, b: _each("2functor", r.base_indexes, check_autoenrichment_2functor)),
        Suite("split-op2", "split op-2-fibration", "check_split_op2fibration",
              lambda r, b: _each("split-op2", r.base_indexes, lambda idx: check_split_op2fibration(idx, probe_bound=b))),
        Suite("laxslice", "lax slice to the fibre", "LaxSliceToFibre.check",
              lambda r, b: _per_base("laxslice", r, b, _laxslice)),
        Suite("enr-v", "Enr_V against the route through the Grothendieck construction", "EnrV.check",
              lambda r, b: _per_base("enr-v", r, b, _enr_v)),
        Suite("adjunction", "triangle identities", "check_adjunction, laxslice_adjunction",
              lambda r, b: _each("adjunction", r.adjunctions, _adjunction)),
        Suite("enriched-adjunction", "enriched adjunction", "enrich_adjunction",
              lambda r, b: _each("enriched-adjunction", r.adjunctions, _enriched_adjunction)),
    )
}


def expand(suite_ids: list[str]) -> list[str]:
    """'all' stands for every registered suite; order follows the registry."""
    wanted = set()
    for s in suite_ids:
        if s == "all":
            wanted.update(SUITES)
        elif s in SUITES:
            wanted.add(s)
        else:
            raise UnknownSuiteError(s)
    return [s for s in SUITES if s in wanted]
