"""Adjunctions in the engine's 2-categories, and the enrichment of an SMCCAT adjunction.

F ⊣ G with F: A → B, G: B → A, η: 1_A ⇒ GF and ε: FG ⇒ 1_B. For an
adjunction in SMCCAT over V the enriched version is F́ ⊣ G̀ between
underline(V) and G_*underline(M).
"""
import logging
from dataclasses import dataclass, field

from engine.autoenrich import autoenrich, grave, grave_nat
from engine.chbase import (
    comparison_KG,
    is_normal,
    normality_witness,
    push_monvcat,
    push_monvfunctor,
    push_monvnat,
    push_nat_family_mon,
)
from engine.enriched import (
    MonVFunctor,
    MonVNatTrans,
    check_monvnat,
    compose_monv,
    identity_monv,
    underlying_functor,
)
from engine.errors import CompositionError, NotNormalError, StructuralError
from engine.fincat import FinCat, FinFunctor
from engine.groth import EnrV, Groth2Cell, check_groth_2cell
from engine.laws import LawReport
from engine.smcc import MonoidalFunctor, MonoidalNatTrans, check_monoidal_functor, check_monoidal_nat
from engine.twocat import FibreContext, LaxSliceContext, Slice1Cell, Slice2Cell, SliceObj, SmccatContext, TwoCategory

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Adjunction:
    context: TwoCategory = field(compare=False)
    left: object
    right: object
    unit: object
    counit: object
    name: str = field(default="F⊣G", compare=False)


def _cell_report(ctx: TwoCategory, cell) -> LawReport:
    if isinstance(cell, MonoidalNatTrans):
        return check_monoidal_nat(cell)
    if isinstance(cell, MonVNatTrans):
        return check_monvnat(cell)
    if isinstance(cell, Groth2Cell):
        return check_groth_2cell(cell)
    if isinstance(cell, Slice2Cell):
        report = _cell_report(ctx.inner, cell.alpha)
        if report.ok and not ctx.slice_condition_holds(cell):
            report.fail("slice.condition", cell.name)
        return report
    report = LawReport()
    report.structural_error(f"{type(cell).__name__} is not a 2-cell")
    return report


def check_adjunction(a: Adjunction) -> LawReport:
    """Triangle identities (Gε)·(ηG) = 1_G and (εF)·(Fη) = 1_F, componentwise."""
    report = LawReport()
    ctx = a.context
    F, G, eta, eps = a.left, a.right, a.unit, a.counit
    for law, cell in (("adjunction.unit", eta), ("adjunction.counit", eps)):
        sub = _cell_report(ctx, cell)
        for v in sub.violations:
            report.fail(law, *v.instance, detail=v.law)
        report.structural.extend(sub.structural)
    if not report.ok:
        return report
    try:
        right = ctx.vcomp(ctx.whisker_left(G, eps), ctx.whisker_right(eta, G))
        if not ctx.cell_equal(right, ctx.identity_cell(G)):
            report.fail("adjunction.triangle_right", a.name, detail=_first_difference(ctx, right, ctx.identity_cell(G)))
        left = ctx.vcomp(ctx.whisker_right(eps, F), ctx.whisker_left(F, eta))
        if not ctx.cell_equal(left, ctx.identity_cell(F)):
            report.fail("adjunction.triangle_left", a.name, detail=_first_difference(ctx, left, ctx.identity_cell(F)))
    except (CompositionError, StructuralError) as e:
        report.structural_error(f"{a.name}: {e}")
    return report


def _first_difference(ctx: TwoCategory, got, want) -> str:
    for x, y in zip(ctx.components(got), ctx.components(want)):
        if x != y:
            return f"{x} != {y}"
    return ""


# ── Lax slice adjunction ──────────────────────────────────────────────────────

def laxslice_adjunction(a: Adjunction) -> Adjunction:
    """(F,η) ⊣ (G,1_G): (B,G) → (A,1_A) in K⫽A."""
    k = a.context
    F, G = a.left, a.right
    A, B = k.source(F), k.target(F)
    ctx = LaxSliceContext(k, A)
    base = SliceObj(A, k.identity(A), name=f"({getattr(A, 'name', 'A')},1)")
    over = SliceObj(B, G, name=f"({getattr(B, 'name', 'B')},{getattr(G, 'name', 'G')})")
    left = Slice1Cell(base, over, F, a.unit, name=f"({F.name},{a.unit.name})")
    right = Slice1Cell(over, base, G, k.identity_cell(G), name=f"({G.name},1)")
    unit = Slice2Cell(ctx.identity(base), ctx.compose(right, left), a.unit, name=a.unit.name)
    counit = Slice2Cell(ctx.compose(left, right), ctx.identity(over), a.counit, name=a.counit.name)
    return Adjunction(ctx, left, right, unit, counit, name=f"{a.name}⫽{getattr(A, 'name', 'A')}")


# ── Enriched adjunction ───────────────────────────────────────────────────────

@dataclass
class EnrichedAdjunction:
    adjunction: Adjunction
    report: LawReport


def enrich_adjunction(a: Adjunction) -> EnrichedAdjunction:
    """F́ = G_*(F̀)∘η_*underline(V) ⊣ G̀ in eSMCCAT_V, with its verification report.

    Raises NotNormalError when G is not normal.
    """
    if not isinstance(a.context, SmccatContext):
        raise StructuralError(f"{a.name} is not an adjunction in SMCCAT")
    F, G, eta, eps = a.left, a.right, a.unit, a.counit
    v, m = F.source, F.target
    if not is_normal(G):
        report = LawReport()
        witness = normality_witness(G)
        report.fail("enriched.normal", G.name, *witness)
        raise NotNormalError(f"enriching {a.name}", report, witness)
    uv, um = autoenrich(v), autoenrich(m)
    g_grave = grave(G)
    f_acute = compose_monv(push_monvfunctor(G, grave(F)), push_nat_family_mon(eta, uv))
    f_acute = MonVFunctor(f_acute.functor, f_acute.source, f_acute.target, f_acute.e, f_acute.m, name=f"{F.name}́")
    unit = MonVNatTrans(
        identity_monv(uv), compose_monv(g_grave, f_acute),
        {x: v.name_of(c) for x, c in eta.components.items()},
        name=f"{eta.name}̀",
    )
    counit = MonVNatTrans(
        compose_monv(f_acute, g_grave), identity_monv(push_monvcat(G, um)),
        push_monvnat(G, grave_nat(eps)).components,
        name=f"{eps.name}́",
    )
    enriched = Adjunction(FibreContext(v), f_acute, g_grave, unit, counit, name=f"{F.name}́⊣{G.name}̀")
    report = LawReport()
    report.extend(check_adjunction(enriched), prefix="enriched")
    if report.ok:
        report.extend(_check_identification(a, enriched))
        report.extend(_check_transposes(a, enriched))
    if not report.ok:
        logger.warning("enriched %s: %d violations", a.name, len(report.violations))
    return EnrichedAdjunction(enriched, report)


def _check_identification(a: Adjunction, e: Adjunction) -> LawReport:
    """After renaming M along K^G, the underlying adjunction of e is a."""
    report = LawReport()
    F, G, eta, eps = a.left, a.right, a.unit, a.counit
    v = F.source
    K = comparison_KG(G)
    if not K.is_isomorphism:
        report.fail("enriched.kg_invertible", G.name)
        return report
    logger.info("identifying %s with (%s_*u%s)_0 along %s", G.source.name, G.name, G.source.name, K.name)
    f0 = underlying_functor(e.left.functor)
    su = e.left.source.m.underlying
    for f in v.cat.morphisms:
        key = su.id_of[(v.dom(f), v.cod(f), v.name_of(f))]
        if f0.mmap[key] != K.mmap[F.mor(f)]:
            report.fail("enriched.underlying_left", f, detail=f"{f0.mmap[key]} != {K.mmap[F.mor(f)]}")
    if any(f0.omap[x] != K.omap[F.obj(x)] for x in v.objects):
        report.fail("enriched.underlying_left", F.name, detail="object map")
    g0 = underlying_functor(e.right.functor)
    for f in G.source.cat.morphisms:
        if g0.mmap[K.mmap[f]] != G.mor(f):
            report.fail("enriched.underlying_right", f)
    uu = e.unit.target.target.m.underlying
    for x, n in e.unit.components.items():
        if uu.id_of[(x, G.obj(F.obj(x)), n)] != eta.components[x]:
            report.fail("enriched.underlying_unit", x)
    cu = e.counit.target.target.m.underlying
    for x, n in e.counit.components.items():
        if cu.id_of[(F.obj(G.obj(x)), x, n)] != K.mmap[eps.components[x]]:
            report.fail("enriched.underlying_counit", x)
    return report


def _check_transposes(a: Adjunction, e: Adjunction) -> LawReport:
    """F̀ = ε_*underline(M)∘F_*(F́), and the mate of (F́V, ὴ_V) is F."""
    report = LawReport()
    F, G, eps = a.left, a.right, a.counit
    um = autoenrich(F.target)
    back = compose_monv(push_nat_family_mon(eps, um), push_monvfunctor(F, e.left))
    if back != grave(F):
        report.fail("enriched.transpose_left", F.name)
    v = F.source
    uv = autoenrich(v)
    eta0 = {x: uv.m.underlying.id_of[(x, G.obj(e.left.obj(x)), n)] for x, n in e.unit.components.items()}
    try:
        rebuilt = reconstruct_left_adjoint(G, {x: e.left.obj(x) for x in v.objects}, eta0, name=f"{F.name}'")
    except StructuralError as err:
        report.fail("enriched.mate", F.name, detail=str(err))
        return report
    if rebuilt != F:
        report.fail("enriched.mate", F.name)
    return report


# ── Two-step route through Enr_V ──────────────────────────────────────────────

def check_enrichment_route(a: Adjunction) -> LawReport:
    """Dom∘Enr_V applied to the slice adjunction equals enrich_adjunction(a)."""
    report = LawReport()
    enriched = enrich_adjunction(a).adjunction
    sliced = laxslice_adjunction(a)
    enr = EnrV(a.left.source)
    left = enr.one_cell(sliced.left).s
    right = enr.one_cell(sliced.right).s
    unit = enr.two_cell(sliced.unit).alpha
    counit = enr.two_cell(sliced.counit).alpha
    if left != enriched.left:
        report.fail("route.left", a.name)
    if right != enriched.right:
        report.fail("route.right", a.name)
    if unit.components != enriched.unit.components:
        report.fail("route.unit", a.name)
    if counit.components != enriched.counit.components:
        report.fail("route.counit", a.name)
    return report


# ── Mates ─────────────────────────────────────────────────────────────────────

def _unique(c: FinCat, a: str, b: str, pred, what: str) -> str:
    hits = [h for h in c.hom(a, b) if pred(h)]
    if len(hits) != 1:
        raise StructuralError(f"{what}: {len(hits)} candidate morphisms {a} → {b}")
    return hits[0]


def reconstruct_left_adjoint(G: MonoidalFunctor, objects: dict[str, str], eta: dict[str, str],
                             name: str = "F") -> MonoidalFunctor:
    """The left adjoint determined by G and the family (FV, η_V: V → G FV).

    Its monoidal structure is the inverse of the op-monoidal mate of G's.
    """
    m, v = G.source, G.target
    mc = m.cat
    mmap = {}
    for f in v.cat.morphisms:
        x, y = v.dom(f), v.cod(f)
        want = v.comp(eta[y], f)
        mmap[f] = _unique(mc, objects[x], objects[y], lambda h: v.comp(G.mor(h), eta[x]) == want, f"{name} on {f}")
    functor = FinFunctor(v.cat, mc, dict(objects), mmap, name=name)
    I = v.unit
    op_unit = _unique(mc, objects[I], m.unit, lambda h: v.comp(G.mor(h), eta[I]) == G.e, f"{name} op-unit")
    mult = {}
    for x in v.objects:
        for y in v.objects:
            xy = v.t(x, y)
            fx, fy = objects[x], objects[y]
            want = v.comp(G.m[(fx, fy)], v.tm(eta[x], eta[y]))
            op = _unique(mc, objects[xy], m.t(fx, fy), lambda h: v.comp(G.mor(h), eta[xy]) == want,
                         f"{name} op-multiplication at ({x},{y})")
            mult[(x, y)] = m.inv(op)
    out = MonoidalFunctor(v, m, functor, m.inv(op_unit), mult, name=name)
    if not check_monoidal_functor(out).ok:
        raise StructuralError(f"{name}: the reconstructed left adjoint is not monoidal")
    return out
