"""The autoenrichment V ↦ underline(V) and what hangs off it.

G̀ and ᾰ for monoidal functors and transformations, superposed V-categories,
the reconstruction of a symmetric monoidal closed V-category from its
underlying data, and the checks for the Fundamental Lemma and for
2-functoriality of underline(−).
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from engine.cache import memoize_by_identity
from engine.chbase import (
    canonical_normalization,
    comparison_KG,
    push_monvcat,
    push_monvfunctor,
    push_nat_family,
    push_nat_family_mon,
    push_vfunctor,
    theta,
)
from engine.enriched import (
    Closure,
    MonVFunctor,
    MonVNatTrans,
    SymMonClosedVCat,
    VCat,
    VFunctor,
    check_monvfunctor,
    check_symmonclosed,
    check_vcat,
    check_vfunctor,
    closure_iso,
    compose_monv,
    compose_vfunctors,
    hom_vfunctor,
    identity_monv,
    identity_vfunctor,
    opposite_vcat,
    profunctor_from_actions,
    right_tensor,
    smcc_of,
    tensor_vcat,
    tensor_vfunctors,
    underlying_monoidal_functor,
    underlying_monoidal_nat,
    underlying_smcc,
)
from engine.errors import CompositionError, LawViolationError, StructuralError
from engine.fincat import pair_id
from engine.laws import LawReport
from engine.smcc import (
    MonoidalFunctor,
    MonoidalNatTrans,
    Smcc,
    agree,
    check_monoidal_functor,
    check_monoidal_nat,
    compose_monoidal,
    identity_monoidal,
    vcomp_monoidal,
    whisker_left_monoidal,
    whisker_right_monoidal,
)

logger = logging.getLogger(__name__)

__all__ = [
    "Reconstruction",
    "SuperposedVCat",
    "autoenrich",
    "check_autoenrichment_2functor",
    "check_fundamental_lemma",
    "check_superposed",
    "grave",
    "grave_nat",
    "reconstruct_iso",
    "superposed_inclusion",
    "trivial_superposition",
    "underlying_smcc",
]


# ── underline(V) ──────────────────────────────────────────────────────────────

@memoize_by_identity
def autoenrich(v: Smcc) -> SymMonClosedVCat:
    """V as a symmetric monoidal closed V-category; hom(A,B) = [A,B]."""
    obs = v.objects
    I = v.unit
    hom = {(x, y): v.h(x, y) for x in obs for y in obs}
    comp = {}
    for x in obs:
        for y in obs:
            for z in obs:
                hxy, hyz = hom[(x, y)], hom[(y, z)]
                f = v.seq(v.a_inv(x, hxy, hyz), v.tm(v.evaluation(x, y), v.id(hyz)), v.evaluation(y, z))
                comp[(x, y, z)] = v.transpose(f, x, v.t(hxy, hyz))
    unit = {x: v.transpose(v.r(x), x, I) for x in obs}
    a = VCat(v, obs, hom, comp, unit, name=f"u{v.name}")

    src = tensor_vcat(a, a)
    hmap = {}
    for p, (x, y) in src.factors.items():
        for p2, (x2, y2) in src.factors.items():
            hx, hy = hom[(x, x2)], hom[(y, y2)]
            f = v.comp(v.tm(v.evaluation(x, x2), v.evaluation(y, y2)), v.interchange(x, y, hx, hy))
            hmap[(p, p2)] = v.transpose(f, v.t(x, y), v.t(hx, hy))
    tensor = VFunctor(src, a, {p: v.t(x, y) for p, (x, y) in src.factors.items()}, hmap, name="⊗")

    closure = Closure(
        ihom=dict(hom),
        rmap={
            (x, p, p2): v.transpose(comp[(x, p, p2)], hom[(x, p)], hom[(p, p2)])
            for x in obs for p in obs for p2 in obs
        },
        unit={(x, y): v.name_of(v.transpose(v.id(v.t(x, y)), x, y)) for x in obs for y in obs},
        counit={(x, p): v.name_of(v.evaluation(x, p)) for x in obs for p in obs},
    )
    out = SymMonClosedVCat(
        a,
        tensor,
        I,
        {k: v.name_of(f) for k, f in v.assoc.items()},
        {k: v.name_of(f) for k, f in v.lunit.items()},
        {k: v.name_of(f) for k, f in v.runit.items()},
        {k: v.name_of(f) for k, f in v.sym.items()},
        closure,
        name=f"u{v.name}",
    )
    logger.debug("autoenriched %s: %d objects", v.name, len(obs))
    return out


# ── G̀ and ᾰ ───────────────────────────────────────────────────────────────────

@memoize_by_identity
def grave(G: MonoidalFunctor) -> MonVFunctor:
    """G̀: G_*underline(V) → underline(W); its structure cells are the names of e^G and m^G."""
    v, w = G.source, G.target
    uv, uw = autoenrich(v), autoenrich(w)
    hmap = {}
    for x in v.objects:
        for y in v.objects:
            hxy = v.h(x, y)
            f = w.comp(G.mor(v.evaluation(x, y)), G.m[(x, hxy)])
            hmap[(x, y)] = w.transpose(f, G.obj(x), G.obj(hxy))
    src = push_monvcat(G, uv)
    functor = VFunctor(src.m, uw.m, {x: G.obj(x) for x in v.objects}, hmap, name=f"{G.name}̀")
    return MonVFunctor(
        functor, src, uw,
        w.name_of(G.e),
        {k: w.name_of(c) for k, c in G.m.items()},
        name=f"{G.name}̀",
    )


def grave_nat(alpha: MonoidalNatTrans) -> MonVNatTrans:
    """ᾰ: G̀ ⇒ H̀∘α_*underline(V), with components the names of α's."""
    G, H = alpha.source, alpha.target
    w = G.target
    uv = autoenrich(G.source)
    return MonVNatTrans(
        grave(G),
        compose_monv(grave(H), push_nat_family_mon(alpha, uv)),
        {x: w.name_of(c) for x, c in alpha.components.items()},
        name=f"{alpha.name}̆",
    )


# ── Superposed V-categories ───────────────────────────────────────────────────

@dataclass(frozen=True)
class SuperposedVCat:
    """A V-category B on the objects of a, with hom V-functor a^op⊗a → underline(V)."""

    a: VCat
    homB: VFunctor
    compB: dict[tuple[str, str, str], str]
    unitB: dict[str, str]
    name: str = field(default="B", compare=False)

    def hom(self, x: str, y: str) -> str:
        return self.homB.omap[pair_id(x, y)]

    @cached_property
    def vcat(self) -> VCat:
        obs = self.a.objects
        return VCat(
            self.a.base, obs,
            {(x, y): self.hom(x, y) for x in obs for y in obs},
            dict(self.compB), dict(self.unitB),
            name=self.name,
        )

    def ract(self, x: str, y: str, z: str) -> str:
        """B(A,B)⊗a(B,C) → B(A,C)."""
        v, a = self.a.base, self.a
        ayz = a.hom[(y, z)]
        g = v.seq(v.l_inv(ayz), v.tm(a.unit[x], v.id(ayz)), self.homB.hmap[(pair_id(x, y), pair_id(x, z))])
        return v.untranspose(g, self.hom(x, y), self.hom(x, z))

    def lact(self, x: str, y: str, z: str) -> str:
        """a(A,B)⊗B(B,C) → B(A,C)."""
        v, a = self.a.base, self.a
        axy = a.hom[(x, y)]
        g = v.seq(v.r_inv(axy), v.tm(v.id(axy), a.unit[z]), self.homB.hmap[(pair_id(y, z), pair_id(x, z))])
        return v.comp(v.untranspose(g, self.hom(y, z), self.hom(x, z)), v.s(axy, self.hom(y, z)))


def trivial_superposition(a: VCat) -> SuperposedVCat:
    return SuperposedVCat(a, hom_vfunctor(a), dict(a.comp), dict(a.unit), name=a.name)


def check_superposed(b: SuperposedVCat) -> LawReport:
    report = LawReport()
    a = b.a
    v = a.base
    if b.homB.source != tensor_vcat(opposite_vcat(a), a) or b.homB.target != autoenrich(v).m:
        report.structural_error(f"{b.name}: hom functor is not a V-functor a^op⊗a → underline(V)")
        return report
    report.extend(check_vfunctor(b.homB), prefix="superposed.hom")
    report.extend(check_vcat(b.vcat), prefix="superposed")
    if not report.ok:
        return report
    obs = a.objects
    for x in obs:
        for y in obs:
            hxy, axy = b.hom(x, y), a.hom[(x, y)]
            agree(report, "superposed.ract_unit", (x, y),
                  lambda: v.comp(b.ract(x, y, y), v.tm(v.id(hxy), a.unit[y])), lambda: v.r(hxy))
            agree(report, "superposed.lact_unit", (x, y),
                  lambda: v.comp(b.lact(x, x, y), v.tm(a.unit[x], v.id(hxy))), lambda: v.l(hxy))
            agree(report, "superposed.unit_extraordinary", (x, y),
                  lambda: v.seq(v.r_inv(axy), v.tm(v.id(axy), b.unitB[y]), b.lact(x, y, y)),
                  lambda: v.seq(v.l_inv(axy), v.tm(b.unitB[x], v.id(axy)), b.ract(x, x, y)))
            for z in obs:
                ayz, hyz = a.hom[(y, z)], b.hom(y, z)
                for w in obs:
                    azw, hzw = a.hom[(z, w)], b.hom(z, w)
                    agree(report, "superposed.ract_assoc", (x, y, z, w),
                          lambda: v.seq(v.tm(b.ract(x, y, z), v.id(azw)), b.ract(x, z, w)),
                          lambda: v.seq(v.a(hxy, ayz, azw), v.tm(v.id(hxy), a.comp[(y, z, w)]), b.ract(x, y, w)))
                    agree(report, "superposed.lact_assoc", (x, y, z, w),
                          lambda: v.seq(v.tm(a.comp[(x, y, z)], v.id(hzw)), b.lact(x, z, w)),
                          lambda: v.seq(v.a(axy, ayz, hzw), v.tm(v.id(axy), b.lact(y, z, w)), b.lact(x, y, w)))
                    agree(report, "superposed.bimodule", (x, y, z, w),
                          lambda: v.seq(v.tm(b.lact(x, y, z), v.id(azw)), b.ract(x, z, w)),
                          lambda: v.seq(v.a(axy, hyz, azw), v.tm(v.id(axy), b.ract(y, z, w)), b.lact(x, y, w)))
                    agree(report, "superposed.comp_middle", (x, y, z, w),
                          lambda: v.seq(v.tm(b.ract(x, y, z), v.id(hzw)), b.compB[(x, z, w)]),
                          lambda: v.seq(v.a(hxy, ayz, hzw), v.tm(v.id(hxy), b.lact(y, z, w)), b.compB[(x, y, w)]))
                    agree(report, "superposed.comp_outer_right", (x, y, z, w),
                          lambda: v.seq(v.tm(b.compB[(x, y, z)], v.id(azw)), b.ract(x, z, w)),
                          lambda: v.seq(v.a(hxy, hyz, azw), v.tm(v.id(hxy), b.ract(y, z, w)), b.compB[(x, y, w)]))
                    agree(report, "superposed.comp_outer_left", (x, y, z, w),
                          lambda: v.seq(v.a(axy, hyz, hzw), v.tm(v.id(axy), b.compB[(y, z, w)]), b.lact(x, y, w)),
                          lambda: v.seq(v.tm(b.lact(x, y, z), v.id(hzw)), b.compB[(x, z, w)]))
    return report


def superposed_inclusion(b: SuperposedVCat) -> VFunctor:
    """The identity-on-objects V-functor S: a → B."""
    a = b.a
    v = a.base
    report = LawReport()
    hmap = {}
    for x in a.objects:
        for y in a.objects:
            axy = a.hom[(x, y)]
            hmap[(x, y)] = v.seq(v.l_inv(axy), v.tm(b.unitB[x], v.id(axy)), b.ract(x, x, y))
            other = v.seq(v.r_inv(axy), v.tm(v.id(axy), b.unitB[y]), b.lact(x, y, y))
            if other != hmap[(x, y)]:
                report.fail("superposed.inclusion_variants", x, y, detail=f"{hmap[(x, y)]} != {other}")
    if not report.ok:
        raise LawViolationError(f"inclusion into {b.name}", report)
    return VFunctor(a, b.vcat, {x: x for x in a.objects}, hmap, name=f"S_{b.name}")


# ── Reconstruction ────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Reconstruction:
    inclusion: MonVFunctor
    inverse: MonVFunctor
    superposition: SuperposedVCat
    report: LawReport


def _reconstruction_superposition(m: SymMonClosedVCat, B: SymMonClosedVCat) -> SuperposedVCat:
    a, v = m.m, m.base
    I = m.unit_obj
    obs = m.objects
    homobj = {(x, y): B.m.hom[(x, y)] for x in obs for y in obs}
    ract, lact = {}, {}
    for x in obs:
        for y in obs:
            for z in obs:
                xy, xz, yz = m.ihom(x, y), m.ihom(x, z), m.ihom(y, z)
                ract[(x, y, z)] = v.comp(a.comp[(I, xy, xz)], v.tm(v.id(a.hom[(I, xy)]), m.closure.rmap[(x, y, z)]))
                # K: hom(X,Y) → hom([Y,Z],[X,Z]), precomposition inside the internal hom
                k = v.seq(
                    right_tensor(m, yz).hmap[(x, y)],
                    a.postcompose(m.closure.counit[(y, z)], m.t(x, yz), m.t(y, yz), z),
                    closure_iso(m, x, yz, z),
                )
                lact[(x, y, z)] = v.seq(
                    v.s(a.hom[(x, y)], a.hom[(I, yz)]),
                    v.tm(v.id(a.hom[(I, yz)]), k),
                    a.comp[(I, yz, xz)],
                )
    homB = profunctor_from_actions(a, homobj, lact, ract, name=f"{B.name}(−,−)")
    return SuperposedVCat(a, homB, dict(B.m.comp), dict(B.m.unit), name=B.name)


def reconstruct_iso(m: SymMonClosedVCat) -> Reconstruction:
    """The identity-on-objects strict symmetric monoidal iso M ≅ (U^M)_*underline(M_0).

    Raises LawViolationError naming the first failed sub-check.
    """
    report = check_symmonclosed(m)
    if not report.ok:
        raise LawViolationError(f"reconstruction of {m.name}: input", report)
    a, v = m.m, m.base
    m0 = smcc_of(m)
    um = autoenrich(m0)
    U = canonical_normalization(m).U
    U0 = underlying_monoidal_functor(U)
    B = push_monvcat(U0, um)

    try:
        sup = _reconstruction_superposition(m, B)
    except (CompositionError, StructuralError) as e:
        report.structural_error(f"superposition on {m.name}: {e}")
        raise LawViolationError(f"reconstruction of {m.name}", report) from e
    report.extend(check_superposed(sup), prefix="reconstruction")
    if not report.ok:
        raise LawViolationError(f"reconstruction of {m.name}: superposition", report)
    S = superposed_inclusion(sup)
    S = VFunctor(a, B.m, S.omap, S.hmap, name=f"S_{m.name}")

    obs = m.objects
    for x in obs:
        for y in obs:
            if not v.cat.is_iso(S.hmap[(x, y)]):
                report.fail("reconstruction.invertible", x, y, detail=S.hmap[(x, y)])
            can = v.comp(closure_iso(m, x, m.unit_obj, y), a.precompose(m.runit[x], m.t(x, m.unit_obj), x, y))
            if can != S.hmap[(x, y)]:
                report.fail("reconstruction.canonical", x, y, detail=f"{S.hmap[(x, y)]} != {can}")
    if not report.ok:
        raise LawViolationError(f"reconstruction of {m.name}", report)

    I = m.unit_obj
    inclusion = MonVFunctor(S, m, B, B.m.unit[I], {(x, y): B.m.unit[m.t(x, y)] for x in obs for y in obs},
                            name=S.name)
    report.extend(check_monvfunctor(inclusion, require_symmetric=True), prefix="reconstruction.strict")
    if inclusion.functor.omap != {x: x for x in obs}:
        report.fail("reconstruction.identity_on_objects", m.name)
    for (x, y, z), n in m.assoc.items():
        agree(report, "reconstruction.coherence", ("assoc", x, y, z),
              lambda: S.on_name(n, m.t(m.t(x, y), z), m.t(x, m.t(y, z))), lambda: B.assoc[(x, y, z)])
    for (x, y), n in m.sym.items():
        agree(report, "reconstruction.coherence", ("sym", x, y),
              lambda: S.on_name(n, m.t(x, y), m.t(y, x)), lambda: B.sym[(x, y)])
    for x, n in m.lunit.items():
        agree(report, "reconstruction.coherence", ("lunit", x),
              lambda: S.on_name(n, m.t(I, x), x), lambda: B.lunit[x])
        agree(report, "reconstruction.coherence", ("runit", x),
              lambda: S.on_name(m.runit[x], m.t(x, I), x), lambda: B.runit[x])
    if compose_vfunctors(S, m.tensorV) != compose_vfunctors(B.tensorV, tensor_vfunctors(S, S)):
        report.fail("reconstruction.tensor_square", m.name)
    report.extend(_theta_identity(m, m0, U0, B))
    if not report.ok:
        raise LawViolationError(f"reconstruction of {m.name}", report)

    inv = VFunctor(B.m, a, dict(S.omap), {k: v.cat.inverse(f) for k, f in S.hmap.items()}, name=f"{S.name}^-1")
    inverse = MonVFunctor(inv, B, m, a.unit[I], {(x, y): a.unit[m.t(x, y)] for x in obs for y in obs},
                          name=inv.name)
    if compose_vfunctors(inv, S) != identity_vfunctor(a) or compose_vfunctors(S, inv) != identity_vfunctor(B.m):
        report.fail("reconstruction.inverse", m.name)
        raise LawViolationError(f"reconstruction of {m.name}", report)
    logger.info("reconstructed %s from %s: %d objects", m.name, m0.name, len(obs))
    return Reconstruction(inclusion, inverse, sup, report)


def _theta_identity(m: SymMonClosedVCat, m0: Smcc, U0: MonoidalFunctor, B: SymMonClosedVCat) -> LawReport:
    """θ^{U^M}_* at the ordinary level is the identity, after renaming B_0 along M_0."""
    report = LawReport()
    K = comparison_KG(U0)
    bu = B.m.underlying
    I = m.unit_obj
    mu = m.m.underlying
    renaming = {}
    for i, (x, y, n) in bu.name_of.items():
        point = mu.id_of[(I, m.ihom(x, y), n)]
        renaming[i] = m0.unname(point, x, y)
    logger.info("renamed %d arrows of %s along %s", len(renaming), B.name, m0.name)
    for f, g in K.mmap.items():
        if renaming[g] != f:
            report.fail("reconstruction.theta_identity", f, detail=renaming[g])
    return report


# ── Fundamental Lemma ─────────────────────────────────────────────────────────

def check_fundamental_lemma(G: MonVFunctor, monoidal: bool = False) -> LawReport:
    """S_N∘G = U^N_*(G̀_0)∘θ^G_*∘S_M, and with monoidal=True also on structure cells."""
    report = LawReport()
    M, N = G.source, G.target
    report.extend(check_monvfunctor(G), prefix="input")
    if report.structural:
        return report
    try:
        rec_m, rec_n = reconstruct_iso(M), reconstruct_iso(N)
    except LawViolationError as e:
        report.extend(e.report, prefix="fund_lemma.reconstruction")
        return report
    m0 = smcc_of(M)
    um = autoenrich(m0)
    G0 = underlying_monoidal_functor(G)
    UN0 = underlying_monoidal_functor(canonical_normalization(N).U)
    th = theta(G)
    theta0 = underlying_monoidal_nat(th)
    theta0 = MonoidalNatTrans(theta0.source, compose_monoidal(UN0, G0), theta0.components, name=theta0.name)
    g0 = grave(G0)
    try:
        X = compose_vfunctors(push_vfunctor(UN0, g0.functor), push_nat_family(theta0, um.m))
        lhs = compose_vfunctors(X, rec_m.inclusion.functor)
        rhs = compose_vfunctors(rec_n.inclusion.functor, G.functor)
    except (CompositionError, StructuralError) as e:
        report.fail("fund_lemma.rectangle", G.name, detail=f"ill-typed: {e}")
        return report
    for k in sorted(rhs.hmap):
        if lhs.hmap[k] != rhs.hmap[k] or lhs.omap[k[0]] != rhs.omap[k[0]]:
            report.fail("fund_lemma.rectangle", *k, detail=f"{lhs.hmap[k]} != {rhs.hmap[k]}")
    if monoidal:
        top = compose_monv(
            compose_monv(push_monvfunctor(UN0, g0), push_nat_family_mon(theta0, um)),
            rec_m.inclusion,
        )
        bottom = compose_monv(rec_n.inclusion, G)
        if top.e != bottom.e:
            report.fail("fund_lemma.monoidal_unit", G.name, detail=f"{top.e} != {bottom.e}")
        for k in sorted(bottom.m):
            if top.m[k] != bottom.m[k]:
                report.fail("fund_lemma.monoidal_mult", *k, detail=f"{top.m[k]} != {bottom.m[k]}")
    return report


# ── 2-functoriality of underline(−) ───────────────────────────────────────────

def check_autoenrichment_2functor(probe) -> LawReport:
    """Identities, composites, vertical composites and whiskerings go to their ∫-counterparts.

    probe carries .functors (MonoidalFunctor) and .nats (MonoidalNatTrans).
    """
    from engine.groth import (
        groth_vcomp,
        groth_whisker_left,
        groth_whisker_right,
        lift_cell,
        lift_one_cell,
    )

    report = LawReport()
    functors, nats = [], []
    for F in probe.functors:
        sub = check_monoidal_functor(F, require_symmetric=True)
        if sub.ok:
            functors.append(F)
        else:
            report.fail("probe.invalid", F.name, detail=sub.violations[0].law if sub.violations else "structural")
    for t in probe.nats:
        sub = check_monoidal_nat(t)
        ends = all(F in functors or check_monoidal_functor(F, require_symmetric=True).ok
                   for F in (t.source, t.target))
        if sub.ok and ends:
            nats.append(t)
        else:
            report.fail("probe.invalid", t.name)

    bases = []
    for F in functors:
        for v in (F.source, F.target):
            if not any(v is b for b in bases):
                bases.append(v)
    for v in bases:
        if grave(identity_monoidal(v)) != identity_monv(autoenrich(v)):
            report.fail("2functor.identity", v.name)

    for G in functors:
        for H in functors:
            if G.target != H.source:
                continue
            lhs = grave(compose_monoidal(H, G))
            rhs = compose_monv(grave(H), push_monvfunctor(H, grave(G)))
            if lhs != rhs:
                report.fail("2functor.composition", H.name, G.name)

    for alpha in nats:
        for beta in nats:
            if alpha.target != beta.source:
                continue
            got = groth_vcomp(lift_cell(beta), lift_cell(alpha))
            want = lift_cell(vcomp_monoidal(beta, alpha))
            if got.up.components != want.up.components or got.down != want.down:
                report.fail("2functor.vcomp", beta.name, alpha.name)
        for K in functors:
            if K.source == alpha.source.target:
                got = groth_whisker_left(lift_one_cell(K), lift_cell(alpha))
                want = lift_cell(whisker_left_monoidal(K, alpha))
                if got.up.components != want.up.components or got.down != want.down:
                    report.fail("2functor.whisker_left", K.name, alpha.name)
            if K.target == alpha.source.source:
                got = groth_whisker_right(lift_cell(alpha), lift_one_cell(K))
                want = lift_cell(whisker_right_monoidal(alpha, K))
                if got.up.components != want.up.components or got.down != want.down:
                    report.fail("2functor.whisker_right", alpha.name, K.name)
    return report
