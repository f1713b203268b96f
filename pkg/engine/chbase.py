"""Change of base along monoidal functors, canonical normalizations and normality."""
import itertools
import logging
from dataclasses import dataclass
from functools import singledispatch

from engine import config
from engine.cache import memoize_by_identity
from engine.enriched import (
    Closure,
    MonVFunctor,
    MonVNatTrans,
    SymMonClosedVCat,
    VCat,
    VFunctor,
    VNatTrans,
    check_monvnat,
    compose_monv,
    identity_monv,
    smcc_of,
    tensor_vcat,
)
from engine.errors import EnumerationGuardError, StructuralError
from engine.fincat import FinFunctor, compose_functors, pair_id
from engine.laws import LawReport
from engine.smcc import MonoidalFunctor, MonoidalNatTrans, compose_monoidal

logger = logging.getLogger(__name__)


# ── Pushforward G_* ───────────────────────────────────────────────────────────

def _push_name(G: MonoidalFunctor, n: str) -> str:
    return G.target.comp(G.mor(n), G.e)


@memoize_by_identity
def push_vcat(G: MonoidalFunctor, a: VCat) -> VCat:
    if a.base != G.source:
        raise StructuralError(f"{a.name} is not enriched in {G.source.name}")
    w = G.target
    obs = a.objects
    return VCat(
        w,
        obs,
        {k: G.obj(h) for k, h in a.hom.items()},
        {
            (x, y, z): w.comp(G.mor(a.comp[(x, y, z)]), G.m[(a.hom[(x, y)], a.hom[(y, z)])])
            for x in obs for y in obs for z in obs
        },
        {x: _push_name(G, a.unit[x]) for x in obs},
        name=f"{G.name}_*{a.name}",
        factors=dict(a.factors),
    )


def push_vfunctor(G: MonoidalFunctor, P: VFunctor) -> VFunctor:
    return VFunctor(
        push_vcat(G, P.source), push_vcat(G, P.target), dict(P.omap),
        {k: G.mor(f) for k, f in P.hmap.items()},
        name=f"{G.name}_*{P.name}",
    )


def push_vnat(G: MonoidalFunctor, psi: VNatTrans) -> VNatTrans:
    return VNatTrans(
        push_vfunctor(G, psi.source), push_vfunctor(G, psi.target),
        {x: _push_name(G, n) for x, n in psi.components.items()},
        name=f"{G.name}_*{psi.name}",
    )


def push_nat_family(phi: MonoidalNatTrans, a: VCat) -> VFunctor:
    """φ_*a: G_*a → H_*a, identity on objects with hom maps φ_{a(A,B)}."""
    return VFunctor(
        push_vcat(phi.source, a), push_vcat(phi.target, a),
        {x: x for x in a.objects},
        {k: phi.components[h] for k, h in a.hom.items()},
        name=f"{phi.name}_*{a.name}",
    )


@memoize_by_identity
def push_monvcat(G: MonoidalFunctor, M: SymMonClosedVCat) -> SymMonClosedVCat:
    if not G.is_symmetric:
        raise StructuralError(f"{G.name} is not symmetric; cannot push {M.name}")
    w = G.target
    a = M.m
    pushed = push_vcat(G, a)
    src = tensor_vcat(pushed, pushed)
    hmap = {}
    for (p, p2), f in M.tensorV.hmap.items():
        x, y = src.factors[p]
        x2, y2 = src.factors[p2]
        hmap[(p, p2)] = w.comp(G.mor(f), G.m[(a.hom[(x, x2)], a.hom[(y, y2)])])
    tensor = VFunctor(src, pushed, dict(M.tensorV.omap), hmap, name=f"{G.name}_*⊗")
    cl = M.closure

    def names(table: dict) -> dict:
        return {k: _push_name(G, n) for k, n in table.items()}

    out = SymMonClosedVCat(
        pushed,
        tensor,
        M.unit_obj,
        names(M.assoc),
        names(M.lunit),
        names(M.runit),
        names(M.sym),
        Closure(dict(cl.ihom), {k: G.mor(f) for k, f in cl.rmap.items()}, names(cl.unit), names(cl.counit)),
        name=f"{G.name}_*{M.name}",
    )
    logger.debug("pushed %s along %s: %d objects", M.name, G.name, len(M.objects))
    return out


def push_monvfunctor(H: MonoidalFunctor, S: MonVFunctor) -> MonVFunctor:
    return MonVFunctor(
        push_vfunctor(H, S.functor),
        push_monvcat(H, S.source),
        push_monvcat(H, S.target),
        _push_name(H, S.e),
        {k: _push_name(H, n) for k, n in S.m.items()},
        name=f"{H.name}_*{S.name}",
    )


def push_monvnat(H: MonoidalFunctor, t: MonVNatTrans) -> MonVNatTrans:
    return MonVNatTrans(
        push_monvfunctor(H, t.source), push_monvfunctor(H, t.target),
        {x: _push_name(H, n) for x, n in t.components.items()},
        name=f"{H.name}_*{t.name}",
    )


def push_nat_family_mon(phi: MonoidalNatTrans, M: SymMonClosedVCat) -> MonVFunctor:
    """φ_*M as an identity-on-objects strict monoidal W-functor."""
    tgt = push_monvcat(phi.target, M)
    return MonVFunctor(
        push_nat_family(phi, M.m),
        push_monvcat(phi.source, M),
        tgt,
        tgt.m.unit[M.unit_obj],
        {(x, y): tgt.m.unit[M.t(x, y)] for x in M.objects for y in M.objects},
        name=f"{phi.name}_*{M.name}",
    )


# ── Canonical normalizations ──────────────────────────────────────────────────

@dataclass(frozen=True)
class NormalizationBundle:
    m: SymMonClosedVCat
    U: MonVFunctor

    @property
    def eU(self) -> str:
        return self.U.e

    @property
    def mU(self) -> dict[tuple[str, str], str]:
        return self.U.m


def _lunit_inverse_name(M: SymMonClosedVCat) -> str:
    u = M.m.underlying
    I = M.unit_obj
    inv = u.cat.inverse(u.id_of[(M.t(I, I), I, M.lunit[I])])
    return u.name_of[inv][2]


@memoize_by_identity
def canonical_normalization(M: SymMonClosedVCat) -> NormalizationBundle:
    """U^M = M(I,−) into the autoenrichment of the base, with e = [1_I]."""
    from engine.autoenrich import autoenrich

    v = M.base
    a = M.m
    I = M.unit_obj
    uv = autoenrich(v)
    functor = VFunctor(
        a, uv.m,
        {x: a.hom[(I, x)] for x in a.objects},
        {(x, y): v.transpose(a.comp[(I, x, y)], a.hom[(I, x)], a.hom[(x, y)]) for x in a.objects for y in a.objects},
        name=f"U^{M.name}",
    )
    e = v.name_of(a.unit[I])
    linv = _lunit_inverse_name(M)
    II = M.t(I, I)
    mult = {}
    for x in a.objects:
        for y in a.objects:
            xy = M.t(x, y)
            arrow = v.comp(a.precompose(linv, I, II, xy), M.tensorV.hmap[(pair_id(I, I), pair_id(x, y))])
            mult[(x, y)] = v.name_of(arrow)
    U = MonVFunctor(functor, M, uv, e, mult, name=f"U^{M.name}")
    return NormalizationBundle(M, U)


def theta(S: MonVFunctor) -> MonVNatTrans:
    """θ^S: U^M ⇒ U^N∘S."""
    M, N = S.source, S.target
    v = M.base
    UM = canonical_normalization(M).U
    UN = canonical_normalization(N).U
    J, I = N.unit_obj, M.unit_obj
    comps = {}
    for x in M.objects:
        sx = S.obj(x)
        arrow = v.comp(N.m.precompose(S.e, J, S.obj(I), sx), S.functor.hmap[(I, x)])
        comps[x] = v.name_of(arrow)
    return MonVNatTrans(UM, compose_monv(UN, S), comps, name=f"θ^{S.name}")


def unit_normalization_iso(v) -> MonVNatTrans:
    """ξ: 1 ⇒ U^{underline V}, components the transposes of ℓ."""
    from engine.autoenrich import autoenrich

    uv = autoenrich(v)
    comps = {x: v.name_of(v.transpose(v.l(x), v.unit, x)) for x in v.objects}
    return MonVNatTrans(identity_monv(uv), canonical_normalization(uv).U, comps, name=f"ξ_{v.name}")


def kappa(G: MonVFunctor) -> MonVNatTrans:
    """κ^G: U^M ⇒ G, for G valued in the autoenrichment of the base."""
    from engine.autoenrich import autoenrich

    M = G.source
    v = M.base
    if G.target != autoenrich(v):
        raise StructuralError(f"{G.name} does not land in the autoenrichment of {v.name}")
    th = theta(G)
    I = M.unit_obj
    comps = {}
    for x in M.objects:
        gx = G.obj(x)
        ig = v.h(v.unit, gx)
        xi_inv = v.comp(v.evaluation(v.unit, gx), v.l_inv(ig))
        comps[x] = v.name_of(v.comp(xi_inv, v.unname(th.components[x], M.m.hom[(I, x)], ig)))
    return MonVNatTrans(th.source, G, comps, name=f"κ^{G.name}")


def enumerate_monoidal_vnats(F: MonVFunctor, G: MonVFunctor) -> list[MonVNatTrans]:
    """Every monoidal V-natural transformation F ⇒ G, by exhaustive search."""
    if F.source != G.source or F.target != G.target:
        raise StructuralError(f"{F.name} and {G.name} are not parallel")
    N = F.target
    v = N.base
    obs = F.source.objects
    choices = [v.hom(v.unit, N.m.hom[(F.obj(x), G.obj(x))]) for x in obs]
    size = 1
    for c in choices:
        size *= len(c)
    bound = config.max_candidates()
    if size > bound:
        raise EnumerationGuardError(f"monoidal transformations {F.name} ⇒ {G.name}", size, bound)
    found = []
    for combo in itertools.product(*choices):
        t = MonVNatTrans(F, G, dict(zip(obs, combo)), name=f"{F.name}⇒{G.name}")
        if check_monvnat(t).ok:
            found.append(t)
    logger.debug("%s ⇒ %s: %d of %d candidate families are monoidal", F.name, G.name, len(found), size)
    return found


# ── Normality ─────────────────────────────────────────────────────────────────

@singledispatch
def is_normal(G) -> bool:
    raise TypeError(f"normality is not defined for {type(G).__name__}")


@is_normal.register
def _(G: MonVFunctor) -> bool:
    return not normality_witness(G)


@is_normal.register
def _(G: MonoidalFunctor) -> bool:
    return not normality_witness(G)


def normality_witness(G) -> tuple[str, ...]:
    """Empty when G is normal; otherwise the object where θ^G fails to be invertible."""
    if isinstance(G, MonVFunctor):
        th = theta(G)
        uv = th.source.target.m
        for x, n in th.components.items():
            if not uv.is_invertible(n, th.source.obj(x), th.target.obj(x)):
                return (x,)
        return ()
    v, w = G.source, G.target
    for x in v.objects:
        image = sorted(w.comp(G.mor(f), G.e) for f in v.hom(v.unit, x))
        if len(set(image)) != len(image) or set(image) != set(w.hom(w.unit, G.obj(x))):
            return (x,)
    return ()


def comparison_KG(G: MonoidalFunctor) -> FinFunctor:
    """K^G: V → (G_*underline V)_0, f ↦ the arrow named G[f]∘e^G."""
    from engine.autoenrich import autoenrich

    v, w = G.source, G.target
    pushed = push_vcat(G, autoenrich(v).m)
    u = pushed.underlying
    mmap = {}
    for f in v.cat.morphisms:
        a, b = v.dom(f), v.cod(f)
        mmap[f] = u.id_of[(a, b, w.comp(G.mor(v.name_of(f)), G.e))]
    return FinFunctor(v.cat, u.cat, {x: x for x in v.objects}, mmap, name=f"K^{G.name}")


def comparison_KG_monoidal(G: MonoidalFunctor) -> MonoidalFunctor:
    """K^G as an identity-on-objects strict monoidal functor."""
    from engine.autoenrich import autoenrich

    v = G.source
    target = smcc_of(push_monvcat(G, autoenrich(v)))
    return MonoidalFunctor(
        v, target, comparison_KG(G),
        target.id(target.unit),
        {(x, y): target.id(target.t(x, y)) for x in v.objects for y in v.objects},
        name=f"K^{G.name}",
    )


def check_kg_triangle(G: MonoidalFunctor) -> LawReport:
    """G̀_0∘K^G = G, as functors and as monoidal functors."""
    from engine.autoenrich import grave
    from engine.enriched import underlying_functor, underlying_monoidal_functor

    report = LawReport()
    g0 = grave(G)
    plain = compose_functors(underlying_functor(g0.functor), comparison_KG(G))
    if plain != G.functor:
        bad = sorted(f for f in G.functor.mmap if plain.mmap.get(f) != G.functor.mmap[f])
        report.fail("kg.triangle", G.name, *bad[:1])
    mon = compose_monoidal(underlying_monoidal_functor(g0), comparison_KG_monoidal(G))
    if mon != G:
        report.fail("kg.triangle_monoidal", G.name)
    if comparison_KG_monoidal(G).strictness != "strict":
        report.fail("kg.strict", G.name)
    return report
