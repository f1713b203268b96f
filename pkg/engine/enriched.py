"""Categories enriched in a finite Smcc, and symmetric monoidal closed V-categories.

Morphisms of an enriched category are handled through their names, arrows
I → hom(A,B) of the base. Multi-fold tensors are left-bracketed.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from engine.cache import memoize_by_identity
from engine.errors import CompositionError, StructuralError
from engine.fincat import FinCat, FinFunctor, guard_size, pair_id
from engine.laws import LawReport
from engine.smcc import (
    MonoidalFunctor,
    MonoidalNatTrans,
    Smcc,
    agree,
    check_monoidal_functor,
    check_monoidal_nat,
    check_smcc,
)

logger = logging.getLogger(__name__)


class Underlying(NamedTuple):
    cat: FinCat
    name_of: dict[str, tuple[str, str, str]]
    id_of: dict[tuple[str, str, str], str]


# ── V-categories ──────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class VCat:
    """comp[(A,B,C)]: hom(A,B)⊗hom(B,C) → hom(A,C); unit[A]: I → hom(A,A)."""

    base: Smcc
    objects: tuple[str, ...]
    hom: dict[tuple[str, str], str]
    comp: dict[tuple[str, str, str], str]
    unit: dict[str, str]
    name: str = field(default="A", compare=False)
    # pair object -> (left, right), for tensor products of V-categories
    factors: dict[str, tuple[str, str]] = field(default_factory=dict, compare=False)

    def name_compose(self, nf: str, ng: str, a: str, b: str, c: str) -> str:
        """Name of g∘f from the names of f: A → B and g: B → C."""
        v = self.base
        return v.seq(v.l_inv(v.unit), v.tm(nf, ng), self.comp[(a, b, c)])

    def precompose(self, nf: str, a: str, b: str, c: str) -> str:
        """hom(B,C) → hom(A,C), composing with f: A → B."""
        v = self.base
        x = self.hom[(b, c)]
        return v.seq(v.l_inv(x), v.tm(nf, v.id(x)), self.comp[(a, b, c)])

    def postcompose(self, ng: str, a: str, b: str, c: str) -> str:
        """hom(A,B) → hom(A,C), composing with g: B → C."""
        v = self.base
        x = self.hom[(a, b)]
        return v.seq(v.r_inv(x), v.tm(v.id(x), ng), self.comp[(a, b, c)])

    @cached_property
    def underlying(self) -> Underlying:
        """The ordinary category A_0: arrows A → B are names I → hom(A,B)."""
        v = self.base
        names = [
            (a, b, n)
            for a in self.objects
            for b in self.objects
            for n in v.hom(v.unit, self.hom[(a, b)])
        ]
        guard_size(f"underlying category of {self.name}", len(names))
        labels = self._base_labels(names)
        id_of = {key: labels.get(key, f"{key[0]}>{key[1]}:{key[2]}") for key in names}
        name_of = {i: key for key, i in id_of.items()}
        dom = {id_of[k]: k[0] for k in names}
        cod = {id_of[k]: k[1] for k in names}
        comp = {}
        for (a, b, nf) in names:
            for c in self.objects:
                for ng in v.hom(v.unit, self.hom[(b, c)]):
                    comp[(id_of[(b, c, ng)], id_of[(a, b, nf)])] = id_of[(a, c, self.name_compose(nf, ng, a, b, c))]
        identity = {a: id_of[(a, a, self.unit[a])] for a in self.objects}
        # base labels keep the base's order, so A_0 can equal the base category
        rank = {f: n for n, f in enumerate(v.cat.morphisms)} if labels else {}
        ids = sorted((id_of[k] for k in names), key=lambda i: rank.get(i, len(rank)))
        cat = FinCat(self.objects, tuple(ids), dom, cod, identity, comp, name=f"{self.name}_0")
        return Underlying(cat, name_of, id_of)

    def _base_labels(self, names: list[tuple[str, str, str]]) -> dict[tuple[str, str, str], str]:
        """Base morphisms named by the arrows, when every hom is an internal hom of the base."""
        v = self.base
        if any(self.hom[(a, b)] != v.ihom.get((a, b)) for a in self.objects for b in self.objects):
            return {}
        try:
            labels = {(a, b, n): v.unname(n, a, b) for a, b, n in names}
        except (StructuralError, KeyError):
            return {}
        return labels if len(set(labels.values())) == len(labels) else {}

    def is_invertible(self, n: str, a: str, b: str) -> bool:
        u = self.underlying
        return u.cat.is_iso(u.id_of[(a, b, n)])


def check_vcat(a: VCat) -> LawReport:
    report = LawReport()
    v = a.base
    for x in a.objects:
        for y in a.objects:
            if a.hom.get((x, y)) not in v.cat.identity:
                report.structural_error(f"{a.name}: hom({x},{y}) is not an object of {v.name}")
    if not report.ok:
        return report
    for x in a.objects:
        j = a.unit.get(x)
        if j not in v.cat.dom or v.dom(j) != v.unit or v.cod(j) != a.hom[(x, x)]:
            report.fail("vcat.unit_shape", x, detail=str(j))
        for y in a.objects:
            for z in a.objects:
                c = a.comp.get((x, y, z))
                if c not in v.cat.dom or v.dom(c) != v.t(a.hom[(x, y)], a.hom[(y, z)]) or v.cod(c) != a.hom[(x, z)]:
                    report.fail("vcat.comp_shape", x, y, z, detail=str(c))
    if not report.ok:
        return report
    for x in a.objects:
        for y in a.objects:
            hxy = a.hom[(x, y)]
            agree(report, "vcat.left_unit", (x, y),
                  lambda: v.comp(a.comp[(x, x, y)], v.tm(a.unit[x], v.id(hxy))), lambda: v.l(hxy))
            agree(report, "vcat.right_unit", (x, y),
                  lambda: v.comp(a.comp[(x, y, y)], v.tm(v.id(hxy), a.unit[y])), lambda: v.r(hxy))
            for z in a.objects:
                hyz = a.hom[(y, z)]
                for w in a.objects:
                    hzw = a.hom[(z, w)]
                    agree(report, "vcat.associativity", (x, y, z, w),
                          lambda: v.seq(v.a(hxy, hyz, hzw), v.tm(v.id(hxy), a.comp[(y, z, w)]), a.comp[(x, y, w)]),
                          lambda: v.seq(v.tm(a.comp[(x, y, z)], v.id(hzw)), a.comp[(x, z, w)]))
    return report


def unit_vcat(v: Smcc) -> VCat:
    I = v.unit
    return VCat(v, ("*",), {("*", "*"): I}, {("*", "*", "*"): v.l(I)}, {"*": v.id(I)}, name=f"I_{v.name}")


def opposite_vcat(a: VCat) -> VCat:
    v = a.base
    obs = a.objects
    return VCat(
        v,
        obs,
        {(x, y): a.hom[(y, x)] for x in obs for y in obs},
        {
            (x, y, z): v.comp(a.comp[(z, y, x)], v.s(a.hom[(y, x)], a.hom[(z, y)]))
            for x in obs for y in obs for z in obs
        },
        dict(a.unit),
        name=f"{a.name}^op",
    )


@memoize_by_identity
def tensor_vcat(a: VCat, b: VCat) -> VCat:
    if a.base != b.base:
        raise StructuralError(f"cannot tensor {a.name} and {b.name}: different bases")
    v = a.base
    guard_size(f"{a.name}⊗{b.name}", (len(a.objects) * len(b.objects)) ** 3)
    factors = {pair_id(x, y): (x, y) for x in a.objects for y in b.objects}
    hom = {}
    for p, (x, y) in factors.items():
        for p2, (x2, y2) in factors.items():
            hom[(p, p2)] = v.t(a.hom[(x, x2)], b.hom[(y, y2)])
    comp = {}
    for p, (x, y) in factors.items():
        for p2, (x2, y2) in factors.items():
            for p3, (x3, y3) in factors.items():
                swap = v.interchange(a.hom[(x, x2)], b.hom[(y, y2)], a.hom[(x2, x3)], b.hom[(y2, y3)])
                comp[(p, p2, p3)] = v.comp(v.tm(a.comp[(x, x2, x3)], b.comp[(y, y2, y3)]), swap)
    unit = {p: v.comp(v.tm(a.unit[x], b.unit[y]), v.l_inv(v.unit)) for p, (x, y) in factors.items()}
    logger.debug("tensor %s⊗%s: %d objects", a.name, b.name, len(factors))
    return VCat(v, tuple(factors), hom, comp, unit, name=f"{a.name}⊗{b.name}", factors=factors)


# ── V-functors ────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class VFunctor:
    """hmap[(A,B)]: hom_source(A,B) → hom_target(FA,FB)."""

    source: VCat
    target: VCat
    omap: dict[str, str]
    hmap: dict[tuple[str, str], str]
    name: str = field(default="F", compare=False)

    def on_name(self, n: str, a: str, b: str) -> str:
        """F applied to the morphism named n: A → B."""
        return self.source.base.comp(self.hmap[(a, b)], n)


def check_vfunctor(F: VFunctor) -> LawReport:
    report = LawReport()
    s, t = F.source, F.target
    v = s.base
    if t.base != v:
        report.structural_error(f"{F.name}: source and target have different bases")
        return report
    for x in s.objects:
        if F.omap.get(x) not in t.objects:
            report.structural_error(f"{F.name}: object {x} maps outside {t.name}")
    if not report.ok:
        return report
    for x in s.objects:
        for y in s.objects:
            f = F.hmap.get((x, y))
            if f not in v.cat.dom or v.dom(f) != s.hom[(x, y)] or v.cod(f) != t.hom[(F.omap[x], F.omap[y])]:
                report.fail("vfunctor.shape", x, y, detail=str(f))
    if not report.ok:
        return report
    for x in s.objects:
        agree(report, "vfunctor.unit", (x,),
              lambda: v.comp(F.hmap[(x, x)], s.unit[x]), lambda: t.unit[F.omap[x]])
        for y in s.objects:
            for z in s.objects:
                agree(report, "vfunctor.composition", (x, y, z),
                      lambda: v.comp(F.hmap[(x, z)], s.comp[(x, y, z)]),
                      lambda: v.comp(t.comp[(F.omap[x], F.omap[y], F.omap[z])],
                                     v.tm(F.hmap[(x, y)], F.hmap[(y, z)])))
    return report


def identity_vfunctor(a: VCat) -> VFunctor:
    v = a.base
    return VFunctor(
        a, a, {x: x for x in a.objects},
        {(x, y): v.id(a.hom[(x, y)]) for x in a.objects for y in a.objects},
        name=f"1_{a.name}",
    )


def compose_vfunctors(G: VFunctor, F: VFunctor) -> VFunctor:
    if F.target != G.source:
        raise StructuralError(f"cannot compose {G.name} after {F.name}")
    v = F.source.base
    s = F.source
    return VFunctor(
        s, G.target,
        {x: G.omap[F.omap[x]] for x in s.objects},
        {(x, y): v.comp(G.hmap[(F.omap[x], F.omap[y])], F.hmap[(x, y)]) for x in s.objects for y in s.objects},
        name=f"{G.name}∘{F.name}",
    )


def tensor_vfunctors(F: VFunctor, G: VFunctor) -> VFunctor:
    """F⊗G between tensor products of V-categories."""
    v = F.source.base
    src, tgt = tensor_vcat(F.source, G.source), tensor_vcat(F.target, G.target)
    omap = {p: pair_id(F.omap[x], G.omap[y]) for p, (x, y) in src.factors.items()}
    hmap = {
        (p, p2): v.tm(F.hmap[(x, x2)], G.hmap[(y, y2)])
        for p, (x, y) in src.factors.items()
        for p2, (x2, y2) in src.factors.items()
    }
    return VFunctor(src, tgt, omap, hmap, name=f"{F.name}⊗{G.name}")


def left_unitor_vfunctor(a: VCat) -> VFunctor:
    """λ: I⊗A → A, an invertible V-functor."""
    v = a.base
    src = tensor_vcat(unit_vcat(v), a)
    return VFunctor(
        src, a,
        {p: x for p, (_, x) in src.factors.items()},
        {(p, p2): v.l(a.hom[(x, x2)]) for p, (_, x) in src.factors.items() for p2, (_, x2) in src.factors.items()},
        name=f"λ_{a.name}",
    )


def underlying_functor(F: VFunctor) -> FinFunctor:
    su, tu = F.source.underlying, F.target.underlying
    mmap = {}
    for i, (a, b, n) in su.name_of.items():
        mmap[i] = tu.id_of[(F.omap[a], F.omap[b], F.on_name(n, a, b))]
    return FinFunctor(su.cat, tu.cat, dict(F.omap), mmap, name=f"{F.name}_0")


# ── V-natural transformations ─────────────────────────────────────────────────

@dataclass(frozen=True)
class VNatTrans:
    """components[A]: I → hom(FA, GA)."""

    source: VFunctor
    target: VFunctor
    components: dict[str, str]
    name: str = field(default="α", compare=False)


def check_vnat(alpha: VNatTrans) -> LawReport:
    report = LawReport()
    F, G = alpha.source, alpha.target
    if F.source != G.source or F.target != G.target:
        report.structural_error(f"{alpha.name}: {F.name} and {G.name} are not parallel")
        return report
    s, t = F.source, F.target
    v = s.base
    for x in s.objects:
        c = alpha.components.get(x)
        if c not in v.cat.dom or v.dom(c) != v.unit or v.cod(c) != t.hom[(F.omap[x], G.omap[x])]:
            report.fail("vnat.shape", x, detail=str(c))
    if not report.ok:
        return report
    for x in s.objects:
        for y in s.objects:
            hxy = s.hom[(x, y)]
            agree(report, "vnat.naturality", (x, y),
                  lambda: v.seq(v.l_inv(hxy), v.tm(alpha.components[x], G.hmap[(x, y)]),
                                t.comp[(F.omap[x], G.omap[x], G.omap[y])]),
                  lambda: v.seq(v.r_inv(hxy), v.tm(F.hmap[(x, y)], alpha.components[y]),
                                t.comp[(F.omap[x], F.omap[y], G.omap[y])]))
    return report


def identity_vnat(F: VFunctor) -> VNatTrans:
    return VNatTrans(F, F, {x: F.target.unit[F.omap[x]] for x in F.source.objects}, name=f"1_{F.name}")


def vcomp_vnat(beta: VNatTrans, alpha: VNatTrans) -> VNatTrans:
    if alpha.target != beta.source:
        raise StructuralError(f"cannot compose {beta.name} after {alpha.name}")
    F, G, H = alpha.source, alpha.target, beta.target
    t = F.target
    return VNatTrans(
        F, H,
        {
            x: t.name_compose(alpha.components[x], beta.components[x], F.omap[x], G.omap[x], H.omap[x])
            for x in F.source.objects
        },
        name=f"{beta.name}·{alpha.name}",
    )


def whisker_left_vnat(H: VFunctor, alpha: VNatTrans) -> VNatTrans:
    """Hα: HF ⇒ HG."""
    F, G = alpha.source, alpha.target
    return VNatTrans(
        compose_vfunctors(H, F), compose_vfunctors(H, G),
        {x: H.on_name(alpha.components[x], F.omap[x], G.omap[x]) for x in F.source.objects},
        name=f"{H.name}{alpha.name}",
    )


def whisker_right_vnat(alpha: VNatTrans, K: VFunctor) -> VNatTrans:
    """αK: FK ⇒ GK."""
    return VNatTrans(
        compose_vfunctors(alpha.source, K), compose_vfunctors(alpha.target, K),
        {x: alpha.components[K.omap[x]] for x in K.source.objects},
        name=f"{alpha.name}{K.name}",
    )


# ── Two-sided hom functors ────────────────────────────────────────────────────

def profunctor_from_actions(
    a: VCat,
    homobj: dict[tuple[str, str], str],
    lact: dict[tuple[str, str, str], str],
    ract: dict[tuple[str, str, str], str],
    name: str = "B",
) -> VFunctor:
    """A V-functor a^op⊗a → underline(V) from a two-sided action.

    lact[(A,B,C)]: a(A,B)⊗homobj(B,C) → homobj(A,C) and
    ract[(A,B,C)]: homobj(A,B)⊗a(B,C) → homobj(A,C).
    """
    from engine.autoenrich import autoenrich

    v = a.base
    src = tensor_vcat(opposite_vcat(a), a)
    tgt = autoenrich(v).m
    hmap = {}
    for p, (x, y) in src.factors.items():
        for p2, (x2, y2) in src.factors.items():
            h = homobj[(x, y)]
            left, right = a.hom[(x2, x)], a.hom[(y, y2)]
            act = v.seq(
                v.a_inv(h, left, right),
                v.tm(v.s(h, left), v.id(right)),
                v.tm(lact[(x2, x, y)], v.id(right)),
                ract[(x2, y, y2)],
            )
            hmap[(p, p2)] = v.transpose(act, h, v.t(left, right))
    return VFunctor(src, tgt, {p: homobj[xy] for p, xy in src.factors.items()}, hmap, name=name)


def hom_vfunctor(a: VCat) -> VFunctor:
    """a(−,−): a^op⊗a → underline(V)."""
    return profunctor_from_actions(a, dict(a.hom), dict(a.comp), dict(a.comp), name=f"{a.name}(−,−)")


# ── Symmetric monoidal closed V-categories ────────────────────────────────────

@dataclass(frozen=True)
class Closure:
    """Right adjoints M(M,−) to M⊗−, one per object M.

    rmap[(M,P,P')]: hom(P,P') → hom([M,P],[M,P']); unit[(M,N)] names
    N → [M, M⊗N]; counit[(M,P)] names M⊗[M,P] → P.
    """

    ihom: dict[tuple[str, str], str]
    rmap: dict[tuple[str, str, str], str]
    unit: dict[tuple[str, str], str]
    counit: dict[tuple[str, str], str]


@dataclass(frozen=True)
class SymMonClosedVCat:
    """A V-category with tensor V-functor, unit object, coherence names and closure.

    assoc[(A,B,C)] names (A⊗B)⊗C → A⊗(B⊗C); lunit[A] names I⊗A → A;
    runit[A] names A⊗I → A; sym[(A,B)] names A⊗B → B⊗A.
    """

    m: VCat
    tensorV: VFunctor
    unit_obj: str
    assoc: dict[tuple[str, str, str], str]
    lunit: dict[str, str]
    runit: dict[str, str]
    sym: dict[tuple[str, str], str]
    closure: Closure
    name: str = field(default="M", compare=False)

    @property
    def base(self) -> Smcc:
        return self.m.base

    @property
    def objects(self) -> tuple[str, ...]:
        return self.m.objects

    def t(self, x: str, y: str) -> str:
        return self.tensorV.omap[pair_id(x, y)]

    def ihom(self, x: str, y: str) -> str:
        return self.closure.ihom[(x, y)]


def tensor_on_names(m: SymMonClosedVCat, nf: str, ng: str, a: str, a2: str, b: str, b2: str) -> str:
    """Name of f⊗g: A⊗B → A'⊗B' from the names of f: A → A' and g: B → B'."""
    v = m.base
    return v.seq(v.l_inv(v.unit), v.tm(nf, ng), m.tensorV.hmap[(pair_id(a, b), pair_id(a2, b2))])


def left_tensor(m: SymMonClosedVCat, x: str) -> VFunctor:
    """X⊗−."""
    v, a = m.base, m.m
    hmap = {
        (y, y2): v.seq(v.l_inv(a.hom[(y, y2)]), v.tm(a.unit[x], v.id(a.hom[(y, y2)])),
                       m.tensorV.hmap[(pair_id(x, y), pair_id(x, y2))])
        for y in a.objects for y2 in a.objects
    }
    return VFunctor(a, a, {y: m.t(x, y) for y in a.objects}, hmap, name=f"{x}⊗−")


def right_tensor(m: SymMonClosedVCat, y: str) -> VFunctor:
    """−⊗Y."""
    v, a = m.base, m.m
    hmap = {
        (x, x2): v.seq(v.r_inv(a.hom[(x, x2)]), v.tm(v.id(a.hom[(x, x2)]), a.unit[y]),
                       m.tensorV.hmap[(pair_id(x, y), pair_id(x2, y))])
        for x in a.objects for x2 in a.objects
    }
    return VFunctor(a, a, {x: m.t(x, y) for x in a.objects}, hmap, name=f"−⊗{y}")


def closure_functor(m: SymMonClosedVCat, x: str) -> VFunctor:
    """R_X = M(X,−)."""
    a = m.m
    return VFunctor(
        a, a,
        {p: m.ihom(x, p) for p in a.objects},
        {(p, p2): m.closure.rmap[(x, p, p2)] for p in a.objects for p2 in a.objects},
        name=f"[{x},−]",
    )


def closure_iso(m: SymMonClosedVCat, x: str, y: str, c: str) -> str:
    """hom(X⊗Y, C) → hom(Y, [X,C]) in the base."""
    a = m.m
    xy = m.t(x, y)
    return a.base.comp(
        a.precompose(m.closure.unit[(x, y)], y, m.ihom(x, xy), m.ihom(x, c)),
        m.closure.rmap[(x, xy, c)],
    )


def _coherence_transformations(m: SymMonClosedVCat) -> list[tuple[str, tuple, VNatTrans]]:
    """Each coherence family as a V-natural transformation in one variable at a time."""
    obs = m.objects
    ident = identity_vfunctor(m.m)
    lt = {x: left_tensor(m, x) for x in obs}
    rt = {x: right_tensor(m, x) for x in obs}
    out = []
    for b in obs:
        for c in obs:
            out.append(("assoc.naturality_first", (b, c), VNatTrans(
                compose_vfunctors(rt[c], rt[b]), rt[m.t(b, c)],
                {x: m.assoc[(x, b, c)] for x in obs})))
    for x in obs:
        for c in obs:
            out.append(("assoc.naturality_second", (x, c), VNatTrans(
                compose_vfunctors(rt[c], lt[x]), compose_vfunctors(lt[x], rt[c]),
                {b: m.assoc[(x, b, c)] for b in obs})))
    for x in obs:
        for b in obs:
            out.append(("assoc.naturality_third", (x, b), VNatTrans(
                lt[m.t(x, b)], compose_vfunctors(lt[x], lt[b]),
                {c: m.assoc[(x, b, c)] for c in obs})))
    out.append(("lunit.naturality", (), VNatTrans(lt[m.unit_obj], ident, dict(m.lunit))))
    out.append(("runit.naturality", (), VNatTrans(rt[m.unit_obj], ident, dict(m.runit))))
    for y in obs:
        out.append(("sym.naturality_first", (y,), VNatTrans(rt[y], lt[y], {x: m.sym[(x, y)] for x in obs})))
        out.append(("sym.naturality_second", (y,), VNatTrans(lt[y], rt[y], {x: m.sym[(y, x)] for x in obs})))
    return out


def check_symmonclosed(m: SymMonClosedVCat) -> LawReport:
    report = LawReport()
    report.extend(check_vcat(m.m))
    if not report.ok:
        return report
    if m.tensorV.source != tensor_vcat(m.m, m.m) or m.tensorV.target != m.m:
        report.structural_error(f"{m.name}: tensor is not a V-functor M⊗M → M")
        return report
    report.extend(check_vfunctor(m.tensorV), prefix="tensor")
    if m.unit_obj not in m.objects:
        report.structural_error(f"{m.name}: unit object {m.unit_obj} is not an object")
    if not report.ok:
        return report
    obs = m.objects
    for x in obs:
        for y in obs:
            if (x, y) not in m.sym or any((x, y, z) not in m.assoc for z in obs):
                report.structural_error(f"{m.name}: missing coherence names at ({x},{y})")
        if x not in m.lunit or x not in m.runit:
            report.structural_error(f"{m.name}: missing unit coherence names at {x}")
    if not report.ok:
        return report
    for law, inst, nat in _coherence_transformations(m):
        sub = check_vnat(nat)
        for viol in sub.violations:
            report.fail(law, *inst, *viol.instance, detail=f"{viol.law}: {viol.detail}")
        report.structural.extend(sub.structural)
    if not report.ok:
        return report
    a = m.m
    for x in obs:
        for y in obs:
            for z in obs:
                if not a.is_invertible(m.assoc[(x, y, z)], m.t(m.t(x, y), z), m.t(x, m.t(y, z))):
                    report.fail("assoc.invertible", x, y, z)
            if not a.is_invertible(m.sym[(x, y)], m.t(x, y), m.t(y, x)):
                report.fail("sym.invertible", x, y)
        if not a.is_invertible(m.lunit[x], m.t(m.unit_obj, x), x):
            report.fail("lunit.invertible", x)
        if not a.is_invertible(m.runit[x], m.t(x, m.unit_obj), x):
            report.fail("runit.invertible", x)
    report.extend(check_closure(m))
    if not report.ok:
        return report
    try:
        report.extend(check_smcc(underlying_smcc(m)), prefix="underlying")
    except (CompositionError, StructuralError) as e:
        report.structural_error(f"{m.name}: underlying symmetric monoidal closed category: {e}")
    return report


def check_closure(m: SymMonClosedVCat) -> LawReport:
    report = LawReport()
    a, v = m.m, m.base
    obs = m.objects
    cl = m.closure
    for x in obs:
        for p in obs:
            if cl.ihom.get((x, p)) not in obs:
                report.structural_error(f"{m.name}: internal hom [{x},{p}] is not an object")
    if not report.ok:
        return report

    def named(n, d, c) -> bool:
        return n in v.cat.dom and v.dom(n) == v.unit and v.cod(n) == a.hom[(d, c)]

    for x in obs:
        for p in obs:
            if not named(cl.counit.get((x, p)), m.t(x, m.ihom(x, p)), p):
                report.fail("closure.shape", "counit", x, p, detail=str(cl.counit.get((x, p))))
            if not named(cl.unit.get((x, p)), p, m.ihom(x, m.t(x, p))):
                report.fail("closure.shape", "unit", x, p, detail=str(cl.unit.get((x, p))))
            for p2 in obs:
                f = cl.rmap.get((x, p, p2))
                if (f not in v.cat.dom or v.dom(f) != a.hom[(p, p2)]
                        or v.cod(f) != a.hom[(m.ihom(x, p), m.ihom(x, p2))]):
                    report.fail("closure.shape", "rmap", x, p, p2, detail=str(f))

    for x in obs:
        lt = left_tensor(m, x)
        try:
            rx = closure_functor(m, x)
            sub = check_vfunctor(rx)
            report.extend(sub, prefix="closure.functor")
            if sub.ok:
                unit = VNatTrans(identity_vfunctor(a), compose_vfunctors(rx, lt),
                                 {y: cl.unit[(x, y)] for y in obs})
                counit = VNatTrans(compose_vfunctors(lt, rx), identity_vfunctor(a),
                                   {p: cl.counit[(x, p)] for p in obs})
                report.extend(check_vnat(unit), prefix="closure.unit_naturality")
                report.extend(check_vnat(counit), prefix="closure.counit_naturality")
        except (CompositionError, StructuralError, KeyError) as e:
            report.fail("closure.functor", x, detail=f"ill-typed: {e}")
        for y in obs:
            xy = m.t(x, y)
            agree(report, "closure.triangle_left", (x, y),
                  lambda: a.name_compose(lt.on_name(cl.unit[(x, y)], y, m.ihom(x, xy)),
                                         cl.counit[(x, xy)], xy, m.t(x, m.ihom(x, xy)), xy),
                  lambda: a.unit[xy])
        for p in obs:
            xp = m.ihom(x, p)
            inner = m.ihom(x, m.t(x, xp))
            agree(report, "closure.triangle_right", (x, p),
                  lambda: a.name_compose(cl.unit[(x, xp)], v.comp(cl.rmap[(x, m.t(x, xp), p)], cl.counit[(x, p)]),
                                         xp, inner, xp),
                  lambda: a.unit[xp])
    return report


# ── Underlying symmetric monoidal closed category ─────────────────────────────

@memoize_by_identity
def underlying_smcc(m: SymMonClosedVCat) -> Smcc:
    a = m.m
    u = a.underlying
    cat = u.cat
    obs = a.objects
    cl = m.closure

    def ident(x, y, n):
        return u.id_of[(x, y, n)]

    tensor_mor = {}
    for f, (x, x2, nf) in u.name_of.items():
        for g, (y, y2, ng) in u.name_of.items():
            tensor_mor[(f, g)] = ident(m.t(x, y), m.t(x2, y2), tensor_on_names(m, nf, ng, x, x2, y, y2))
    curry = {}
    for x in obs:
        for y in obs:
            xy = m.t(x, y)
            for c in obs:
                table = {}
                for f in cat.hom(xy, c):
                    nf = u.name_of[f][2]
                    hat = a.name_compose(cl.unit[(x, y)], a.base.comp(cl.rmap[(x, xy, c)], nf),
                                         y, m.ihom(x, xy), m.ihom(x, c))
                    table[f] = ident(y, m.ihom(x, c), hat)
                curry[(x, y, c)] = table
    return Smcc(
        cat=cat,
        tensor_obj={(x, y): m.t(x, y) for x in obs for y in obs},
        tensor_mor=tensor_mor,
        unit=m.unit_obj,
        assoc={(x, y, z): ident(m.t(m.t(x, y), z), m.t(x, m.t(y, z)), n) for (x, y, z), n in m.assoc.items()},
        lunit={x: ident(m.t(m.unit_obj, x), x, n) for x, n in m.lunit.items()},
        runit={x: ident(m.t(x, m.unit_obj), x, n) for x, n in m.runit.items()},
        sym={(x, y): ident(m.t(x, y), m.t(y, x), n) for (x, y), n in m.sym.items()},
        ihom=dict(cl.ihom),
        ev={(x, p): ident(m.t(x, m.ihom(x, p)), p, cl.counit[(x, p)]) for x in obs for p in obs},
        curry=curry,
        name=f"{m.name}_0",
    )


def smcc_of(m: SymMonClosedVCat) -> Smcc:
    """The base itself when m is its autoenrichment, else the underlying Smcc."""
    from engine.autoenrich import autoenrich

    v = m.base
    try:
        if m.objects == v.objects and m == autoenrich(v):
            return v
    except StructuralError:
        pass
    return underlying_smcc(m)


# ── Monoidal V-functors ───────────────────────────────────────────────────────

@dataclass(frozen=True)
class MonVFunctor:
    """S with e names I_N → S I_M and m[(A,B)] names SA⊗SB → S(A⊗B)."""

    functor: VFunctor
    source: SymMonClosedVCat
    target: SymMonClosedVCat
    e: str
    m: dict[tuple[str, str], str]
    name: str = field(default="S", compare=False)

    def obj(self, x: str) -> str:
        return self.functor.omap[x]

    @cached_property
    def is_symmetric(self) -> bool:
        return check_monoidal_functor(underlying_monoidal_functor(self), require_symmetric=True).ok


@memoize_by_identity
def underlying_monoidal_functor(S: MonVFunctor) -> MonoidalFunctor:
    M, N = S.source, S.target
    un = N.m.underlying
    return MonoidalFunctor(
        smcc_of(M), smcc_of(N),
        underlying_functor(S.functor),
        un.id_of[(N.unit_obj, S.obj(M.unit_obj), S.e)],
        {
            (x, y): un.id_of[(N.t(S.obj(x), S.obj(y)), S.obj(M.t(x, y)), n)]
            for (x, y), n in S.m.items()
        },
        name=f"{S.name}_0",
    )


def check_monvfunctor(S: MonVFunctor, require_symmetric: bool = False) -> LawReport:
    report = LawReport()
    M, N = S.source, S.target
    if S.functor.source != M.m or S.functor.target != N.m:
        report.structural_error(f"{S.name}: underlying V-functor does not run {M.name} → {N.name}")
        return report
    report.extend(check_vfunctor(S.functor))
    if not report.ok:
        return report
    v, b = N.base, N.m
    if S.e not in v.cat.dom or v.dom(S.e) != v.unit or v.cod(S.e) != b.hom[(N.unit_obj, S.obj(M.unit_obj))]:
        report.fail("monv.unit_shape", S.name, detail=str(S.e))
    for x in M.objects:
        for y in M.objects:
            n = S.m.get((x, y))
            if n not in v.cat.dom or v.dom(n) != v.unit or v.cod(n) != b.hom[(N.t(S.obj(x), S.obj(y)), S.obj(M.t(x, y)))]:
                report.fail("monv.mult_shape", x, y, detail=str(n))
    if not report.ok:
        return report
    for y in M.objects:
        first = VNatTrans(
            compose_vfunctors(right_tensor(N, S.obj(y)), S.functor),
            compose_vfunctors(S.functor, right_tensor(M, y)),
            {x: S.m[(x, y)] for x in M.objects},
        )
        second = VNatTrans(
            compose_vfunctors(left_tensor(N, S.obj(y)), S.functor),
            compose_vfunctors(S.functor, left_tensor(M, y)),
            {x: S.m[(y, x)] for x in M.objects},
        )
        for law, nat in (("monv.mult_naturality_first", first), ("monv.mult_naturality_second", second)):
            sub = check_vnat(nat)
            for viol in sub.violations:
                report.fail(law, y, *viol.instance, detail=viol.detail)
            report.structural.extend(sub.structural)
    if not report.ok:
        return report
    report.extend(check_monoidal_functor(underlying_monoidal_functor(S), require_symmetric=require_symmetric))
    return report


def identity_monv(M: SymMonClosedVCat) -> MonVFunctor:
    a = M.m
    return MonVFunctor(
        identity_vfunctor(a), M, M,
        a.unit[M.unit_obj],
        {(x, y): a.unit[M.t(x, y)] for x in M.objects for y in M.objects},
        name=f"1_{M.name}",
    )


def compose_monv(T: MonVFunctor, S: MonVFunctor) -> MonVFunctor:
    if S.target != T.source:
        raise StructuralError(f"cannot compose {T.name} after {S.name}")
    M, N, P = S.source, S.target, T.target
    p = P.m
    e = p.name_compose(T.e, T.functor.on_name(S.e, N.unit_obj, S.obj(M.unit_obj)),
                       P.unit_obj, T.obj(N.unit_obj), T.obj(S.obj(M.unit_obj)))
    mult = {}
    for x in M.objects:
        for y in M.objects:
            sx, sy = S.obj(x), S.obj(y)
            mult[(x, y)] = p.name_compose(
                T.m[(sx, sy)],
                T.functor.on_name(S.m[(x, y)], N.t(sx, sy), S.obj(M.t(x, y))),
                P.t(T.obj(sx), T.obj(sy)), T.obj(N.t(sx, sy)), T.obj(S.obj(M.t(x, y))),
            )
    return MonVFunctor(compose_vfunctors(T.functor, S.functor), M, P, e, mult, name=f"{T.name}∘{S.name}")


@dataclass(frozen=True)
class MonVNatTrans:
    source: MonVFunctor
    target: MonVFunctor
    components: dict[str, str]
    name: str = field(default="α", compare=False)

    @property
    def vnat(self) -> VNatTrans:
        return VNatTrans(self.source.functor, self.target.functor, self.components, name=self.name)


def underlying_monoidal_nat(t: MonVNatTrans) -> MonoidalNatTrans:
    S, T = t.source, t.target
    un = S.target.m.underlying
    return MonoidalNatTrans(
        underlying_monoidal_functor(S), underlying_monoidal_functor(T),
        {x: un.id_of[(S.obj(x), T.obj(x), n)] for x, n in t.components.items()},
        name=f"{t.name}_0",
    )


def check_monvnat(t: MonVNatTrans) -> LawReport:
    report = LawReport()
    if t.source.source != t.target.source or t.source.target != t.target.target:
        report.structural_error(f"{t.name}: {t.source.name} and {t.target.name} are not parallel")
        return report
    report.extend(check_vnat(t.vnat))
    if report.ok:
        report.extend(check_monoidal_nat(underlying_monoidal_nat(t)))
    return report


def identity_monvnat(S: MonVFunctor) -> MonVNatTrans:
    return MonVNatTrans(S, S, identity_vnat(S.functor).components, name=f"1_{S.name}")


def vcomp_monvnat(beta: MonVNatTrans, alpha: MonVNatTrans) -> MonVNatTrans:
    return MonVNatTrans(alpha.source, beta.target, vcomp_vnat(beta.vnat, alpha.vnat).components,
                        name=f"{beta.name}·{alpha.name}")


def whisker_left_monvnat(H: MonVFunctor, alpha: MonVNatTrans) -> MonVNatTrans:
    return MonVNatTrans(
        compose_monv(H, alpha.source), compose_monv(H, alpha.target),
        whisker_left_vnat(H.functor, alpha.vnat).components,
        name=f"{H.name}{alpha.name}",
    )


def whisker_right_monvnat(alpha: MonVNatTrans, K: MonVFunctor) -> MonVNatTrans:
    return MonVNatTrans(
        compose_monv(alpha.source, K), compose_monv(alpha.target, K),
        {x: alpha.components[K.obj(x)] for x in K.source.objects},
        name=f"{alpha.name}{K.name}",
    )
