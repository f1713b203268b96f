"""Symmetric monoidal closed structure on a finite category.

Builders from finite commutative quantales (thin bases) and finite commutative
monoids (one-object bases), plus ordinary monoidal functors and monoidal
transformations between such categories.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from engine.errors import CompositionError, MonoidError, QuantaleError, StructuralError
from engine.fincat import (
    FinCat,
    FinFunctor,
    FinNatTrans,
    check_category,
    check_functor,
    check_nat,
    compose_functors,
    identity_functor,
    pair_id,
    product_category,
)
from engine.laws import LawReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Smcc:
    """A finite symmetric monoidal closed category, stored as explicit tables.

    assoc[(A,B,C)]: (A⊗B)⊗C → A⊗(B⊗C); lunit[A]: I⊗A → A; runit[A]: A⊗I → A;
    sym[(A,B)]: A⊗B → B⊗A; ev[(A,B)]: A⊗[A,B] → B; curry[(A,B,C)] maps each
    f: A⊗B → C to its transpose B → [A,C].
    """

    cat: FinCat
    tensor_obj: dict[tuple[str, str], str]
    tensor_mor: dict[tuple[str, str], str]
    unit: str
    assoc: dict[tuple[str, str, str], str]
    lunit: dict[str, str]
    runit: dict[str, str]
    sym: dict[tuple[str, str], str]
    ihom: dict[tuple[str, str], str]
    ev: dict[tuple[str, str], str]
    curry: dict[tuple[str, str, str], dict[str, str]]
    name: str = field(default="V", compare=False)

    # ── Category plumbing ──

    @property
    def objects(self) -> tuple[str, ...]:
        return self.cat.objects

    def dom(self, f: str) -> str:
        return self.cat.dom[f]

    def cod(self, f: str) -> str:
        return self.cat.cod[f]

    def id(self, a: str) -> str:
        return self.cat.id(a)

    def comp(self, g: str, f: str) -> str:
        return self.cat.compose(g, f)

    def seq(self, *fs: str) -> str:
        return self.cat.seq(*fs)

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        return self.cat.hom(a, b)

    def inv(self, f: str) -> str:
        return self.cat.inverse(f)

    # ── Monoidal structure ──

    def t(self, a: str, b: str) -> str:
        try:
            return self.tensor_obj[(a, b)]
        except KeyError:
            raise StructuralError(f"{self.name}: no tensor for objects ({a},{b})") from None

    def tm(self, f: str, g: str) -> str:
        try:
            return self.tensor_mor[(f, g)]
        except KeyError:
            raise StructuralError(f"{self.name}: no tensor for morphisms ({f},{g})") from None

    def a(self, x: str, y: str, z: str) -> str:
        return self.assoc[(x, y, z)]

    def a_inv(self, x: str, y: str, z: str) -> str:
        return self.inv(self.assoc[(x, y, z)])

    def l(self, x: str) -> str:
        return self.lunit[x]

    def l_inv(self, x: str) -> str:
        return self.inv(self.lunit[x])

    def r(self, x: str) -> str:
        return self.runit[x]

    def r_inv(self, x: str) -> str:
        return self.inv(self.runit[x])

    def s(self, x: str, y: str) -> str:
        return self.sym[(x, y)]

    def interchange(self, x: str, y: str, z: str, w: str) -> str:
        """(X⊗Y)⊗(Z⊗W) → (X⊗Z)⊗(Y⊗W)."""
        return self.seq(
            self.a(x, y, self.t(z, w)),
            self.tm(self.id(x), self.a_inv(y, z, w)),
            self.tm(self.id(x), self.tm(self.s(y, z), self.id(w))),
            self.tm(self.id(x), self.a(z, y, w)),
            self.a_inv(x, z, self.t(y, w)),
        )

    # ── Closed structure ──

    def h(self, a: str, b: str) -> str:
        try:
            return self.ihom[(a, b)]
        except KeyError:
            raise StructuralError(f"{self.name}: no internal hom [{a},{b}]") from None

    def evaluation(self, a: str, b: str) -> str:
        return self.ev[(a, b)]

    def transpose(self, f: str, a: str, b: str) -> str:
        """f: A⊗B → C  ↦  f̂: B → [A,C] with Ev∘(1_A⊗f̂) = f."""
        if self.dom(f) != self.t(a, b):
            raise StructuralError(f"{self.name}: {f} does not start at {a}⊗{b}")
        c = self.cod(f)
        try:
            return self.curry[(a, b, c)][f]
        except KeyError:
            raise StructuralError(f"{self.name}: no transpose of {f} at ({a},{b},{c})") from None

    def untranspose(self, g: str, a: str, c: str) -> str:
        """g: B → [A,C]  ↦  Ev_{A,C}∘(1_A⊗g): A⊗B → C."""
        return self.comp(self.evaluation(a, c), self.tm(self.id(a), g))

    def name_of(self, f: str) -> str:
        """The name I → [A,B] of f: A → B."""
        a = self.dom(f)
        return self.transpose(self.comp(f, self.r(a)), a, self.unit)

    def unname(self, n: str, a: str, b: str) -> str:
        return self.comp(self.untranspose(n, a, b), self.r_inv(a))

    @cached_property
    def tensor_functor(self) -> FinFunctor:
        sq = product_category(self.cat, self.cat)
        omap = {pair_id(x, y): self.t(x, y) for x in self.objects for y in self.objects}
        mmap = {pair_id(f, g): self.tm(f, g) for f in self.cat.morphisms for g in self.cat.morphisms}
        return FinFunctor(sq, self.cat, omap, mmap, name=f"⊗_{self.name}")

    @property
    def is_thin(self) -> bool:
        return all(len(self.hom(x, y)) <= 1 for x in self.objects for y in self.objects)


def unique_morphism(c: FinCat, a: str, b: str, what: str = "") -> str:
    homs = c.hom(a, b)
    if len(homs) != 1:
        raise StructuralError(f"{what or c.name}: expected exactly one morphism {a} → {b}, found {len(homs)}")
    return homs[0]


# ── Law checking ──────────────────────────────────────────────────────────────

def agree(report: LawReport, law: str, instance: tuple, lhs, rhs) -> None:
    """Record a violation unless both thunks give the same morphism."""
    try:
        left, right = lhs(), rhs()
    except (CompositionError, StructuralError) as e:
        report.fail(law, *instance, detail=f"ill-typed: {e}")
        return
    if left != right:
        report.fail(law, *instance, detail=f"{left} != {right}")


def check_smcc(v: Smcc) -> LawReport:
    report = LawReport()
    report.extend(check_category(v.cat))
    if not report.ok:
        return report
    obs = v.objects
    mors = v.cat.morphisms
    for x in obs:
        for y in obs:
            if (x, y) not in v.tensor_obj:
                report.structural_error(f"{v.name}: missing tensor ({x},{y})")
            if (x, y) not in v.ihom:
                report.structural_error(f"{v.name}: missing internal hom [{x},{y}]")
    if v.unit not in obs:
        report.structural_error(f"{v.name}: unit {v.unit} is not an object")
    if not report.ok:
        return report
    report.extend(check_functor(v.tensor_functor), prefix="tensor")

    def shape(law: str, inst: tuple, f: str | None, d: str, c: str) -> bool:
        if f is None or f not in v.cat.dom:
            report.structural_error(f"{v.name}: missing {law} component at {inst}")
            return False
        if v.dom(f) != d or v.cod(f) != c:
            report.fail(f"{law}.shape", *inst, detail=f)
            return False
        if not v.cat.is_iso(f):
            report.fail(f"{law}.invertible", *inst, detail=f)
        return True

    ok = True
    for x in obs:
        ok &= shape("lunit", (x,), v.lunit.get(x), v.t(v.unit, x), x)
        ok &= shape("runit", (x,), v.runit.get(x), v.t(x, v.unit), x)
        for y in obs:
            ok &= shape("sym", (x, y), v.sym.get((x, y)), v.t(x, y), v.t(y, x))
            for z in obs:
                ok &= shape("assoc", (x, y, z), v.assoc.get((x, y, z)),
                            v.t(v.t(x, y), z), v.t(x, v.t(y, z)))
    if not ok:
        return report

    # naturality of the coherence isomorphisms
    for f in mors:
        a, a2 = v.dom(f), v.cod(f)
        agree(report, "lunit.naturality", (f,),
              lambda: v.comp(v.l(a2), v.tm(v.id(v.unit), f)), lambda: v.comp(f, v.l(a)))
        agree(report, "runit.naturality", (f,),
              lambda: v.comp(v.r(a2), v.tm(f, v.id(v.unit))), lambda: v.comp(f, v.r(a)))
        for g in mors:
            b, b2 = v.dom(g), v.cod(g)
            agree(report, "sym.naturality", (f, g),
                  lambda: v.comp(v.s(a2, b2), v.tm(f, g)), lambda: v.comp(v.tm(g, f), v.s(a, b)))
            for h in mors:
                c, c2 = v.dom(h), v.cod(h)
                agree(report, "assoc.naturality", (f, g, h),
                      lambda: v.comp(v.a(a2, b2, c2), v.tm(v.tm(f, g), h)),
                      lambda: v.comp(v.tm(f, v.tm(g, h)), v.a(a, b, c)))

    # coherence axioms
    I = v.unit
    for x in obs:
        for y in obs:
            agree(report, "triangle", (x, y),
                  lambda: v.comp(v.tm(v.id(x), v.l(y)), v.a(x, I, y)),
                  lambda: v.tm(v.r(x), v.id(y)))
            agree(report, "symmetry.involution", (x, y),
                  lambda: v.comp(v.s(y, x), v.s(x, y)), lambda: v.id(v.t(x, y)))
            for z in obs:
                agree(report, "hexagon", (x, y, z),
                      lambda: v.seq(v.a(x, y, z), v.s(x, v.t(y, z)), v.a(y, z, x)),
                      lambda: v.seq(v.tm(v.s(x, y), v.id(z)), v.a(y, x, z), v.tm(v.id(y), v.s(x, z))))
                for w in obs:
                    agree(report, "pentagon", (x, y, z, w),
                          lambda: v.seq(v.a(v.t(x, y), z, w), v.a(x, y, v.t(z, w))),
                          lambda: v.seq(v.tm(v.a(x, y, z), v.id(w)), v.a(x, v.t(y, z), w),
                                        v.tm(v.id(x), v.a(y, z, w))))
    if v.l(I) != v.r(I):
        report.fail("unit.lunit_is_runit", I, detail=f"{v.l(I)} != {v.r(I)}")

    report.extend(_check_closed(v))
    return report


def _check_closed(v: Smcc) -> LawReport:
    report = LawReport()
    obs = v.objects
    for x in obs:
        for y in obs:
            e = v.ev.get((x, y))
            if e is None or e not in v.cat.dom:
                report.structural_error(f"{v.name}: missing evaluation at ({x},{y})")
            elif v.dom(e) != v.t(x, v.h(x, y)) or v.cod(e) != y:
                report.fail("closed.ev_shape", x, y, detail=e)
    for a in obs:
        for b in obs:
            for c in obs:
                source = v.hom(v.t(a, b), c)
                table = v.curry.get((a, b, c), {})
                images: dict[str, str] = {}
                try:
                    for g in v.hom(b, v.h(a, c)):
                        images[g] = v.untranspose(g, a, c)
                except (CompositionError, StructuralError) as e:
                    report.fail("closed.bijection", a, b, c, detail=f"ill-typed: {e}")
                    continue
                if sorted(images.values()) != sorted(source):
                    report.fail("closed.bijection", a, b, c,
                                detail=f"|Hom({a}⊗{b},{c})|={len(source)}, |Hom({b},[{a},{c}])|={len(images)}")
                    continue
                expected = {f: g for g, f in images.items()}
                if table != expected:
                    report.fail("closed.transpose_table", a, b, c)
    return report


# ── Builders ──────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class QuantaleDesc:
    name: str
    elements: tuple[str, ...]
    order: tuple[tuple[str, str], ...]
    unit: str
    tensor: dict[tuple[str, str], str]


@dataclass(frozen=True)
class CommMonoidDesc:
    name: str
    elements: tuple[str, ...]
    unit: str
    mult: dict[tuple[str, str], str]


def _order_closure(elements: tuple[str, ...], pairs) -> set[tuple[str, str]]:
    leq = {(x, x) for x in elements} | set(pairs)
    changed = True
    while changed:
        changed = False
        for (x, y) in list(leq):
            for (y2, z) in list(leq):
                if y == y2 and (x, z) not in leq:
                    leq.add((x, z))
                    changed = True
    return leq


def quantale_to_smcc(q: QuantaleDesc) -> Smcc:
    """The thin symmetric monoidal closed category of a finite commutative quantale.

    The order is given by generating pairs and closed reflexively and
    transitively. [a,b] is the join of {s : a⊗s ≤ b}.

    Raises QuantaleError with a witness when the data is not a commutative
    quantale.
    """
    els = tuple(q.elements)
    for (x, y) in q.order:
        if x not in els or y not in els:
            raise QuantaleError(f"{q.name}: order mentions unknown element", (x, y))
    leq = _order_closure(els, q.order)
    for x in els:
        for y in els:
            if x != y and (x, y) in leq and (y, x) in leq:
                raise QuantaleError(f"{q.name}: order is not antisymmetric", (x, y))

    def join(subset) -> str:
        uppers = [u for u in els if all((s, u) in leq for s in subset)]
        least = [u for u in uppers if all((u, w) in leq for w in uppers)]
        if len(least) != 1:
            raise QuantaleError(f"{q.name}: not a complete lattice, no join", tuple(subset))
        return least[0]

    bottom = join(())
    for x in els:
        for y in els:
            join((x, y))
            if (x, y) not in q.tensor or q.tensor[(x, y)] not in els:
                raise QuantaleError(f"{q.name}: tensor table incomplete", (x, y))
    if q.unit not in els:
        raise QuantaleError(f"{q.name}: unit is not an element", (q.unit,))
    t = q.tensor
    for x in els:
        if t[(q.unit, x)] != x or t[(x, q.unit)] != x:
            raise QuantaleError(f"{q.name}: unit law fails", (q.unit, x))
        if t[(x, bottom)] != bottom:
            raise QuantaleError(f"{q.name}: tensor does not preserve the empty join", (x, bottom))
        for y in els:
            if t[(x, y)] != t[(y, x)]:
                raise QuantaleError(f"{q.name}: tensor is not commutative", (x, y))
            for z in els:
                if t[(t[(x, y)], z)] != t[(x, t[(y, z)])]:
                    raise QuantaleError(f"{q.name}: tensor is not associative", (x, y, z))
                if t[(x, join((y, z)))] != join((t[(x, y)], t[(x, z)])):
                    raise QuantaleError(f"{q.name}: tensor does not preserve binary joins", (x, y, z))

    def mor(x: str, y: str) -> str:
        return f"{x}<={y}"

    morphisms = tuple(mor(x, y) for x in els for y in els if (x, y) in leq)
    dom = {mor(x, y): x for x in els for y in els if (x, y) in leq}
    cod = {mor(x, y): y for x in els for y in els if (x, y) in leq}
    identity = {x: mor(x, x) for x in els}
    comp = {
        (mor(y, z), mor(x, y)): mor(x, z)
        for x in els for y in els for z in els
        if (x, y) in leq and (y, z) in leq
    }
    cat = FinCat(els, morphisms, dom, cod, identity, comp, name=q.name)
    tensor_mor = {
        (mor(a, b), mor(c, d)): mor(t[(a, c)], t[(b, d)])
        for a in els for b in els for c in els for d in els
        if (a, b) in leq and (c, d) in leq
    }
    ihom = {(a, b): join([s for s in els if (t[(a, s)], b) in leq]) for a in els for b in els}
    ev = {(a, b): mor(t[(a, ihom[(a, b)])], b) for a in els for b in els}
    curry = {}
    for a in els:
        for b in els:
            for c in els:
                curry[(a, b, c)] = {mor(t[(a, b)], c): mor(b, ihom[(a, c)])} if (t[(a, b)], c) in leq else {}
    v = Smcc(
        cat=cat,
        tensor_obj=dict(t),
        tensor_mor=tensor_mor,
        unit=q.unit,
        assoc={(a, b, c): mor(t[(t[(a, b)], c)], t[(t[(a, b)], c)]) for a in els for b in els for c in els},
        lunit={a: mor(a, a) for a in els},
        runit={a: mor(a, a) for a in els},
        sym={(a, b): mor(t[(a, b)], t[(a, b)]) for a in els for b in els},
        ihom=ihom,
        ev=ev,
        curry=curry,
        name=q.name,
    )
    logger.debug("quantale %s: %d elements, %d morphisms", q.name, len(els), len(morphisms))
    return v


def monoid_to_smcc(m: CommMonoidDesc) -> Smcc:
    """One-object symmetric monoidal closed category of a finite commutative monoid."""
    els = tuple(m.elements)
    mult = m.mult
    if m.unit not in els:
        raise MonoidError(f"{m.name}: unit is not an element", (m.unit,))
    for x in els:
        for y in els:
            if mult.get((x, y)) not in els:
                raise MonoidError(f"{m.name}: multiplication table incomplete", (x, y))
    for x in els:
        if mult[(m.unit, x)] != x or mult[(x, m.unit)] != x:
            raise MonoidError(f"{m.name}: unit law fails", (m.unit, x))
        for y in els:
            if mult[(x, y)] != mult[(y, x)]:
                raise MonoidError(f"{m.name}: not commutative, symmetry would fail", (x, y))
            for z in els:
                if mult[(mult[(x, y)], z)] != mult[(x, mult[(y, z)])]:
                    raise MonoidError(f"{m.name}: not associative", (x, y, z))
    e = m.unit
    cat = FinCat(
        ("*",),
        els,
        {x: "*" for x in els},
        {x: "*" for x in els},
        {"*": e},
        {(g, f): mult[(g, f)] for g in els for f in els},
        name=m.name,
    )
    return Smcc(
        cat=cat,
        tensor_obj={("*", "*"): "*"},
        tensor_mor={(f, g): mult[(f, g)] for f in els for g in els},
        unit="*",
        assoc={("*", "*", "*"): e},
        lunit={"*": e},
        runit={"*": e},
        sym={("*", "*"): e},
        ihom={("*", "*"): "*"},
        ev={("*", "*"): e},
        curry={("*", "*", "*"): {f: f for f in els}},
        name=m.name,
    )


def transpose(v: Smcc, f: str, a: str, b: str) -> str:
    return v.transpose(f, a, b)


def untranspose(v: Smcc, g: str, a: str, c: str) -> str:
    return v.untranspose(g, a, c)


# ── Monoidal functors ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class MonoidalFunctor:
    """(F, e, m) with e: I_W → F(I_V) and m[(A,B)]: FA⊗FB → F(A⊗B)."""

    source: Smcc
    target: Smcc
    functor: FinFunctor
    e: str
    m: dict[tuple[str, str], str]
    name: str = field(default="G", compare=False)

    def obj(self, x: str) -> str:
        return self.functor.omap[x]

    def mor(self, f: str) -> str:
        return self.functor.mmap[f]

    @cached_property
    def is_symmetric(self) -> bool:
        return symmetry_report(self).ok

    @cached_property
    def strictness(self) -> str:
        """'strict', 'strong' or 'lax', read off the structure cells."""
        w = self.target
        cells = [self.e, *self.m.values()]
        if all(w.cat.dom[c] == w.cat.cod[c] and w.cat.identity[w.cat.dom[c]] == c for c in cells):
            return "strict"
        if all(w.cat.is_iso(c) for c in cells):
            return "strong"
        return "lax"


def check_monoidal_functor(F: MonoidalFunctor, require_symmetric: bool = False) -> LawReport:
    report = LawReport()
    v, w = F.source, F.target
    if F.functor.source != v.cat or F.functor.target != w.cat:
        report.structural_error(f"{F.name}: underlying functor does not run {v.name} → {w.name}")
        return report
    report.extend(check_functor(F.functor))
    if not report.ok:
        return report
    if F.e not in w.cat.dom or w.dom(F.e) != w.unit or w.cod(F.e) != F.obj(v.unit):
        report.fail("monoidal.unit_shape", F.name, detail=str(F.e))
        return report
    for x in v.objects:
        for y in v.objects:
            c = F.m.get((x, y))
            if c not in w.cat.dom or w.dom(c) != w.t(F.obj(x), F.obj(y)) or w.cod(c) != F.obj(v.t(x, y)):
                report.fail("monoidal.mult_shape", x, y, detail=str(c))
    if not report.ok:
        return report
    for f in v.cat.morphisms:
        for g in v.cat.morphisms:
            a, a2, b, b2 = v.dom(f), v.cod(f), v.dom(g), v.cod(g)
            agree(report, "monoidal.mult_naturality", (f, g),
                  lambda: w.comp(F.mor(v.tm(f, g)), F.m[(a, b)]),
                  lambda: w.comp(F.m[(a2, b2)], w.tm(F.mor(f), F.mor(g))))
    for x in v.objects:
        Fx = F.obj(x)
        agree(report, "monoidal.left_unit", (x,),
              lambda: w.seq(w.tm(F.e, w.id(Fx)), F.m[(v.unit, x)], F.mor(v.l(x))),
              lambda: w.l(Fx))
        agree(report, "monoidal.right_unit", (x,),
              lambda: w.seq(w.tm(w.id(Fx), F.e), F.m[(x, v.unit)], F.mor(v.r(x))),
              lambda: w.r(Fx))
        for y in v.objects:
            Fy = F.obj(y)
            for z in v.objects:
                Fz = F.obj(z)
                agree(report, "monoidal.associativity", (x, y, z),
                      lambda: w.seq(w.tm(F.m[(x, y)], w.id(Fz)), F.m[(v.t(x, y), z)], F.mor(v.a(x, y, z))),
                      lambda: w.seq(w.a(Fx, Fy, Fz), w.tm(w.id(Fx), F.m[(y, z)]), F.m[(x, v.t(y, z))]))
    if require_symmetric:
        report.extend(symmetry_report(F))
    return report


def symmetry_report(F: MonoidalFunctor) -> LawReport:
    report = LawReport()
    v, w = F.source, F.target
    for x in v.objects:
        for y in v.objects:
            agree(report, "monoidal.symmetry", (x, y),
                  lambda: w.comp(F.mor(v.s(x, y)), F.m[(x, y)]),
                  lambda: w.comp(F.m[(y, x)], w.s(F.obj(x), F.obj(y))))
    return report


def identity_monoidal(v: Smcc) -> MonoidalFunctor:
    return MonoidalFunctor(
        v, v, identity_functor(v.cat), v.id(v.unit),
        {(x, y): v.id(v.t(x, y)) for x in v.objects for y in v.objects},
        name=f"1_{v.name}",
    )


def compose_monoidal(H: MonoidalFunctor, G: MonoidalFunctor) -> MonoidalFunctor:
    """H∘G with e = H(e^G)∘e^H and m = H(m^G)∘m^H."""
    if G.target != H.source:
        raise StructuralError(f"cannot compose {H.name} after {G.name}")
    u, w = G.source, H.target
    return MonoidalFunctor(
        u, w,
        compose_functors(H.functor, G.functor),
        w.comp(H.mor(G.e), H.e),
        {(x, y): w.comp(H.mor(G.m[(x, y)]), H.m[(G.obj(x), G.obj(y))]) for x in u.objects for y in u.objects},
        name=f"{H.name}∘{G.name}",
    )


def thin_monoidal_functor(source: Smcc, target: Smcc, omap: dict[str, str], name: str) -> MonoidalFunctor:
    """Monoidal functor into a thin target; every structure cell is forced by omap.

    Raises StructuralError when a forced cell does not exist (omap not
    monotone, or not lax monoidal).
    """
    w = target.cat

    def forced(a: str, b: str, what: str) -> str:
        return unique_morphism(w, a, b, f"{name} {what}")

    mmap = {f: forced(omap[source.dom(f)], omap[source.cod(f)], f"on {f}") for f in source.cat.morphisms}
    functor = FinFunctor(source.cat, w, dict(omap), mmap, name=name)
    e = forced(target.unit, omap[source.unit], "unit cell")
    m = {
        (x, y): forced(target.t(omap[x], omap[y]), omap[source.t(x, y)], f"cell at ({x},{y})")
        for x in source.objects for y in source.objects
    }
    return MonoidalFunctor(source, target, functor, e, m, name=name)


# ── Monoidal transformations ──────────────────────────────────────────────────

@dataclass(frozen=True)
class MonoidalNatTrans:
    source: MonoidalFunctor
    target: MonoidalFunctor
    components: dict[str, str]
    name: str = field(default="α", compare=False)

    @property
    def underlying(self) -> FinNatTrans:
        return FinNatTrans(self.source.functor, self.target.functor, self.components, name=self.name)


def check_monoidal_nat(t: MonoidalNatTrans) -> LawReport:
    report = LawReport()
    F, G = t.source, t.target
    if F.source != G.source or F.target != G.target:
        report.structural_error(f"{t.name}: {F.name} and {G.name} are not parallel")
        return report
    report.extend(check_nat(t.underlying))
    if not report.ok:
        return report
    v, w = F.source, F.target
    agree(report, "monoidal_nat.unit", (t.name,),
          lambda: w.comp(t.components[v.unit], F.e), lambda: G.e)
    for x in v.objects:
        for y in v.objects:
            agree(report, "monoidal_nat.mult", (x, y),
                  lambda: w.comp(t.components[v.t(x, y)], F.m[(x, y)]),
                  lambda: w.comp(G.m[(x, y)], w.tm(t.components[x], t.components[y])))
    return report


def thin_monoidal_nat(F: MonoidalFunctor, G: MonoidalFunctor, name: str) -> MonoidalNatTrans:
    w = F.target.cat
    comps = {x: unique_morphism(w, F.obj(x), G.obj(x), f"{name} at {x}") for x in F.source.objects}
    return MonoidalNatTrans(F, G, comps, name=name)


def identity_monoidal_nat(F: MonoidalFunctor) -> MonoidalNatTrans:
    return MonoidalNatTrans(F, F, {x: F.target.id(F.obj(x)) for x in F.source.objects}, name=f"1_{F.name}")


def vcomp_monoidal(beta: MonoidalNatTrans, alpha: MonoidalNatTrans) -> MonoidalNatTrans:
    if alpha.target != beta.source:
        raise StructuralError(f"cannot compose {beta.name} after {alpha.name}")
    w = alpha.source.target
    return MonoidalNatTrans(
        alpha.source, beta.target,
        {x: w.comp(beta.components[x], alpha.components[x]) for x in alpha.components},
        name=f"{beta.name}·{alpha.name}",
    )


def whisker_left_monoidal(H: MonoidalFunctor, alpha: MonoidalNatTrans) -> MonoidalNatTrans:
    """Hα: HF ⇒ HG."""
    return MonoidalNatTrans(
        compose_monoidal(H, alpha.source), compose_monoidal(H, alpha.target),
        {x: H.mor(c) for x, c in alpha.components.items()},
        name=f"{H.name}{alpha.name}",
    )


def whisker_right_monoidal(alpha: MonoidalNatTrans, K: MonoidalFunctor) -> MonoidalNatTrans:
    """αK: FK ⇒ GK."""
    return MonoidalNatTrans(
        compose_monoidal(alpha.source, K), compose_monoidal(alpha.target, K),
        {x: alpha.components[K.obj(x)] for x in K.source.objects},
        name=f"{alpha.name}{K.name}",
    )
