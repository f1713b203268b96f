"""Explicit finite categories, functors and natural transformations.

Every structure is a set of literal tables. Derived structures (products,
pushforwards, underlying categories) name their cells by canonical encodings
of how they were built, so two constructions that agree on the nose compare
equal as plain dataclasses.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from engine import config
from engine.errors import CompositionError, SizeGuardError, StructuralError
from engine.laws import LawReport

logger = logging.getLogger(__name__)


def pair_id(x: str, y: str) -> str:
    return f"({x},{y})"


def guard_size(what: str, size: int) -> None:
    bound = config.max_cells()
    if size > bound:
        raise SizeGuardError(what, size, bound)


# ── Categories ────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class FinCat:
    objects: tuple[str, ...]
    morphisms: tuple[str, ...]
    dom: dict[str, str]
    cod: dict[str, str]
    identity: dict[str, str]
    comp: dict[tuple[str, str], str]
    name: str = field(default="C", compare=False)

    @cached_property
    def _homs(self) -> dict[tuple[str, str], tuple[str, ...]]:
        homs: dict[tuple[str, str], list[str]] = {}
        for f in self.morphisms:
            homs.setdefault((self.dom[f], self.cod[f]), []).append(f)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _inverses(self) -> dict[str, str]:
        inv: dict[str, str] = {}
        for f in self.morphisms:
            a, b = self.dom[f], self.cod[f]
            for g in self.hom(b, a):
                if self.comp.get((g, f)) == self.identity[a] and self.comp.get((f, g)) == self.identity[b]:
                    inv[f] = g
                    break
        return inv

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        return self._homs.get((a, b), ())

    def id(self, a: str) -> str:
        try:
            return self.identity[a]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown object {a!r}") from None

    def compose(self, g: str, f: str) -> str:
        """g∘f."""
        if f not in self.cod or g not in self.dom:
            unknown = f if f not in self.cod else g
            raise CompositionError(g, f, f"{self.name}: unknown morphism {unknown!r}")
        if self.cod[f] != self.dom[g]:
            raise CompositionError(g, f, f"codomain {self.cod[f]} is not domain {self.dom[g]}")
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise CompositionError(g, f, f"{self.name}: missing composition entry") from None

    def seq(self, *fs: str) -> str:
        """Diagrammatic composite: seq(f, g, h) = h∘g∘f."""
        out = fs[0]
        for g in fs[1:]:
            out = self.compose(g, out)
        return out

    def is_iso(self, f: str) -> bool:
        return f in self._inverses

    def inverse(self, f: str) -> str:
        try:
            return self._inverses[f]
        except KeyError:
            raise StructuralError(f"{self.name}: {f} is not invertible") from None


def compose(c: FinCat, g: str, f: str) -> str:
    return c.compose(g, f)


def check_category(c: FinCat) -> LawReport:
    report = LawReport()
    objects = set(c.objects)
    for f in c.morphisms:
        for table, label in ((c.dom, "dom"), (c.cod, "cod")):
            if f not in table:
                report.structural_error(f"{c.name}: morphism {f} has no {label}")
            elif table[f] not in objects:
                report.structural_error(f"{c.name}: {label}({f}) = {table[f]} is not an object")
    for a in c.objects:
        i = c.identity.get(a)
        if i is None or i not in c.dom:
            report.structural_error(f"{c.name}: object {a} has no identity")
        elif c.dom[i] != a or c.cod[i] != a:
            report.fail("category.identity_shape", a, i)
    for (g, f), h in c.comp.items():
        if h not in c.dom or g not in c.dom or f not in c.dom:
            report.structural_error(f"{c.name}: composition entry ({g},{f}) -> {h} names an unknown morphism")
    if not report.ok:
        return report

    for f in c.morphisms:
        for g in c.morphisms:
            composable = c.cod[f] == c.dom[g]
            entry = c.comp.get((g, f))
            if composable and entry is None:
                report.fail("category.comp_total", g, f)
            elif not composable and entry is not None:
                report.fail("category.comp_partial", g, f)
            elif entry is not None and (c.dom[entry] != c.dom[f] or c.cod[entry] != c.cod[g]):
                report.fail("category.comp_shape", g, f, detail=entry)
    for f in c.morphisms:
        if c.comp.get((f, c.identity[c.dom[f]])) != f:
            report.fail("category.right_identity", f)
        if c.comp.get((c.identity[c.cod[f]], f)) != f:
            report.fail("category.left_identity", f)
    for h, g, f in all_composable_triples(c):
        gf = c.comp.get((g, f))
        hg = c.comp.get((h, g))
        lhs = c.comp.get((h, gf)) if gf is not None else None
        rhs = c.comp.get((hg, f)) if hg is not None else None
        if lhs != rhs:
            report.fail("category.associativity", h, g, f)
    return report


def _out(c: FinCat, a: str) -> list[str]:
    return [g for b in c.objects for g in c.hom(a, b)]


def terminal_category() -> FinCat:
    return FinCat(("*",), ("1",), {"1": "*"}, {"1": "*"}, {"*": "1"}, {("1", "1"): "1"}, name="1")


def product_category(a: FinCat, b: FinCat) -> FinCat:
    guard_size(f"{a.name}×{b.name}", len(a.morphisms) * len(b.morphisms))
    objects = tuple(pair_id(x, y) for x in a.objects for y in b.objects)
    morphisms = tuple(pair_id(f, g) for f in a.morphisms for g in b.morphisms)
    dom, cod, comp = {}, {}, {}
    for f in a.morphisms:
        for g in b.morphisms:
            m = pair_id(f, g)
            dom[m] = pair_id(a.dom[f], b.dom[g])
            cod[m] = pair_id(a.cod[f], b.cod[g])
    identity = {pair_id(x, y): pair_id(a.identity[x], b.identity[y]) for x in a.objects for y in b.objects}
    for (f2, f1), f in a.comp.items():
        for (g2, g1), g in b.comp.items():
            comp[(pair_id(f2, g2), pair_id(f1, g1))] = pair_id(f, g)
    logger.debug("product %s×%s: %d objects, %d morphisms", a.name, b.name, len(objects), len(morphisms))
    return FinCat(objects, morphisms, dom, cod, identity, comp, name=f"{a.name}×{b.name}")


# ── Functors ──────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class FinFunctor:
    source: FinCat
    target: FinCat
    omap: dict[str, str]
    mmap: dict[str, str]
    name: str = field(default="F", compare=False)

    def __call__(self, x: str) -> str:
        """Apply to an object or a morphism id."""
        if x in self.mmap:
            return self.mmap[x]
        if x in self.omap:
            return self.omap[x]
        raise StructuralError(f"{self.name}: {x!r} is neither an object nor a morphism of {self.source.name}")

    @property
    def is_isomorphism(self) -> bool:
        return (
            len(set(self.omap.values())) == len(self.target.objects) == len(self.source.objects)
            and len(set(self.mmap.values())) == len(self.target.morphisms) == len(self.source.morphisms)
        )


def identity_functor(c: FinCat) -> FinFunctor:
    return FinFunctor(c, c, {x: x for x in c.objects}, {f: f for f in c.morphisms}, name=f"1_{c.name}")


def compose_functors(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    if f.target != g.source:
        raise StructuralError(f"cannot compose {g.name} after {f.name}: {f.target.name} is not {g.source.name}")
    return FinFunctor(
        f.source,
        g.target,
        {x: g.omap[y] for x, y in f.omap.items()},
        {m: g.mmap[n] for m, n in f.mmap.items()},
        name=f"{g.name}∘{f.name}",
    )


def inverse_functor(f: FinFunctor) -> FinFunctor:
    if not f.is_isomorphism:
        raise StructuralError(f"{f.name} is not an isomorphism of categories")
    return FinFunctor(
        f.target,
        f.source,
        {y: x for x, y in f.omap.items()},
        {n: m for m, n in f.mmap.items()},
        name=f"{f.name}^-1",
    )


def check_functor(F: FinFunctor) -> LawReport:
    report = LawReport()
    s, t = F.source, F.target
    for x in s.objects:
        if F.omap.get(x) not in t.identity:
            report.structural_error(f"{F.name}: object {x} maps to {F.omap.get(x)!r}, not an object of {t.name}")
    for f in s.morphisms:
        if F.mmap.get(f) not in t.dom:
            report.structural_error(f"{F.name}: morphism {f} maps to {F.mmap.get(f)!r}, not a morphism of {t.name}")
    if not report.ok:
        return report
    for f in s.morphisms:
        Ff = F.mmap[f]
        if t.dom[Ff] != F.omap[s.dom[f]] or t.cod[Ff] != F.omap[s.cod[f]]:
            report.fail("functor.shape", f, detail=Ff)
    for x in s.objects:
        if F.mmap[s.identity[x]] != t.identity[F.omap[x]]:
            report.fail("functor.identity", x)
    for (g, f), h in s.comp.items():
        try:
            if t.compose(F.mmap[g], F.mmap[f]) != F.mmap[h]:
                report.fail("functor.composition", g, f)
        except CompositionError:
            report.fail("functor.composition", g, f, detail="image not composable")
    return report


# ── Natural transformations ───────────────────────────────────────────────────

@dataclass(frozen=True)
class FinNatTrans:
    source: FinFunctor
    target: FinFunctor
    components: dict[str, str]
    name: str = field(default="α", compare=False)


def check_nat(alpha: FinNatTrans) -> LawReport:
    report = LawReport()
    F, G = alpha.source, alpha.target
    if F.source != G.source or F.target != G.target:
        report.structural_error(f"{alpha.name}: {F.name} and {G.name} are not parallel")
        return report
    t = F.target
    for x in F.source.objects:
        a = alpha.components.get(x)
        if a not in t.dom:
            report.structural_error(f"{alpha.name}: no component at {x}")
        elif t.dom[a] != F.omap[x] or t.cod[a] != G.omap[x]:
            report.fail("nat.shape", x, detail=a)
    if not report.ok:
        return report
    for f in F.source.morphisms:
        x, y = F.source.dom[f], F.source.cod[f]
        if t.compose(G.mmap[f], alpha.components[x]) != t.compose(alpha.components[y], F.mmap[f]):
            report.fail("nat.naturality", f)
    return report


def identity_nat(F: FinFunctor) -> FinNatTrans:
    return FinNatTrans(F, F, {x: F.target.identity[F.omap[x]] for x in F.source.objects}, name=f"1_{F.name}")


def all_composable_triples(c: FinCat):
    for f in c.morphisms:
        for g in _out(c, c.cod[f]):
            for h in _out(c, c.cod[g]):
                yield h, g, f

