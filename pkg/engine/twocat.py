"""One interface over the 2-categories the engine works in.

A context knows how to compose, whisker and compare cells of one
2-category. Cells handed to the wrong context are rejected, so a 2-cell of
SMCCAT can never be pasted onto one of ∫ by accident.
"""
import logging
from dataclasses import dataclass, field

from engine.enriched import (
    MonVFunctor,
    MonVNatTrans,
    SymMonClosedVCat,
    compose_monv,
    identity_monv,
    identity_monvnat,
    vcomp_monvnat,
    whisker_left_monvnat,
    whisker_right_monvnat,
)
from engine.errors import StructuralError
from engine.smcc import (
    MonoidalFunctor,
    MonoidalNatTrans,
    Smcc,
    compose_monoidal,
    identity_monoidal,
    identity_monoidal_nat,
    vcomp_monoidal,
    whisker_left_monoidal,
    whisker_right_monoidal,
)

logger = logging.getLogger(__name__)


class TwoCategory:
    tag = "2cat"
    one_cell_types: tuple[type, ...] = ()
    two_cell_types: tuple[type, ...] = ()

    def _own(self, *cells) -> None:
        for c in cells:
            if not isinstance(c, self.one_cell_types + self.two_cell_types):
                raise StructuralError(f"{type(c).__name__} is not a cell of {self.tag}")

    # 1-cells
    def compose(self, g, f):
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def source(self, f):
        raise NotImplementedError

    def target(self, f):
        raise NotImplementedError

    # 2-cells
    def identity_cell(self, f):
        raise NotImplementedError

    def vcomp(self, beta, alpha):
        raise NotImplementedError

    def whisker_left(self, h, alpha):
        raise NotImplementedError

    def whisker_right(self, alpha, k):
        raise NotImplementedError

    def components(self, alpha) -> tuple:
        raise NotImplementedError

    def cell_equal(self, a, b) -> bool:
        """Equality of 2-cells as component tables."""
        self._own(a, b)
        return self.components(a) == self.components(b)


class SmccatContext(TwoCategory):
    """Finite SMCCAT: Smccs, monoidal functors, monoidal transformations."""

    tag = "SMCCAT"
    one_cell_types = (MonoidalFunctor,)
    two_cell_types = (MonoidalNatTrans,)

    def compose(self, g: MonoidalFunctor, f: MonoidalFunctor) -> MonoidalFunctor:
        self._own(g, f)
        return compose_monoidal(g, f)

    def identity(self, x: Smcc) -> MonoidalFunctor:
        return identity_monoidal(x)

    def source(self, f: MonoidalFunctor) -> Smcc:
        return f.source

    def target(self, f: MonoidalFunctor) -> Smcc:
        return f.target

    def identity_cell(self, f: MonoidalFunctor) -> MonoidalNatTrans:
        self._own(f)
        return identity_monoidal_nat(f)

    def vcomp(self, beta: MonoidalNatTrans, alpha: MonoidalNatTrans) -> MonoidalNatTrans:
        self._own(beta, alpha)
        return vcomp_monoidal(beta, alpha)

    def whisker_left(self, h: MonoidalFunctor, alpha: MonoidalNatTrans) -> MonoidalNatTrans:
        self._own(h, alpha)
        return whisker_left_monoidal(h, alpha)

    def whisker_right(self, alpha: MonoidalNatTrans, k: MonoidalFunctor) -> MonoidalNatTrans:
        self._own(alpha, k)
        return whisker_right_monoidal(alpha, k)

    def components(self, alpha: MonoidalNatTrans) -> tuple:
        return tuple(sorted(alpha.components.items()))


class FibreContext(TwoCategory):
    """eSMCCAT_V over one base V."""

    one_cell_types = (MonVFunctor,)
    two_cell_types = (MonVNatTrans,)

    def __init__(self, base: Smcc):
        self.base = base
        self.tag = f"eSMCCAT_{base.name}"

    def _own(self, *cells) -> None:
        super()._own(*cells)
        for c in cells:
            f = c if isinstance(c, MonVFunctor) else c.source
            if f.source.base != self.base or f.target.base != self.base:
                raise StructuralError(f"{getattr(c, 'name', c)} is not enriched in {self.base.name}")

    def compose(self, g: MonVFunctor, f: MonVFunctor) -> MonVFunctor:
        self._own(g, f)
        return compose_monv(g, f)

    def identity(self, x: SymMonClosedVCat) -> MonVFunctor:
        return identity_monv(x)

    def source(self, f: MonVFunctor) -> SymMonClosedVCat:
        return f.source

    def target(self, f: MonVFunctor) -> SymMonClosedVCat:
        return f.target

    def identity_cell(self, f: MonVFunctor) -> MonVNatTrans:
        self._own(f)
        return identity_monvnat(f)

    def vcomp(self, beta: MonVNatTrans, alpha: MonVNatTrans) -> MonVNatTrans:
        self._own(beta, alpha)
        return vcomp_monvnat(beta, alpha)

    def whisker_left(self, h: MonVFunctor, alpha: MonVNatTrans) -> MonVNatTrans:
        self._own(h, alpha)
        return whisker_left_monvnat(h, alpha)

    def whisker_right(self, alpha: MonVNatTrans, k: MonVFunctor) -> MonVNatTrans:
        self._own(alpha, k)
        return whisker_right_monvnat(alpha, k)

    def components(self, alpha: MonVNatTrans) -> tuple:
        return tuple(sorted(alpha.components.items()))


class GrothContext(TwoCategory):
    """∫ eSMCCAT(−), cell by cell."""

    tag = "Groth"

    def __init__(self):
        from engine.groth import Groth1Cell, Groth2Cell

        self.one_cell_types = (Groth1Cell,)
        self.two_cell_types = (Groth2Cell,)

    def compose(self, g, f):
        from engine.groth import groth_compose

        self._own(g, f)
        return groth_compose(g, f)

    def identity(self, x):
        from engine.groth import groth_identity

        return groth_identity(x)

    def source(self, f):
        return f.source

    def target(self, f):
        return f.target

    def identity_cell(self, f):
        from engine.groth import groth_identity_cell

        self._own(f)
        return groth_identity_cell(f)

    def vcomp(self, beta, alpha):
        from engine.groth import groth_vcomp

        self._own(beta, alpha)
        return groth_vcomp(beta, alpha)

    def whisker_left(self, h, alpha):
        from engine.groth import groth_whisker_left

        self._own(h, alpha)
        return groth_whisker_left(h, alpha)

    def whisker_right(self, alpha, k):
        from engine.groth import groth_whisker_right

        self._own(alpha, k)
        return groth_whisker_right(alpha, k)

    def components(self, alpha) -> tuple:
        return (
            tuple(sorted(alpha.down.components.items())),
            tuple(sorted(alpha.up.components.items())),
        )


# ── Lax slices ────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SliceObj:
    """(L, g) with g: L → apex."""

    obj: object
    arrow: object
    name: str = field(default="(L,g)", compare=False)


@dataclass(frozen=True)
class Slice1Cell:
    """(s, σ): (L,g) → (M,h) with σ: g ⇒ h∘s."""

    source: SliceObj
    target: SliceObj
    s: object
    sigma: object
    name: str = field(default="(s,σ)", compare=False)


@dataclass(frozen=True)
class Slice2Cell:
    """α: (s,σ) ⇒ (t,τ), a 2-cell s ⇒ t with hα·σ = τ."""

    source: Slice1Cell
    target: Slice1Cell
    alpha: object
    name: str = field(default="α", compare=False)


class LaxSliceContext(TwoCategory):
    """The lax slice K⫽apex of an inner context K."""

    one_cell_types = (Slice1Cell,)
    two_cell_types = (Slice2Cell,)

    def __init__(self, inner: TwoCategory, apex):
        self.inner = inner
        self.apex = apex
        self.tag = f"{inner.tag}⫽{getattr(apex, 'name', 'apex')}"

    def _own(self, *cells) -> None:
        super()._own(*cells)
        for c in cells:
            one = c if isinstance(c, Slice1Cell) else c.source
            if self.inner.target(one.target.arrow) != self.apex:
                raise StructuralError(f"{getattr(c, 'name', c)} does not lie over the apex of {self.tag}")

    def compose(self, g: Slice1Cell, f: Slice1Cell) -> Slice1Cell:
        """(t,τ)∘(s,σ) = (ts, τs·σ)."""
        self._own(g, f)
        k = self.inner
        return Slice1Cell(
            f.source, g.target,
            k.compose(g.s, f.s),
            k.vcomp(k.whisker_right(g.sigma, f.s), f.sigma),
            name=f"{g.name}∘{f.name}",
        )

    def identity(self, x: SliceObj) -> Slice1Cell:
        k = self.inner
        s = k.identity(k.source(x.arrow))
        return Slice1Cell(x, x, s, k.identity_cell(x.arrow), name=f"1_{x.name}")

    def source(self, f: Slice1Cell) -> SliceObj:
        return f.source

    def target(self, f: Slice1Cell) -> SliceObj:
        return f.target

    def identity_cell(self, f: Slice1Cell) -> Slice2Cell:
        self._own(f)
        return Slice2Cell(f, f, self.inner.identity_cell(f.s), name=f"1_{f.name}")

    def vcomp(self, beta: Slice2Cell, alpha: Slice2Cell) -> Slice2Cell:
        self._own(beta, alpha)
        return Slice2Cell(alpha.source, beta.target, self.inner.vcomp(beta.alpha, alpha.alpha),
                          name=f"{beta.name}·{alpha.name}")

    def whisker_left(self, h: Slice1Cell, alpha: Slice2Cell) -> Slice2Cell:
        self._own(h, alpha)
        return Slice2Cell(
            self.compose(h, alpha.source), self.compose(h, alpha.target),
            self.inner.whisker_left(h.s, alpha.alpha),
            name=f"{h.name}{alpha.name}",
        )

    def whisker_right(self, alpha: Slice2Cell, k: Slice1Cell) -> Slice2Cell:
        self._own(alpha, k)
        return Slice2Cell(
            self.compose(alpha.source, k), self.compose(alpha.target, k),
            self.inner.whisker_right(alpha.alpha, k.s),
            name=f"{alpha.name}{k.name}",
        )

    def components(self, alpha: Slice2Cell) -> tuple:
        return self.inner.components(alpha.alpha)

    def one_cell_equal(self, f: Slice1Cell, g: Slice1Cell) -> bool:
        return f.s == g.s and self.inner.cell_equal(f.sigma, g.sigma)

    def slice_condition_holds(self, alpha: Slice2Cell) -> bool:
        """h∘α · σ = τ."""
        k = self.inner
        h = alpha.source.target.arrow
        pasted = k.vcomp(k.whisker_left(h, alpha.alpha), alpha.source.sigma)
        return k.cell_equal(pasted, alpha.target.sigma)
