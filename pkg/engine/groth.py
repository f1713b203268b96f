"""The 2-category ∫ eSMCCAT(−) over a finite base index.

Objects pair a base V with a symmetric monoidal closed V-category. A 1-cell
(f↓, f↑) carries f↑: f↓_*A↑ → B↑ and a 2-cell (α↓, α↑) carries
α↑: f↑ ⇒ g↑∘α↓_*A↑. Cells are computed one at a time; nothing here
materializes the whole 2-category.

Universal properties are checked over a probe: the finite closure of a
BaseIndex under its identities, lifts and designated cells.
"""
import itertools
import logging
from dataclasses import dataclass, field

from engine import config
from engine.autoenrich import autoenrich, grave, grave_nat
from engine.chbase import (
    enumerate_monoidal_vnats,
    push_monvcat,
    push_monvfunctor,
    push_monvnat,
    push_nat_family_mon,
)
from engine.enriched import (
    MonVFunctor,
    MonVNatTrans,
    SymMonClosedVCat,
    VFunctor,
    check_monvfunctor,
    check_monvnat,
    check_symmonclosed,
    check_vfunctor,
    compose_monv,
    identity_monv,
    identity_vnat,
)
from engine.errors import EnumerationGuardError, PreconditionError, StructuralError
from engine.fincat import guard_size
from engine.laws import LawReport
from engine.smcc import (
    MonoidalFunctor,
    MonoidalNatTrans,
    Smcc,
    check_monoidal_functor,
    check_monoidal_nat,
    check_smcc,
    compose_monoidal,
    identity_monoidal,
    identity_monoidal_nat,
    vcomp_monoidal,
    whisker_left_monoidal,
    whisker_right_monoidal,
)
from engine.twocat import FibreContext, GrothContext, LaxSliceContext, Slice1Cell, Slice2Cell, SliceObj, SmccatContext

logger = logging.getLogger(__name__)


# ── Cells ─────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class GrothObj:
    base: Smcc
    fibre: SymMonClosedVCat
    name: str = field(default="A", compare=False)


@dataclass(frozen=True)
class Groth1Cell:
    source: GrothObj
    target: GrothObj
    down: MonoidalFunctor
    up: MonVFunctor
    name: str = field(default="f", compare=False)


@dataclass(frozen=True)
class Groth2Cell:
    source: Groth1Cell
    target: Groth1Cell
    down: MonoidalNatTrans
    up: MonVNatTrans
    name: str = field(default="α", compare=False)


def check_groth_obj(A: GrothObj) -> LawReport:
    report = LawReport()
    if A.fibre.base != A.base:
        report.structural_error(f"{A.name}: fibre {A.fibre.name} is not enriched in {A.base.name}")
        return report
    report.extend(check_smcc(A.base), prefix="base")
    report.extend(check_symmonclosed(A.fibre), prefix="fibre")
    return report


def check_groth_1cell(f: Groth1Cell) -> LawReport:
    report = LawReport()
    A, B = f.source, f.target
    if f.down.source != A.base or f.down.target != B.base:
        report.structural_error(f"{f.name}: {f.down.name} does not run {A.base.name} → {B.base.name}")
        return report
    report.extend(check_monoidal_functor(f.down, require_symmetric=True))
    if not report.ok:
        return report
    if f.up.source != push_monvcat(f.down, A.fibre):
        report.fail("groth.1cell_domain", f.name, detail=f"{f.up.name} does not start at {f.down.name}_*{A.fibre.name}")
    if f.up.target != B.fibre:
        report.fail("groth.1cell_codomain", f.name, detail=f"{f.up.name} does not land in {B.fibre.name}")
    if report.ok:
        report.extend(check_monvfunctor(f.up))
    return report


def check_groth_2cell(alpha: Groth2Cell) -> LawReport:
    report = LawReport()
    f, g = alpha.source, alpha.target
    if f.source != g.source or f.target != g.target:
        report.structural_error(f"{alpha.name}: {f.name} and {g.name} are not parallel")
        return report
    if alpha.down.source != f.down or alpha.down.target != g.down:
        report.structural_error(f"{alpha.name}: {alpha.down.name} does not lie over {f.name} ⇒ {g.name}")
        return report
    report.extend(check_monoidal_nat(alpha.down))
    if not report.ok:
        return report
    if alpha.up.source != f.up:
        report.fail("groth.2cell_domain", alpha.name)
    if alpha.up.target != compose_monv(g.up, push_nat_family_mon(alpha.down, f.source.fibre)):
        report.fail("groth.2cell_codomain", alpha.name)
    if report.ok:
        report.extend(check_monvnat(alpha.up))
    return report


# ── Composition ───────────────────────────────────────────────────────────────

def groth_identity(A: GrothObj) -> Groth1Cell:
    i = identity_monoidal(A.base)
    return Groth1Cell(A, A, i, identity_monv(push_monvcat(i, A.fibre)), name=f"1_{A.name}")


def groth_compose(g: Groth1Cell, f: Groth1Cell) -> Groth1Cell:
    """(g↓f↓, g↑∘g↓_*(f↑))."""
    if f.target != g.source:
        raise StructuralError(f"cannot compose {g.name} after {f.name}")
    return Groth1Cell(
        f.source, g.target,
        compose_monoidal(g.down, f.down),
        compose_monv(g.up, push_monvfunctor(g.down, f.up)),
        name=f"{g.name}∘{f.name}",
    )


def _up_target(g: Groth1Cell, down: MonoidalNatTrans, A: GrothObj) -> MonVFunctor:
    return compose_monv(g.up, push_nat_family_mon(down, A.fibre))


def groth_identity_cell(f: Groth1Cell) -> Groth2Cell:
    down = identity_monoidal_nat(f.down)
    up = MonVNatTrans(f.up, _up_target(f, down, f.source), identity_vnat(f.up.functor).components, name=f"1_{f.name}↑")
    return Groth2Cell(f, f, down, up, name=f"1_{f.name}")


def groth_vcomp(beta: Groth2Cell, alpha: Groth2Cell) -> Groth2Cell:
    if alpha.target != beta.source:
        raise StructuralError(f"cannot compose {beta.name} after {alpha.name}")
    f, g, h = alpha.source, alpha.target, beta.target
    down = vcomp_monoidal(beta.down, alpha.down)
    b = f.target.fibre.m
    comps = {
        x: b.name_compose(alpha.up.components[x], beta.up.components[x], f.up.obj(x), g.up.obj(x), h.up.obj(x))
        for x in f.source.fibre.objects
    }
    up = MonVNatTrans(f.up, _up_target(h, down, f.source), comps, name=f"{beta.name}·{alpha.name}↑")
    return Groth2Cell(f, h, down, up, name=f"{beta.name}·{alpha.name}")


def groth_whisker_left(k: Groth1Cell, alpha: Groth2Cell) -> Groth2Cell:
    """kα: kf ⇒ kg, with components k↑(k↓_*(α↑)_X)."""
    f, g = alpha.source, alpha.target
    kf, kg = groth_compose(k, f), groth_compose(k, g)
    down = whisker_left_monoidal(k.down, alpha.down)
    pushed = push_monvnat(k.down, alpha.up)
    comps = {
        x: k.up.functor.on_name(n, f.up.obj(x), g.up.obj(x))
        for x, n in pushed.components.items()
    }
    up = MonVNatTrans(kf.up, _up_target(kg, down, f.source), comps, name=f"{k.name}{alpha.name}↑")
    return Groth2Cell(kf, kg, down, up, name=f"{k.name}{alpha.name}")


def groth_whisker_right(alpha: Groth2Cell, u: Groth1Cell) -> Groth2Cell:
    """αu: fu ⇒ gu, with components α↑ at u↑X."""
    fu, gu = groth_compose(alpha.source, u), groth_compose(alpha.target, u)
    down = whisker_right_monoidal(alpha.down, u.down)
    comps = {x: alpha.up.components[u.up.obj(x)] for x in u.source.fibre.objects}
    up = MonVNatTrans(fu.up, _up_target(gu, down, u.source), comps, name=f"{alpha.name}{u.name}↑")
    return Groth2Cell(fu, gu, down, up, name=f"{alpha.name}{u.name}")


def cells_agree(a: Groth2Cell, b: Groth2Cell) -> bool:
    return a.down.components == b.down.components and a.up.components == b.up.components


# ── Lifting SMCCAT into ∫ ─────────────────────────────────────────────────────

def lift_obj(v: Smcc) -> GrothObj:
    return GrothObj(v, autoenrich(v), name=f"({v.name},u{v.name})")


def lift_one_cell(G: MonoidalFunctor) -> Groth1Cell:
    return Groth1Cell(lift_obj(G.source), lift_obj(G.target), G, grave(G), name=f"({G.name},{G.name}̀)")


def lift_cell(alpha: MonoidalNatTrans) -> Groth2Cell:
    return Groth2Cell(
        lift_one_cell(alpha.source), lift_one_cell(alpha.target),
        alpha, grave_nat(alpha),
        name=f"({alpha.name},{alpha.name}̆)",
    )


# ── Designated cells ──────────────────────────────────────────────────────────

def designated_cocartesian(k: MonoidalFunctor, A: GrothObj) -> Groth1Cell:
    """ψ(k,A) = (k, 1_{k_*A↑})."""
    if k.source != A.base:
        raise StructuralError(f"{k.name} does not start at {A.base.name}")
    pushed = push_monvcat(k, A.fibre)
    B = GrothObj(k.target, pushed, name=f"{k.name}_*{A.name}")
    return Groth1Cell(A, B, k, identity_monv(pushed), name=f"ψ({k.name},{A.name})")


def designated_cartesian(kappa: MonoidalNatTrans, g: Groth1Cell) -> Groth2Cell:
    """φ(κ,g) = (κ,1): (k, g↑∘κ_*A↑) ⇒ (ℓ, g↑)."""
    if kappa.target != g.down:
        raise StructuralError(f"{g.name} does not lie over the codomain of {kappa.name}")
    A = g.source
    up_f = compose_monv(g.up, push_nat_family_mon(kappa, A.fibre))
    f = Groth1Cell(A, g.target, kappa.source, up_f, name=f"{g.name}∘{kappa.name}_*")
    up = MonVNatTrans(up_f, up_f, identity_vnat(up_f.functor).components, name=f"1_{up_f.name}")
    return Groth2Cell(f, g, kappa, up, name=f"φ({kappa.name},{g.name})")


class Cleavage:
    """The chosen cocartesian 1-cells ψ and cartesian 2-cells φ."""

    def psi(self, k: MonoidalFunctor, A: GrothObj) -> Groth1Cell:
        return designated_cocartesian(k, A)

    def phi(self, kappa: MonoidalNatTrans, g: Groth1Cell) -> Groth2Cell:
        return designated_cartesian(kappa, g)


# ── Enumeration ───────────────────────────────────────────────────────────────

def _size(choices) -> int:
    n = 1
    for c in choices:
        n *= len(c)
    return n


def enumerate_monvfunctors(M: SymMonClosedVCat, N: SymMonClosedVCat, require_symmetric: bool = True) -> list[MonVFunctor]:
    """Every (symmetric) monoidal V-functor M → N, by pruned exhaustive search."""
    v = M.base
    if N.base != v:
        raise StructuralError(f"{M.name} and {N.name} have different bases")
    a, b = M.m, N.m
    obs = a.objects
    pairs = [(x, y) for x in obs for y in obs]
    bound = config.max_candidates()
    tried = 0
    found = []
    for images in itertools.product(b.objects, repeat=len(obs)):
        omap = dict(zip(obs, images))
        hchoices = [v.hom(a.hom[p], b.hom[(omap[p[0]], omap[p[1]])]) for p in pairs]
        tried += _size(hchoices)
        if tried > bound:
            raise EnumerationGuardError(f"monoidal V-functors {M.name} → {N.name}", tried, bound)
        for hm in itertools.product(*hchoices):
            F = VFunctor(a, b, omap, dict(zip(pairs, hm)), name=f"{M.name}→{N.name}")
            if not check_vfunctor(F).ok:
                continue
            echoices = v.hom(v.unit, b.hom[(N.unit_obj, omap[M.unit_obj])])
            mchoices = [v.hom(v.unit, b.hom[(N.t(omap[x], omap[y]), omap[M.t(x, y)])]) for x, y in pairs]
            tried += len(echoices) * _size(mchoices)
            if tried > bound:
                raise EnumerationGuardError(f"monoidal V-functors {M.name} → {N.name}", tried, bound)
            for e in echoices:
                for ms in itertools.product(*mchoices):
                    S = MonVFunctor(F, M, N, e, dict(zip(pairs, ms)), name=f"S{len(found)}")
                    if check_monvfunctor(S, require_symmetric=require_symmetric).ok:
                        found.append(S)
    logger.debug("%s → %s: %d monoidal V-functors among %d candidates", M.name, N.name, len(found), tried)
    return found


# ── Extension and lifting problems ────────────────────────────────────────────

@dataclass
class SolveResult:
    solutions: list[Groth2Cell]

    @property
    def unique(self) -> bool:
        return len(self.solutions) == 1

    @property
    def solution(self) -> Groth2Cell:
        if not self.unique:
            raise StructuralError(f"expected exactly one solution, found {len(self.solutions)}")
        return self.solutions[0]


def _lifts_over(k: MonoidalFunctor, B: GrothObj, C: GrothObj, f: Groth1Cell, want: Groth1Cell) -> list[Groth1Cell]:
    out = []
    for up in enumerate_monvfunctors(push_monvcat(k, B.fibre), C.fibre):
        cand = Groth1Cell(B, C, k, up, name=f"({k.name},{up.name})")
        if groth_compose(cand, f) == want:
            out.append(cand)
    return out


def solve_extension_problem(f: Groth1Cell, alpha: Groth2Cell, beta: MonoidalNatTrans) -> SolveResult:
    """All β': k' ⇒ ℓ': B → C with β'∘f = α and Pβ' = β."""
    A, B = f.source, f.target
    g, h = alpha.source, alpha.target
    if g.source != A:
        raise PreconditionError("dom α = dom f", f"{alpha.name} starts elsewhere")
    C = g.target
    if beta.source.source != B.base or beta.source.target != C.base:
        raise PreconditionError("β: PB → PC", f"{beta.name} has the wrong shape")
    pulled = whisker_right_monoidal(beta, f.down)
    if pulled.source != alpha.down.source or pulled.target != alpha.down.target or pulled.components != alpha.down.components:
        raise PreconditionError("β∘Pf = Pα")
    solutions = []
    for k2 in _lifts_over(beta.source, B, C, f, g):
        for l2 in _lifts_over(beta.target, B, C, f, h):
            for up in enumerate_monoidal_vnats(k2.up, compose_monv(l2.up, push_nat_family_mon(beta, B.fibre))):
                cell = Groth2Cell(k2, l2, beta, up, name=f"{beta.name}'")
                if cells_agree(groth_whisker_right(cell, f), alpha):
                    solutions.append(cell)
    logger.debug("extension of %s along %s: %d solutions", alpha.name, f.name, len(solutions))
    return SolveResult(solutions)


def solve_lifting_problem(phi: Groth2Cell, gamma: Groth2Cell, kappa: MonoidalNatTrans) -> SolveResult:
    """All κ': h ⇒ f with φ·κ' = γ and Pκ' = κ."""
    f, g = phi.source, phi.target
    h = gamma.source
    if gamma.target != g:
        raise PreconditionError("cod γ = cod φ")
    if kappa.source != h.down or kappa.target != f.down:
        raise PreconditionError("κ: Ph ⇒ Pf", f"{kappa.name} has the wrong shape")
    if vcomp_monoidal(phi.down, kappa).components != gamma.down.components:
        raise PreconditionError("Pφ·κ = Pγ")
    A = f.source
    solutions = []
    for up in enumerate_monoidal_vnats(h.up, compose_monv(f.up, push_nat_family_mon(kappa, A.fibre))):
        cell = Groth2Cell(h, f, kappa, up, name=f"{kappa.name}'")
        if cells_agree(groth_vcomp(phi, cell), gamma):
            solutions.append(cell)
    logger.debug("lifting of %s through %s: %d solutions", gamma.name, phi.name, len(solutions))
    return SolveResult(solutions)


# ── Base index and probe ──────────────────────────────────────────────────────

@dataclass
class BaseIndex:
    """Finite piece of SMCCAT: bases, monoidal functors among them, transformations among those."""

    bases: list[Smcc]
    functors: list[MonoidalFunctor]
    nats: list[MonoidalNatTrans]
    name: str = "index"

    def functors_between(self, v: Smcc, w: Smcc) -> list[MonoidalFunctor]:
        out = [F for F in self.functors if F.source == v and F.target == w]
        if v == w and not any(F == identity_monoidal(v) for F in out):
            out.insert(0, identity_monoidal(v))
        return out

    def generated_functors(self) -> list[MonoidalFunctor]:
        """Identities on the bases and the listed functors, closed under composition."""
        out = [identity_monoidal(v) for v in self.bases]
        out.extend(F for F in self.functors if F not in out)
        grown = True
        while grown:
            grown = False
            for G in list(out):
                for H in list(out):
                    if G.target == H.source and (HG := compose_monoidal(H, G)) not in out:
                        out.append(HG)
                        grown = True
            guard_size(f"functors generated by {self.name}", len(out))
        return out

    def cells(self) -> list[MonoidalNatTrans]:
        """The listed transformations plus the identity on every listed functor."""
        out = list(self.nats)
        for F in self.functors:
            out.append(identity_monoidal_nat(F))
        for v in self.bases:
            out.append(identity_monoidal_nat(identity_monoidal(v)))
        return out


def check_base_index(idx: BaseIndex) -> LawReport:
    report = LawReport()
    for v in idx.bases:
        sub = check_smcc(v)
        if not sub.ok:
            report.fail("index.invalid", v.name)
    for F in idx.functors:
        if F.source not in idx.bases or F.target not in idx.bases:
            report.fail("index.dangling", F.name)
        elif not check_monoidal_functor(F, require_symmetric=True).ok:
            report.fail("index.invalid", F.name)
    if not report.ok:
        return report
    generated = idx.generated_functors()
    for t in idx.nats:
        if t.source not in generated or t.target not in generated:
            report.fail("index.dangling", t.name)
        elif not check_monoidal_nat(t).ok:
            report.fail("index.invalid", t.name)
    return report


@dataclass
class Probe:
    objects: list[GrothObj]
    one_cells: list[Groth1Cell]
    two_cells: list[Groth2Cell]


def build_probe(idx: BaseIndex, cleavage: Cleavage | None = None) -> Probe:
    """Lifted objects and cells of idx, their designated pushes, identities, and designated cartesian cells."""
    cleavage = cleavage or Cleavage()
    objects = [lift_obj(v) for v in idx.bases]
    one_cells = [lift_one_cell(F) for F in idx.functors]
    for F in idx.functors:
        psi = cleavage.psi(F, lift_obj(F.source))
        one_cells.append(psi)
        if psi.target not in objects:
            objects.append(psi.target)
    one_cells.extend(groth_identity(A) for A in objects)
    two_cells = [lift_cell(t) for t in idx.nats]
    two_cells.extend(groth_identity_cell(f) for f in one_cells)
    for t in idx.nats:
        for g in one_cells:
            if g.down == t.target:
                two_cells.append(cleavage.phi(t, g))
    logger.debug("probe over %s: %d objects, %d 1-cells, %d 2-cells", idx.name, len(objects), len(one_cells), len(two_cells))
    return Probe(objects, one_cells, two_cells)


def _extension_problems(f: Groth1Cell, idx: BaseIndex, probe: Probe, limit: int):
    n = 0
    for alpha in probe.two_cells:
        if alpha.source.source != f.source:
            continue
        for beta in idx.cells():
            if beta.source.source != f.target.base or beta.source.target != alpha.source.target.base:
                continue
            pulled = whisker_right_monoidal(beta, f.down)
            if pulled.source != alpha.down.source or pulled.target != alpha.down.target:
                continue
            if pulled.components != alpha.down.components:
                continue
            yield alpha, beta
            n += 1
            if n >= limit:
                return


def _lifting_problems(phi: Groth2Cell, idx: BaseIndex, probe: Probe, limit: int):
    n = 0
    g = phi.target
    gammas = [c for c in probe.two_cells if c.target == g]
    for gamma in gammas:
        for kappa in idx.cells():
            if kappa.source != gamma.source.down or kappa.target != phi.source.down:
                continue
            if vcomp_monoidal(phi.down, kappa).components != gamma.down.components:
                continue
            yield gamma, kappa
            n += 1
            if n >= limit:
                return


# ── Split op-2-fibration ──────────────────────────────────────────────────────

def check_split_op2fibration(idx: BaseIndex, probe: Probe | None = None, cleavage: Cleavage | None = None,
                             probe_bound: int | None = None) -> LawReport:
    """Lifts, their universality on the probe, and the splitting clauses."""
    cleavage = cleavage or Cleavage()
    probe = probe or build_probe(idx, cleavage)
    limit = probe_bound or config.probe_bound()
    report = LawReport()

    # designated cocartesian 1-cells
    for A in probe.objects:
        ident = identity_monoidal(A.base)
        if cleavage.psi(ident, A) != groth_identity(A):
            report.fail("split.psi_identity", A.name)
        for k in idx.functors:
            if k.source != A.base:
                continue
            psi = cleavage.psi(k, A)
            if psi.down != k or psi.source != A:
                report.fail("split.psi_over", k.name, A.name)
                continue
            for l in idx.functors:
                if l.source != k.target:
                    continue
                lk = compose_monoidal(l, k)
                if groth_compose(cleavage.psi(l, psi.target), psi) != cleavage.psi(lk, A):
                    report.fail("split.psi_composition", l.name, k.name, A.name)
            for alpha, beta in _extension_problems(psi, idx, probe, limit):
                found = solve_extension_problem(psi, alpha, beta)
                if not found.unique:
                    report.fail("cocartesian.unique", psi.name, alpha.name, beta.name,
                                detail=f"{len(found.solutions)} solutions")

    # designated cartesian 2-cells
    for g in probe.one_cells:
        ident = cleavage.phi(identity_monoidal_nat(g.down), g)
        if not cells_agree(ident, groth_identity_cell(g)) or ident.source != g:
            report.fail("split.phi_identity", g.name)
        for kappa in idx.cells():
            if kappa.target != g.down:
                continue
            phi = cleavage.phi(kappa, g)
            if phi.down.components != kappa.components or phi.target != g:
                report.fail("split.phi_over", kappa.name, g.name)
                continue
            for lam in idx.cells():
                if lam.target != kappa.source:
                    continue
                chained = groth_vcomp(phi, cleavage.phi(lam, phi.source))
                direct = cleavage.phi(vcomp_monoidal(kappa, lam), g)
                if not cells_agree(chained, direct) or chained.source != direct.source:
                    report.fail("split.phi_vcomp", kappa.name, lam.name, g.name)
            for h in probe.one_cells:
                if h.source != g.target:
                    continue
                got = groth_whisker_left(h, phi)
                want = cleavage.phi(whisker_left_monoidal(h.down, kappa), groth_compose(h, g))
                if not cells_agree(got, want) or got.source != want.source:
                    report.fail("split.phi_whisker_left", h.name, kappa.name, g.name)
            for u in probe.one_cells:
                if u.target != g.source:
                    continue
                got = groth_whisker_right(phi, u)
                want = cleavage.phi(whisker_right_monoidal(kappa, u.down), groth_compose(g, u))
                if not cells_agree(got, want) or got.source != want.source:
                    report.fail("split.phi_whisker_right", kappa.name, g.name, u.name)
            for gamma, lam in _lifting_problems(phi, idx, probe, limit):
                found = solve_lifting_problem(phi, gamma, lam)
                if not found.unique:
                    report.fail("cartesian.unique", phi.name, gamma.name, lam.name,
                                detail=f"{len(found.solutions)} solutions")
    if not report.ok:
        logger.warning("split op-2-fibration check over %s: %d violations", idx.name, len(report.violations))
    return report


# ── Lax slice over A to lax slice in the fibre ────────────────────────────────

class LaxSliceToFibre:
    """∫⫽A → eSMCCAT_{A↓}⫽A↑, by its explicit formulas and by the universal route."""

    def __init__(self, A: GrothObj, cleavage: Cleavage | None = None):
        self.A = A
        self.cleavage = cleavage or Cleavage()
        self.source_context = LaxSliceContext(GrothContext(), A)
        self.target_context = LaxSliceContext(FibreContext(A.base), A.fibre)

    # explicit
    def obj(self, x: SliceObj) -> SliceObj:
        f = x.arrow
        return SliceObj(push_monvcat(f.down, x.obj.fibre), f.up, name=f"{f.down.name}_*{x.obj.name}")

    def _leg(self, c: Slice1Cell) -> MonVFunctor:
        """g↓_*(s↑)∘β↓_*B↑."""
        g, s, beta = c.target.arrow, c.s, c.sigma
        return compose_monv(push_monvfunctor(g.down, s.up), push_nat_family_mon(beta.down, c.source.obj.fibre))

    def one_cell(self, c: Slice1Cell) -> Slice1Cell:
        leg = self._leg(c)
        f, g = c.source.arrow, c.target.arrow
        sigma = MonVNatTrans(f.up, compose_monv(g.up, leg), dict(c.sigma.up.components), name=f"{c.sigma.name}↑")
        return Slice1Cell(self.obj(c.source), self.obj(c.target), leg, sigma, name=f"{c.name}↑")

    def two_cell(self, a: Slice2Cell) -> Slice2Cell:
        g = a.source.target.arrow
        src, tgt = self.one_cell(a.source), self.one_cell(a.target)
        comps = push_monvnat(g.down, a.alpha.up).components
        return Slice2Cell(src, tgt, MonVNatTrans(src.s, tgt.s, dict(comps), name=f"{a.name}↑"), name=f"{a.name}↑")

    # universal
    def _unit_over(self) -> MonoidalNatTrans:
        return identity_monoidal_nat(identity_monoidal(self.A.base))

    def _descend(self, x: SliceObj, theta: Groth2Cell) -> Groth2Cell:
        """The unique solution of the extension problem along ψ(f↓,B) for theta."""
        psi = self.cleavage.psi(x.arrow.down, x.obj)
        return solve_extension_problem(psi, theta, self._unit_over()).solution

    def via_universal_obj(self, x: SliceObj) -> SliceObj:
        f = x.arrow
        sol = self._descend(x, groth_identity_cell(f))
        f2 = sol.source
        return SliceObj(f2.source.fibre, f2.up, name=f"{f.down.name}_*{x.obj.name}")

    def via_universal_one_cell(self, c: Slice1Cell) -> Slice1Cell:
        f, g = c.source.arrow, c.target.arrow
        beta = c.sigma
        psi_c = self.cleavage.psi(g.down, c.target.obj)
        phi = self.cleavage.phi(beta.down, groth_compose(psi_c, c.s))
        w = phi.source
        u = self._descend(c.source, groth_identity_cell(w)).source
        lifted = solve_lifting_problem(
            self.cleavage.phi(beta.down, groth_compose(g, c.s)), beta, identity_monoidal_nat(f.down)
        ).solution
        sigma = MonVNatTrans(f.up, compose_monv(g.up, u.up), dict(lifted.up.components), name=f"{beta.name}↑")
        return Slice1Cell(self.via_universal_obj(c.source), self.via_universal_obj(c.target), u.up, sigma,
                          name=f"{c.name}↑")

    def via_universal_two_cell(self, a: Slice2Cell) -> Slice2Cell:
        s_cell, t_cell = a.source, a.target
        B = s_cell.source
        g = s_cell.target.arrow
        psi_c = self.cleavage.psi(g.down, s_cell.target.obj)
        phi_s = self.cleavage.phi(s_cell.sigma.down, groth_compose(psi_c, s_cell.s))
        phi_t = self.cleavage.phi(t_cell.sigma.down, groth_compose(psi_c, t_cell.s))
        pasted = groth_vcomp(groth_whisker_left(psi_c, a.alpha), phi_s)
        theta = solve_lifting_problem(phi_t, pasted, identity_monoidal_nat(B.arrow.down)).solution
        zeta = self._descend(B, theta)
        src, tgt = self.via_universal_one_cell(s_cell), self.via_universal_one_cell(t_cell)
        return Slice2Cell(src, tgt, MonVNatTrans(src.s, tgt.s, dict(zeta.up.components), name=f"{a.name}↑"),
                          name=f"{a.name}↑")

    def check(self, objects: list[SliceObj], one_cells: list[Slice1Cell], two_cells: list[Slice2Cell]) -> LawReport:
        """Explicit against universal images, and the 2-functor laws, on the given slice cells."""
        return _check_slice_functor(
            "laxslice", self.source_context, self.target_context,
            (self.obj, self.one_cell, self.two_cell),
            (self.via_universal_obj, self.via_universal_one_cell, self.via_universal_two_cell),
            objects, one_cells, two_cells,
        )


def _check_slice_functor(prefix, src_ctx, tgt_ctx, explicit, other, objects, one_cells, two_cells) -> LawReport:
    report = LawReport()
    obj, one, two = explicit
    o_obj, o_one, o_two = other
    for x in objects:
        if obj(x) != o_obj(x):
            report.fail(f"{prefix}.agree_obj", x.name)
        if not tgt_ctx.one_cell_equal(one(src_ctx.identity(x)), tgt_ctx.identity(obj(x))):
            report.fail(f"{prefix}.identity", x.name)
    for c in one_cells:
        if not tgt_ctx.one_cell_equal(one(c), o_one(c)):
            report.fail(f"{prefix}.agree_1cell", c.name)
        if not tgt_ctx.cell_equal(two(src_ctx.identity_cell(c)), tgt_ctx.identity_cell(one(c))):
            report.fail(f"{prefix}.identity_cell", c.name)
        for d in one_cells:
            if d.source != c.target:
                continue
            if not tgt_ctx.one_cell_equal(one(src_ctx.compose(d, c)), tgt_ctx.compose(one(d), one(c))):
                report.fail(f"{prefix}.composition", d.name, c.name)
    for a in two_cells:
        if not tgt_ctx.cell_equal(two(a), o_two(a)):
            report.fail(f"{prefix}.agree_2cell", a.name)
        for b in two_cells:
            if b.source == a.target and b.source.s == a.target.s:
                if not tgt_ctx.cell_equal(two(src_ctx.vcomp(b, a)), tgt_ctx.vcomp(two(b), two(a))):
                    report.fail(f"{prefix}.vcomp", b.name, a.name)
        for c in one_cells:
            if c.source == a.source.target:
                got = two(src_ctx.whisker_left(c, a))
                if not tgt_ctx.cell_equal(got, tgt_ctx.whisker_left(one(c), two(a))):
                    report.fail(f"{prefix}.whisker_left", c.name, a.name)
            if c.target == a.source.source:
                got = two(src_ctx.whisker_right(a, c))
                if not tgt_ctx.cell_equal(got, tgt_ctx.whisker_right(two(a), one(c))):
                    report.fail(f"{prefix}.whisker_right", a.name, c.name)
    return report


# ── Enr_V ─────────────────────────────────────────────────────────────────────

class EnrV:
    """SMCCAT⫽V → eSMCCAT_V⫽underline(V): G ↦ G̀ on G_*underline(M)."""

    def __init__(self, v: Smcc):
        self.v = v
        self.source_context = LaxSliceContext(SmccatContext(), v)
        self.target_context = LaxSliceContext(FibreContext(v), autoenrich(v))
        self.fibre_functor = LaxSliceToFibre(lift_obj(v))

    def obj(self, x: SliceObj) -> SliceObj:
        G = x.arrow
        return SliceObj(push_monvcat(G, autoenrich(G.source)), grave(G), name=f"{G.name}_*u{G.source.name}")

    def _leg(self, c: Slice1Cell) -> MonVFunctor:
        """H_*(S̀)∘β_*underline(M)."""
        H, S, beta = c.target.arrow, c.s, c.sigma
        return compose_monv(push_monvfunctor(H, grave(S)), push_nat_family_mon(beta, autoenrich(S.source)))

    def one_cell(self, c: Slice1Cell) -> Slice1Cell:
        leg = self._leg(c)
        G, H = c.source.arrow, c.target.arrow
        sigma = MonVNatTrans(grave(G), compose_monv(grave(H), leg), grave_nat(c.sigma).components,
                             name=f"{c.sigma.name}̆")
        return Slice1Cell(self.obj(c.source), self.obj(c.target), leg, sigma, name=f"Enr({c.name})")

    def two_cell(self, a: Slice2Cell) -> Slice2Cell:
        """H_*(ᾰ)∘β_*underline(M)."""
        H = a.source.target.arrow
        src, tgt = self.one_cell(a.source), self.one_cell(a.target)
        comps = push_monvnat(H, grave_nat(a.alpha)).components
        return Slice2Cell(src, tgt, MonVNatTrans(src.s, tgt.s, dict(comps), name=f"Enr({a.name})"),
                          name=f"Enr({a.name})")

    # through ∫: lift the slice cell, then take it to the fibre
    def lift_slice_obj(self, x: SliceObj) -> SliceObj:
        return SliceObj(lift_obj(x.obj), lift_one_cell(x.arrow), name=x.name)

    def lift_slice_one_cell(self, c: Slice1Cell) -> Slice1Cell:
        return Slice1Cell(self.lift_slice_obj(c.source), self.lift_slice_obj(c.target),
                          lift_one_cell(c.s), lift_cell(c.sigma), name=c.name)

    def lift_slice_two_cell(self, a: Slice2Cell) -> Slice2Cell:
        return Slice2Cell(self.lift_slice_one_cell(a.source), self.lift_slice_one_cell(a.target),
                          lift_cell(a.alpha), name=a.name)

    def via_groth_obj(self, x: SliceObj) -> SliceObj:
        return self.fibre_functor.obj(self.lift_slice_obj(x))

    def via_groth_one_cell(self, c: Slice1Cell) -> Slice1Cell:
        return self.fibre_functor.one_cell(self.lift_slice_one_cell(c))

    def via_groth_two_cell(self, a: Slice2Cell) -> Slice2Cell:
        return self.fibre_functor.two_cell(self.lift_slice_two_cell(a))

    def check(self, objects: list[SliceObj], one_cells: list[Slice1Cell], two_cells: list[Slice2Cell]) -> LawReport:
        return _check_slice_functor(
            "enr_v", self.source_context, self.target_context,
            (self.obj, self.one_cell, self.two_cell),
            (self.via_groth_obj, self.via_groth_one_cell, self.via_groth_two_cell),
            objects, one_cells, two_cells,
        )


def enr_v(v: Smcc, cell):
    """Image of an object, 1-cell or 2-cell of SMCCAT⫽v."""
    e = EnrV(v)
    if isinstance(cell, SliceObj):
        return e.obj(cell)
    if isinstance(cell, Slice1Cell):
        return e.one_cell(cell)
    if isinstance(cell, Slice2Cell):
        return e.two_cell(cell)
    raise StructuralError(f"{type(cell).__name__} is not a cell of a lax slice")


# ── Slice probes ──────────────────────────────────────────────────────────────

def slice_probe(idx: BaseIndex, v: Smcc) -> tuple[list[SliceObj], list[Slice1Cell], list[Slice2Cell]]:
    """Objects (M,G) of SMCCAT⫽v from idx, with the triangles and 2-cells idx can fill."""
    ctx = LaxSliceContext(SmccatContext(), v)
    objects = [SliceObj(v, identity_monoidal(v), name=f"({v.name},1)")]
    objects.extend(SliceObj(G.source, G, name=f"({G.source.name},{G.name})") for G in idx.functors if G.target == v)
    cells = idx.cells()
    one_cells = []
    for x in objects:
        for y in objects:
            for S in idx.functors_between(x.obj, y.obj):
                hs = compose_monoidal(y.arrow, S)
                for beta in cells:
                    if beta.source == x.arrow and beta.target == hs:
                        one_cells.append(Slice1Cell(x, y, S, MonoidalNatTrans(x.arrow, hs, beta.components, beta.name),
                                                    name=f"({S.name},{beta.name})"))
    two_cells = []
    for c in one_cells:
        for d in one_cells:
            if c.source != d.source or c.target != d.target:
                continue
            for alpha in cells:
                if alpha.source != c.s or alpha.target != d.s:
                    continue
                a = Slice2Cell(c, d, alpha, name=alpha.name)
                if ctx.slice_condition_holds(a):
                    two_cells.append(a)
    logger.debug("slice probe over %s: %d objects, %d 1-cells, %d 2-cells", v.name, len(objects), len(one_cells), len(two_cells))
    return objects, one_cells, two_cells
