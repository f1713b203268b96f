"""2-category contexts: SMCCAT, the fibres and lax slices."""
import pytest

from engine.autoenrich import autoenrich, grave
from engine.enriched import identity_monv
from engine.errors import StructuralError
from engine.groth import GrothContext
from engine.smcc import identity_monoidal
from engine.twocat import FibreContext, LaxSliceContext, SliceObj, SmccatContext


def _make_apex_object(v) -> SliceObj:
    return SliceObj(v, identity_monoidal(v), name=f"({v.name},1)")


# ── SMCCAT ────────────────────────────────────────────────────────────────────

def test_smccat_composition(bundle):
    ctx = SmccatContext()
    q, r = bundle.functors["q"], bundle.functors["r"]
    assert ctx.compose(q, r) == ctx.identity(bundle.smccs["B2"])
    assert ctx.source(q) == bundle.smccs["G3"]


def test_smccat_identity_cells(bundle):
    ctx = SmccatContext()
    eta = bundle.nats["eta"]
    one = ctx.identity_cell(eta.source)
    assert ctx.cell_equal(ctx.vcomp(eta, one), eta)


def test_smccat_rejects_foreign_cells(bundle):
    with pytest.raises(StructuralError):
        SmccatContext().compose(grave(bundle.functors["q"]), bundle.functors["r"])


def test_groth_context_rejects_smccat_cells(bundle):
    with pytest.raises(StructuralError):
        GrothContext().compose(bundle.functors["q"], bundle.functors["r"])


# ── Fibres ────────────────────────────────────────────────────────────────────

def test_fibre_accepts_its_own_base(bundle):
    ctx = FibreContext(bundle.smccs["B2"])
    G = grave(bundle.functors["q"])
    assert ctx.compose(ctx.identity(G.target), G) == G


def test_fibre_rejects_other_bases(bundle):
    ctx = FibreContext(bundle.smccs["B2"])
    with pytest.raises(StructuralError):
        ctx.identity_cell(identity_monv(autoenrich(bundle.smccs["G3"])))


# ── Lax slices ────────────────────────────────────────────────────────────────

def test_slice_identity_satisfies_the_slice_condition(bundle):
    v = bundle.smccs["G3"]
    ctx = LaxSliceContext(SmccatContext(), v)
    one = ctx.identity(_make_apex_object(v))
    assert ctx.one_cell_equal(ctx.compose(one, one), one)
    assert ctx.slice_condition_holds(ctx.identity_cell(one))


def test_slice_rejects_cells_over_another_apex(bundle):
    ctx = LaxSliceContext(SmccatContext(), bundle.smccs["G3"])
    other = LaxSliceContext(SmccatContext(), bundle.smccs["B2"]).identity(_make_apex_object(bundle.smccs["B2"]))
    with pytest.raises(StructuralError):
        ctx.identity_cell(other)
