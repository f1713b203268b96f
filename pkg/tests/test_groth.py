"""The Grothendieck construction over a base index, its cleavage, and the slice functors."""
import dataclasses

import pytest

from engine.errors import PreconditionError, StructuralError
from engine.groth import (
    BaseIndex,
    Cleavage,
    EnrV,
    check_base_index,
    check_groth_1cell,
    check_groth_2cell,
    check_groth_obj,
    check_split_op2fibration,
    designated_cocartesian,
    enr_v,
    groth_compose,
    groth_identity_cell,
    lift_cell,
    lift_obj,
    lift_one_cell,
    slice_probe,
    solve_extension_problem,
    solve_lifting_problem,
)
from engine.smcc import compose_monoidal, identity_monoidal, identity_monoidal_nat


def _make_small_index(bundle) -> BaseIndex:
    """B2 and G3 with r between them."""
    return BaseIndex([bundle.smccs["B2"], bundle.smccs["G3"]], [bundle.functors["r"]], [], name="small")


class _SkewedCleavage(Cleavage):
    """Designated cartesian cells that forget their lower components."""

    def phi(self, kappa, g):
        cell = super().phi(kappa, g)
        return dataclasses.replace(cell, down=dataclasses.replace(cell.down, components={}))


# ── Cells ─────────────────────────────────────────────────────────────────────

def test_lifted_cells_are_valid(bundle):
    assert check_groth_obj(lift_obj(bundle.smccs["B2"])).ok
    assert check_groth_1cell(lift_one_cell(bundle.functors["q"])).ok
    assert check_groth_2cell(lift_cell(bundle.nats["eps"])).ok


def test_lift_composes_over_the_base(bundle):
    q, r = bundle.functors["q"], bundle.functors["r"]
    composite = groth_compose(lift_one_cell(q), lift_one_cell(r))
    assert composite.down == compose_monoidal(q, r)
    assert check_groth_1cell(composite).ok


def test_designated_cocartesian_pushes_the_fibre(bundle):
    psi = designated_cocartesian(bundle.functors["r"], lift_obj(bundle.smccs["B2"]))
    assert psi.target.fibre == bundle.monvcats["r_uB2"]
    assert psi.target.base == bundle.smccs["G3"]
    assert check_groth_1cell(psi).ok


def test_designated_cocartesian_needs_matching_base(bundle):
    with pytest.raises(StructuralError):
        designated_cocartesian(bundle.functors["q"], lift_obj(bundle.smccs["B2"]))


# ── Base index ────────────────────────────────────────────────────────────────

def test_bundled_index_is_valid(bundle):
    assert check_base_index(bundle.base_indexes["index"]).ok


def test_functor_outside_index_is_dangling(bundle):
    idx = BaseIndex([bundle.smccs["B2"]], [bundle.functors["r"]], [])
    assert "index.dangling" in check_base_index(idx).laws()


def test_index_generates_identities_and_composites(bundle):
    idx = bundle.base_indexes["index"]
    generated = idx.generated_functors()
    assert bundle.functors["rq"] in generated
    assert bundle.functors["id_G3"] in generated
    assert bundle.functors["qr"] in generated


def test_transformation_between_generated_functors(bundle):
    B2, G3 = bundle.smccs["B2"], bundle.smccs["G3"]
    r, q = bundle.functors["r"], bundle.functors["q"]
    eps = bundle.nats["eps"]
    assert check_base_index(BaseIndex([B2, G3], [r, q], [eps])).ok
    assert "index.dangling" in check_base_index(BaseIndex([B2, G3], [r], [eps])).laws()


# ── Split op-2-fibration ──────────────────────────────────────────────────────

def test_split_op2fibration(bundle):
    assert check_split_op2fibration(_make_small_index(bundle), probe_bound=8).ok


def test_skewed_cleavage_is_caught(bundle):
    report = check_split_op2fibration(_make_small_index(bundle), cleavage=_SkewedCleavage(), probe_bound=1)
    assert "split.phi_over" in report.laws()


# ── Slice functors ────────────────────────────────────────────────────────────

def test_slice_probe_starts_at_the_apex(bundle):
    objects, one_cells, _ = slice_probe(_make_small_index(bundle), bundle.smccs["G3"])
    assert [x.name for x in objects] == ["(G3,1)", "(B2,r)"]
    assert one_cells


def test_enr_v_agrees_with_the_route_through_groth(bundle):
    v = bundle.smccs["G3"]
    assert EnrV(v).check(*slice_probe(_make_small_index(bundle), v)).ok


def test_lax_slice_to_fibre(bundle):
    v = bundle.smccs["G3"]
    enr = EnrV(v)
    objects, one_cells, two_cells = slice_probe(_make_small_index(bundle), v)
    report = enr.fibre_functor.check(
        [enr.lift_slice_obj(x) for x in objects],
        [enr.lift_slice_one_cell(c) for c in one_cells],
        [enr.lift_slice_two_cell(a) for a in two_cells],
    )
    assert report.ok


def test_enr_v_rejects_non_slice_cells(bundle):
    with pytest.raises(StructuralError):
        enr_v(bundle.smccs["G3"], bundle.functors["q"])


# ── Extension and lifting problems ────────────────────────────────────────────

def _identity_extension(f, base):
    """α = 1_f and β = 1 on the identity of the target base."""
    return groth_identity_cell(f), identity_monoidal_nat(identity_monoidal(base))


def test_extension_along_designated_cell_is_unique(bundle):
    B2, G3 = bundle.smccs["B2"], bundle.smccs["G3"]
    psi = designated_cocartesian(bundle.functors["q"], lift_obj(G3))
    alpha, beta = _identity_extension(psi, B2)
    result = solve_extension_problem(psi, alpha, beta)
    assert result.unique
    assert result.solution.source.up.functor.omap == {x: x for x in psi.target.fibre.objects}


def test_extension_along_non_cocartesian_cell_is_ambiguous(bundle):
    # r misses 1/2, so an endofunctor of uG3 may send it to 1/2 or to 1.
    G3 = bundle.smccs["G3"]
    f = lift_one_cell(bundle.functors["r"])
    alpha, beta = _identity_extension(f, G3)
    result = solve_extension_problem(f, alpha, beta)
    assert len(result.solutions) >= 2
    with pytest.raises(StructuralError, match="exactly one solution"):
        result.solution


def test_extension_from_another_source_is_refused(bundle):
    G3 = bundle.smccs["G3"]
    f = lift_one_cell(bundle.functors["r"])
    elsewhere = groth_identity_cell(lift_one_cell(bundle.functors["q"]))
    _, beta = _identity_extension(f, G3)
    with pytest.raises(PreconditionError):
        solve_extension_problem(f, elsewhere, beta)


def test_lifting_into_another_target_is_refused(bundle):
    phi = groth_identity_cell(lift_one_cell(bundle.functors["r"]))
    gamma = groth_identity_cell(lift_one_cell(bundle.functors["q"]))
    with pytest.raises(PreconditionError):
        solve_lifting_problem(phi, gamma, identity_monoidal_nat(bundle.functors["q"]))
