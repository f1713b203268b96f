"""V-categories, V-functors, V-natural transformations and monoidal V-functors."""
import pytest

from engine.autoenrich import autoenrich
from engine.enriched import (
    VCat,
    VFunctor,
    VNatTrans,
    check_monvfunctor,
    check_monvnat,
    check_vcat,
    check_vfunctor,
    check_vnat,
    compose_vfunctors,
    hom_vfunctor,
    identity_monv,
    identity_monvnat,
    identity_vfunctor,
    identity_vnat,
    left_unitor_vfunctor,
    opposite_vcat,
    tensor_vcat,
    unit_vcat,
    whisker_left_vnat,
    whisker_right_vnat,
)
from engine.errors import StructuralError


def _make_constant(a: VCat, target: str) -> VFunctor:
    """Everything to one object; hom maps are the unique arrows into hom(target, target) = 1."""
    return VFunctor(
        a, a, {x: target for x in a.objects},
        {(x, y): f"{a.hom[(x, y)]}<=1" for x in a.objects for y in a.objects},
        name=f"const_{target}",
    )


# ── V-categories ──────────────────────────────────────────────────────────────

def test_bundled_metric_space_is_valid(bundle):
    assert check_vcat(bundle.vcats["metric"]).ok


def test_underlying_category_keeps_only_named_arrows(bundle):
    u = bundle.vcats["metric"].underlying
    assert set(u.cat.objects) == {"a", "b"}
    assert len(u.cat.morphisms) == 2
    assert u.id_of[("a", "a", "1<=1")] == u.cat.identity["a"]


def test_unit_opposite_and_tensor_are_valid(bundle):
    metric = bundle.vcats["metric"]
    assert check_vcat(unit_vcat(metric.base)).ok
    assert check_vcat(opposite_vcat(metric)).ok
    assert opposite_vcat(metric).hom[("a", "b")] == "0"
    square = tensor_vcat(metric, metric)
    assert len(square.objects) == 4
    assert square.hom[("(a,a)", "(b,b)")] == "1/2"
    assert check_vcat(square).ok


def test_tensor_needs_a_common_base(bundle):
    with pytest.raises(StructuralError):
        tensor_vcat(bundle.vcats["metric"], unit_vcat(bundle.smccs["B2"]))


def test_wrong_composition_over_a_group_is_caught(bundle):
    c2 = bundle.smccs["C2"]
    broken = VCat(c2, ("x",), {("x", "x"): "*"}, {("x", "x", "x"): "s"}, {"x": "1"}, name="twisted")
    assert "vcat.left_unit" in check_vcat(broken).laws()


def test_missing_hom_object_is_structural(bundle):
    metric = bundle.vcats["metric"]
    broken = VCat(metric.base, metric.objects, {**metric.hom, ("a", "b"): "2"}, metric.comp, metric.unit)
    report = check_vcat(broken)
    assert report.structural
    assert not report.violations


# ── V-functors and V-natural transformations ─────────────────────────────────

def test_identity_and_constant_functors(bundle):
    metric = bundle.vcats["metric"]
    assert check_vfunctor(identity_vfunctor(metric)).ok
    assert check_vfunctor(_make_constant(metric, "a")).ok


def test_swapping_points_is_not_a_vfunctor(bundle):
    metric = bundle.vcats["metric"]
    swap = VFunctor(
        metric, metric, {"a": "b", "b": "a"},
        {("a", "a"): "1<=1", ("a", "b"): "1/2<=1/2", ("b", "a"): "0<=0", ("b", "b"): "1<=1"},
        name="swap",
    )
    assert "vfunctor.shape" in check_vfunctor(swap).laws()


def test_hom_functor_is_a_vfunctor(bundle):
    assert check_vfunctor(hom_vfunctor(bundle.vcats["metric"])).ok


def test_identity_vnat_is_valid(bundle):
    assert check_vnat(identity_vnat(_make_constant(bundle.vcats["metric"], "b"))).ok


def test_component_must_be_a_name(bundle):
    one = identity_vfunctor(bundle.vcats["metric"])
    alpha = VNatTrans(one, one, {"a": "1<=1", "b": "0<=0"}, name="bad")
    assert "vnat.shape" in check_vnat(alpha).laws()


# ── Monoidal V-functors ───────────────────────────────────────────────────────

def test_identity_monoidal_vfunctor(bundle):
    M = autoenrich(bundle.smccs["B2"])
    S = identity_monv(M)
    assert check_monvfunctor(S, require_symmetric=True).ok
    assert S.is_symmetric
    assert check_monvnat(identity_monvnat(S)).ok


# ── Whiskering and unitors ────────────────────────────────────────────────────

def test_whiskering_identities(bundle):
    one = identity_vfunctor(bundle.vcats["metric"])
    unit = identity_vnat(one)
    twice = identity_vnat(compose_vfunctors(one, one))
    assert whisker_left_vnat(one, unit) == twice
    assert whisker_right_vnat(unit, one) == twice


def test_left_unitor_is_a_vfunctor(bundle):
    lam = left_unitor_vfunctor(bundle.vcats["metric"])
    assert check_vfunctor(lam).ok
    assert sorted(lam.omap.values()) == ["a", "b"]
