"""Change of base, canonical normalizations and normality."""
import pytest

from engine.autoenrich import autoenrich, grave
from engine.chbase import (
    canonical_normalization,
    check_kg_triangle,
    comparison_KG,
    enumerate_monoidal_vnats,
    is_normal,
    kappa,
    normality_witness,
    push_monvcat,
    push_vcat,
    push_vfunctor,
    push_vnat,
    unit_normalization_iso,
)
from engine.enriched import (
    check_monvfunctor,
    check_monvnat,
    check_symmonclosed,
    check_vcat,
    check_vfunctor,
    identity_monv,
    identity_vfunctor,
    identity_vnat,
)
from engine.errors import EnumerationGuardError, StructuralError


# ── Pushforward ───────────────────────────────────────────────────────────────

def test_push_metric_along_q(bundle):
    pushed = push_vcat(bundle.functors["q"], bundle.vcats["metric"])
    assert pushed == bundle.vcats["q_metric"]
    assert pushed.base == bundle.smccs["B2"]
    assert pushed.hom[("a", "b")] == "0"
    assert check_vcat(pushed).ok


def test_push_needs_matching_base(bundle):
    with pytest.raises(StructuralError):
        push_vcat(bundle.functors["r"], bundle.vcats["metric"])


def test_push_identity_functor(bundle):
    pushed = push_vfunctor(bundle.functors["q"], identity_vfunctor(bundle.vcats["metric"]))
    assert check_vfunctor(pushed).ok


def test_pushed_autoenrichment_is_symmetric_monoidal_closed(bundle):
    pushed = push_monvcat(bundle.functors["r"], autoenrich(bundle.smccs["B2"]))
    assert pushed == bundle.monvcats["r_uB2"]
    assert check_symmonclosed(pushed).ok


# ── Canonical normalization ───────────────────────────────────────────────────

def test_normalization_is_monoidal(bundle):
    U = canonical_normalization(bundle.monvcats["uG3"]).U
    assert check_monvfunctor(U).ok
    assert U.obj("1/2") == "1/2"


def test_kappa_is_the_only_transformation(bundle):
    G = grave(bundle.functors["q"])
    found = enumerate_monoidal_vnats(canonical_normalization(G.source).U, G)
    assert found == [kappa(G)]


def test_group_normalization_has_only_the_identity(bundle):
    U = canonical_normalization(bundle.monvcats["uC3"]).U
    assert len(enumerate_monoidal_vnats(U, U)) == 1


def test_enumeration_respects_candidate_bound(bundle, monkeypatch):
    monkeypatch.setenv("BASECHANGE_MAX_CANDIDATES", "2")
    U = canonical_normalization(bundle.monvcats["uC3"]).U
    with pytest.raises(EnumerationGuardError) as exc:
        enumerate_monoidal_vnats(U, U)
    assert exc.value.size == 3


def test_kappa_needs_the_autoenrichment(bundle):
    with pytest.raises(StructuralError):
        kappa(identity_monv(bundle.monvcats["r_uB2"]))


# ── Normality ─────────────────────────────────────────────────────────────────

def test_q_is_normal(bundle):
    q = bundle.functors["q"]
    assert is_normal(q)
    assert normality_witness(q) == ()
    assert comparison_KG(q).is_isomorphism


def test_constant_functor_is_not_normal(bundle):
    t = bundle.functors["t"]
    assert not is_normal(t)
    assert normality_witness(t) == ("0",)
    assert not comparison_KG(t).is_isomorphism


def test_normality_is_undefined_for_other_values():
    with pytest.raises(TypeError):
        is_normal("q")


def test_comparison_triangle(bundle):
    for key in ("q", "r", "t", "iota"):
        assert check_kg_triangle(bundle.functors[key]).ok, key


def test_push_vnat_preserves_identities(bundle):
    q, metric = bundle.functors["q"], bundle.vcats["metric"]
    pushed = push_vnat(q, identity_vnat(identity_vfunctor(metric)))
    assert pushed == identity_vnat(identity_vfunctor(push_vcat(q, metric)))


@pytest.mark.parametrize("base", ["G3", "C3"])
def test_unit_normalization_iso(bundle, base):
    v = bundle.smccs[base]
    xi = unit_normalization_iso(v)
    assert set(xi.components) == set(v.objects)
    assert check_monvnat(xi).ok
