"""Finite categories, functors and natural transformations."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from engine.errors import CompositionError, SizeGuardError, StructuralError
from engine.fincat import (
    FinCat,
    FinFunctor,
    FinNatTrans,
    check_category,
    check_functor,
    check_nat,
    compose_functors,
    identity_functor,
    identity_nat,
    inverse_functor,
    product_category,
    terminal_category,
)


def _make_arrow_category() -> FinCat:
    """0 → 1 with a single non-identity arrow f."""
    return FinCat(
        ("0", "1"),
        ("1_0", "1_1", "f"),
        {"1_0": "0", "1_1": "1", "f": "0"},
        {"1_0": "0", "1_1": "1", "f": "1"},
        {"0": "1_0", "1": "1_1"},
        {("1_0", "1_0"): "1_0", ("1_1", "1_1"): "1_1", ("f", "1_0"): "f", ("1_1", "f"): "f"},
        name="2",
    )


def _make_z3(bad: bool = False) -> FinCat:
    """Cyclic group of order three as a one-object category; bad=True corrupts b·b."""
    els = ("e", "a", "b")
    power = {"e": 0, "a": 1, "b": 2}
    comp = {(g, f): els[(power[g] + power[f]) % 3] for g in els for f in els}
    if bad:
        comp[("b", "b")] = "b"
    return FinCat(("*",), els, {x: "*" for x in els}, {x: "*" for x in els}, {"*": "e"}, comp, name="Z3")


# ── Categories ────────────────────────────────────────────────────────────────

def test_arrow_category_is_valid():
    assert check_category(_make_arrow_category()).ok


def test_terminal_category_is_valid():
    assert check_category(terminal_category()).ok


def test_compose_and_seq():
    c = _make_arrow_category()
    assert c.compose("f", "1_0") == "f"
    assert c.seq("1_0", "f", "1_1") == "f"


def test_compose_not_composable_names_both_morphisms():
    c = _make_arrow_category()
    with pytest.raises(CompositionError) as exc:
        c.compose("1_0", "f")
    assert exc.value.g == "1_0"
    assert exc.value.f == "f"


def test_compose_unknown_morphism():
    with pytest.raises(CompositionError):
        _make_arrow_category().compose("g", "f")


def test_missing_composition_entry_is_reported():
    c = _make_arrow_category()
    comp = dict(c.comp)
    del comp[("f", "1_0")]
    broken = FinCat(c.objects, c.morphisms, c.dom, c.cod, c.identity, comp, name="2'")
    laws = check_category(broken).laws()
    assert "category.comp_total" in laws
    assert "category.right_identity" in laws


def test_associativity_violation_is_reported():
    report = check_category(_make_z3(bad=True))
    assert "category.associativity" in report.laws()
    assert "category.left_identity" not in report.laws()


def test_unknown_object_in_dom_is_structural():
    c = _make_arrow_category()
    broken = FinCat(c.objects, c.morphisms, {**c.dom, "f": "9"}, c.cod, c.identity, c.comp)
    report = check_category(broken)
    assert report.structural
    assert not report.violations


def test_inverse_in_group():
    z = _make_z3()
    assert z.is_iso("a")
    assert z.inverse("a") == "b"


def test_arrow_is_not_invertible():
    c = _make_arrow_category()
    assert not c.is_iso("f")
    with pytest.raises(StructuralError):
        c.inverse("f")


def test_product_category():
    c = _make_arrow_category()
    p = product_category(c, c)
    assert len(p.objects) == 4
    assert len(p.morphisms) == 9
    assert check_category(p).ok


def test_product_category_respects_size_guard(monkeypatch):
    monkeypatch.setenv("BASECHANGE_MAX_CELLS", "5")
    c = _make_arrow_category()
    with pytest.raises(SizeGuardError) as exc:
        product_category(c, c)
    assert exc.value.size == 9
    assert exc.value.bound == 5


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_product_composition_is_associative(data):
    p = product_category(_make_arrow_category(), _make_z3())
    f = data.draw(st.sampled_from(p.morphisms))
    g = data.draw(st.sampled_from([m for m in p.morphisms if p.dom[m] == p.cod[f]]))
    h = data.draw(st.sampled_from([m for m in p.morphisms if p.dom[m] == p.cod[g]]))
    assert p.compose(h, p.compose(g, f)) == p.compose(p.compose(h, g), f)


# ── Functors ──────────────────────────────────────────────────────────────────

def _make_inversion() -> FinFunctor:
    z = _make_z3()
    return FinFunctor(z, z, {"*": "*"}, {"e": "e", "a": "b", "b": "a"}, name="inv")


def test_identity_functor_is_valid():
    assert check_functor(identity_functor(_make_arrow_category())).ok


def test_inversion_is_an_automorphism():
    inv = _make_inversion()
    assert check_functor(inv).ok
    assert inv.is_isomorphism
    assert compose_functors(inv, inv) == identity_functor(inv.source)
    assert inverse_functor(inv) == inv


def test_functor_composition_violation():
    z = _make_z3()
    F = FinFunctor(z, z, {"*": "*"}, {"e": "e", "a": "a", "b": "a"}, name="F")
    assert "functor.composition" in check_functor(F).laws()


def test_functor_call_rejects_foreign_ids():
    with pytest.raises(StructuralError):
        _make_inversion()("x")


def test_compose_functors_checks_boundaries():
    with pytest.raises(StructuralError):
        compose_functors(identity_functor(_make_arrow_category()), _make_inversion())


# ── Natural transformations ───────────────────────────────────────────────────

def test_identity_nat_is_valid():
    assert check_nat(identity_nat(_make_inversion())).ok


def test_group_element_is_natural_only_when_central():
    z = _make_z3()
    one = identity_functor(z)
    assert check_nat(FinNatTrans(one, one, {"*": "a"}, name="a")).ok
    inv = _make_inversion()
    assert "nat.naturality" in check_nat(FinNatTrans(one, inv, {"*": "e"}, name="e")).laws()
