"""Symmetric monoidal closed bases, monoidal functors and monoidal transformations."""
import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from engine.errors import MonoidError, QuantaleError, StructuralError
from engine.smcc import (
    CommMonoidDesc,
    MonoidalNatTrans,
    QuantaleDesc,
    check_monoidal_functor,
    check_monoidal_nat,
    check_smcc,
    compose_monoidal,
    identity_monoidal,
    identity_monoidal_nat,
    monoid_to_smcc,
    quantale_to_smcc,
    thin_monoidal_functor,
    thin_monoidal_nat,
)

L3_ELEMENTS = ("0", "1/2", "1")


def _make_chain_quantale(name: str, tensor) -> QuantaleDesc:
    """Three-element chain 0 < 1/2 < 1 with unit 1 and the given tensor."""
    return QuantaleDesc(
        name, L3_ELEMENTS, (("0", "1/2"), ("1/2", "1")), "1",
        {(x, y): tensor(x, y) for x in L3_ELEMENTS for y in L3_ELEMENTS},
    )


def _lukasiewicz(x: str, y: str) -> str:
    level = {"0": 0, "1/2": 1, "1": 2}
    return L3_ELEMENTS[max(0, level[x] + level[y] - 2)]


def _leq(v, x: str, y: str) -> bool:
    return bool(v.hom(x, y))


# ── Builders ──────────────────────────────────────────────────────────────────

def test_bundled_bases_are_valid(bundle):
    for key in ("B2", "G3", "L3", "C2", "C3"):
        assert check_smcc(bundle.smccs[key]).ok, key


def test_godel_internal_hom(bundle):
    v = bundle.smccs["G3"]
    assert v.h("1", "1/2") == "1/2"
    assert v.h("1/2", "0") == "0"
    assert v.h("1/2", "1/2") == "1"


def test_lukasiewicz_internal_hom():
    v = quantale_to_smcc(_make_chain_quantale("L3", _lukasiewicz))
    assert v.h("1/2", "0") == "1/2"
    assert v.h("1", "1/2") == "1/2"
    assert v.is_thin


@given(st.sampled_from(L3_ELEMENTS), st.sampled_from(L3_ELEMENTS), st.sampled_from(L3_ELEMENTS))
def test_tensor_is_residuated(a, b, c):
    v = quantale_to_smcc(_make_chain_quantale("L3", _lukasiewicz))
    assert _leq(v, v.t(a, b), c) == _leq(v, b, v.h(a, c))


@given(st.sampled_from(L3_ELEMENTS), st.sampled_from(L3_ELEMENTS), st.sampled_from(L3_ELEMENTS))
def test_tensor_is_associative(a, b, c):
    v = quantale_to_smcc(_make_chain_quantale("L3", _lukasiewicz))
    assert v.t(v.t(a, b), c) == v.t(a, v.t(b, c))


def test_non_commutative_tensor_is_rejected():
    def lopsided(x: str, y: str) -> str:
        if (x, y) == ("0", "1/2"):
            return "1/2"
        return min(x, y, key=L3_ELEMENTS.index)

    with pytest.raises(QuantaleError) as exc:
        quantale_to_smcc(_make_chain_quantale("bad", lopsided))
    assert exc.value.witness == ("0", "1/2")


def test_non_lattice_is_rejected():
    q = QuantaleDesc("antichain", ("a", "b"), (), "a", {("a", "a"): "a", ("a", "b"): "b",
                                                         ("b", "a"): "b", ("b", "b"): "b"})
    with pytest.raises(QuantaleError, match="complete lattice"):
        quantale_to_smcc(q)


def test_cyclic_order_is_rejected():
    q = QuantaleDesc("cycle", ("0", "1"), (("0", "1"), ("1", "0")), "1", {})
    with pytest.raises(QuantaleError) as exc:
        quantale_to_smcc(q)
    assert exc.value.witness == ("0", "1")


def test_non_commutative_monoid_is_rejected():
    els = ("1", "a", "b")
    mult = {(x, y): (y if x == "1" else x) for x in els for y in els}
    with pytest.raises(MonoidError) as exc:
        monoid_to_smcc(CommMonoidDesc("left-zero", els, "1", mult))
    assert exc.value.witness == ("a", "b")


def test_monoid_base_is_one_object(bundle):
    v = bundle.smccs["C3"]
    assert v.objects == ("*",)
    assert v.t("*", "*") == "*"
    assert v.transpose("c", "*", "*") == "c"


# ── Closed structure ──────────────────────────────────────────────────────────

def test_transpose_round_trip(bundle):
    v = bundle.smccs["G3"]
    assert v.transpose("1/2<=1/2", "1/2", "1") == "1<=1"
    assert v.untranspose("1<=1", "1/2", "1/2") == "1/2<=1/2"


def test_name_of_morphism(bundle):
    v = bundle.smccs["G3"]
    n = v.name_of("0<=1/2")
    assert v.dom(n) == v.unit
    assert v.unname(n, "0", "1/2") == "0<=1/2"


def test_wrong_internal_hom_is_caught(bundle):
    v = bundle.smccs["B2"]
    broken = dataclasses.replace(v, ihom={**v.ihom, ("1", "0"): "1"})
    assert "closed.ev_shape" in check_smcc(broken).laws()


def test_wrong_symmetry_is_caught(bundle):
    v = bundle.smccs["C2"]
    broken = dataclasses.replace(v, sym={("*", "*"): "s"})
    assert "hexagon" in check_smcc(broken).laws()


# ── Monoidal functors ─────────────────────────────────────────────────────────

def test_bundled_functors_are_symmetric_monoidal(bundle):
    for key, F in bundle.functors.items():
        assert check_monoidal_functor(F, require_symmetric=True).ok, key


def test_strictness(bundle):
    assert bundle.functors["q"].strictness == "strict"
    assert bundle.functors["iota"].strictness == "lax"
    assert bundle.functors["inv"].strictness == "strict"


def test_thin_functor_must_be_monotone(bundle):
    with pytest.raises(StructuralError):
        thin_monoidal_functor(bundle.smccs["G3"], bundle.smccs["B2"], {"0": "1", "1/2": "0", "1": "1"}, "bad")


def test_thin_functor_must_be_lax(bundle):
    with pytest.raises(StructuralError):
        thin_monoidal_functor(bundle.smccs["L3"], bundle.smccs["G3"], {x: x for x in L3_ELEMENTS}, "bad")


def test_q_after_r_is_the_identity(bundle):
    assert compose_monoidal(bundle.functors["q"], bundle.functors["r"]) == identity_monoidal(bundle.smccs["B2"])


def test_wrong_multiplication_cell_is_caught(bundle):
    inv = bundle.functors["inv"]
    broken = dataclasses.replace(inv, m={("*", "*"): "c"})
    assert "monoidal.left_unit" in check_monoidal_functor(broken).laws()


# ── Monoidal transformations ──────────────────────────────────────────────────

def test_unit_of_r_q_is_monoidal(bundle):
    assert check_monoidal_nat(bundle.nats["eta"]).ok
    assert check_monoidal_nat(bundle.nats["eps"]).ok


def test_thin_nat_needs_pointwise_order(bundle):
    with pytest.raises(StructuralError):
        thin_monoidal_nat(bundle.functors["id_G3"], bundle.functors["rq"], "backwards")


def test_identity_monoidal_nat_is_valid(bundle):
    assert check_monoidal_nat(identity_monoidal_nat(bundle.functors["inv"])).ok


def test_non_unital_component_is_caught(bundle):
    one = identity_monoidal(bundle.smccs["C3"])
    assert "monoidal_nat.unit" in check_monoidal_nat(MonoidalNatTrans(one, one, {"*": "c"}, name="c")).laws()
