"""Autoenrichment, G̀, reconstruction and the fundamental lemma."""
import dataclasses

import pytest

from engine.autoenrich import (
    autoenrich,
    check_autoenrichment_2functor,
    check_fundamental_lemma,
    check_superposed,
    grave,
    grave_nat,
    reconstruct_iso,
    trivial_superposition,
)
from engine.chbase import push_monvcat
from engine.enriched import (
    check_monvfunctor,
    check_monvnat,
    check_symmonclosed,
    identity_monv,
    smcc_of,
    underlying_monoidal_functor,
    underlying_smcc,
)
from engine.errors import LawViolationError
from engine.smcc import check_smcc, compose_monoidal, identity_monoidal


# ── underline(V) ──────────────────────────────────────────────────────────────

@pytest.mark.parametrize("key", ["B2", "G3", "C3"])
def test_autoenrichment_is_symmetric_monoidal_closed(bundle, key):
    assert check_symmonclosed(autoenrich(bundle.smccs[key])).ok


def test_autoenrichment_homs_are_internal_homs(bundle):
    v = bundle.smccs["G3"]
    M = autoenrich(v)
    assert M.objects == v.objects
    assert M.m.hom[("1", "1/2")] == v.h("1", "1/2")
    assert smcc_of(M) is v


def test_push_along_identity_keeps_the_underlying_smcc(bundle):
    v = bundle.smccs["B2"]
    uv = autoenrich(v)
    pushed = push_monvcat(identity_monoidal(v), uv)
    assert pushed == uv
    assert pushed.m.underlying.cat == uv.m.underlying.cat
    assert smcc_of(pushed) is v


def test_underlying_of_composite_matches_identity(bundle):
    r, q = bundle.functors["r"], bundle.functors["q"]
    uv = autoenrich(bundle.smccs["B2"])
    composite = underlying_monoidal_functor(grave(compose_monoidal(q, r)))
    assert composite.source == underlying_monoidal_functor(identity_monv(uv)).source


def test_autoenrichment_is_cached(bundle):
    v = bundle.smccs["L3"]
    assert autoenrich(v) is autoenrich(v)


def test_underlying_of_autoenrichment_is_the_base(bundle):
    v = bundle.smccs["G3"]
    u = underlying_smcc(autoenrich(v))
    assert check_smcc(u).ok
    assert u.cat == v.cat


# ── G̀ and ᾰ ───────────────────────────────────────────────────────────────────

def test_grave_is_symmetric_monoidal(bundle):
    for key in ("q", "r", "inv"):
        assert check_monvfunctor(grave(bundle.functors[key]), require_symmetric=True).ok, key


def test_grave_of_identity(bundle):
    v = bundle.smccs["B2"]
    assert grave(identity_monoidal(v)) == identity_monv(autoenrich(v))


def test_grave_nat_is_monoidal(bundle):
    assert check_monvnat(grave_nat(bundle.nats["eta"])).ok


def test_autoenrichment_is_two_functorial(bundle):
    assert check_autoenrichment_2functor(bundle.base_indexes["index"]).ok


# ── Reconstruction ────────────────────────────────────────────────────────────

def test_trivial_superposition(bundle):
    assert check_superposed(trivial_superposition(bundle.vcats["metric"])).ok


@pytest.mark.parametrize("key", ["uG3", "uC3", "r_uB2"])
def test_reconstruction(bundle, key):
    M = bundle.monvcats[key]
    rec = reconstruct_iso(M)
    assert rec.report.ok
    assert rec.inclusion.functor.omap == {x: x for x in M.objects}
    assert rec.inverse.source == rec.inclusion.target


def test_reconstruction_rejects_invalid_input(bundle):
    broken = dataclasses.replace(bundle.monvcats["uC2"], unit_obj="nowhere")
    with pytest.raises(LawViolationError) as exc:
        reconstruct_iso(broken)
    assert exc.value.report.structural


# ── Fundamental lemma ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("key", ["q", "inv"])
def test_fundamental_lemma(bundle, key):
    G = grave(bundle.functors[key])
    assert check_fundamental_lemma(G).ok
    assert check_fundamental_lemma(G, monoidal=True).ok
