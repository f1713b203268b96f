"""Adjunctions in SMCCAT, their lax slice form and their enrichment."""
import dataclasses

import pytest

from engine.adjoint import (
    Adjunction,
    check_adjunction,
    check_enrichment_route,
    enrich_adjunction,
    laxslice_adjunction,
    reconstruct_left_adjoint,
)
from engine.errors import NotNormalError, StructuralError
from engine.twocat import FibreContext


def test_bundled_adjunction(bundle):
    assert check_adjunction(bundle.adjunctions["r_q"]).ok


def test_corrupted_counit_is_caught(bundle):
    a = bundle.adjunctions["r_q"]
    eps = dataclasses.replace(a.counit, components={**a.counit.components, "1/2": "1/2<=1/2"})
    report = check_adjunction(dataclasses.replace(a, counit=eps))
    assert "adjunction.counit" in report.laws()


def test_laxslice_adjunction(bundle):
    assert check_adjunction(laxslice_adjunction(bundle.adjunctions["r_q"])).ok


def test_enriched_adjunction(bundle):
    e = enrich_adjunction(bundle.adjunctions["r_q"])
    assert e.report.ok
    assert e.adjunction.right.name.startswith("q")


def test_enrichment_route(bundle):
    assert check_enrichment_route(bundle.adjunctions["r_q"]).ok


def test_enrichment_needs_a_normal_right_adjoint(bundle):
    a = bundle.adjunctions["r_q"]
    fake = dataclasses.replace(a, right=bundle.functors["t"])
    with pytest.raises(NotNormalError) as exc:
        enrich_adjunction(fake)
    assert exc.value.witness == ("0",)
    assert "enriched.normal" in exc.value.report.laws()


def test_enrichment_needs_smccat(bundle):
    a = bundle.adjunctions["r_q"]
    with pytest.raises(StructuralError):
        enrich_adjunction(Adjunction(FibreContext(bundle.smccs["B2"]), a.left, a.right, a.unit, a.counit))


def test_left_adjoint_is_determined_by_the_unit(bundle):
    a = bundle.adjunctions["r_q"]
    rebuilt = reconstruct_left_adjoint(a.right, dict(a.left.functor.omap), dict(a.unit.components))
    assert rebuilt == a.left


def test_left_adjoint_needs_a_universal_unit(bundle):
    a = bundle.adjunctions["r_q"]
    with pytest.raises(StructuralError):
        reconstruct_left_adjoint(a.right, {"0": "1", "1": "1"}, dict(a.unit.components))
