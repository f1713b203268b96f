"""Instance files: parsing, canonical serialization, resolution and validation."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from engine.errors import StructuralError
from instances.helpers import (
    BUNDLED_DIR,
    InstanceParseError,
    ResolutionError,
    bundled_path,
    load,
    parse,
    parse_text,
    resolve,
    serialize,
    validate,
)
from instances.models import InstanceFile, QuantaleSection

B2_TEXT = """\
version: 1
name: scratch
quantale:
  - id: B2
    elements: ['0', '1']
    order: [['0', '1']]
    unit: '1'
    tensor:
      '0': {'0': '0', '1': '0'}
      '1': {'0': '0', '1': '1'}
"""


def _with(extra: str) -> str:
    return B2_TEXT + extra


# ── Parsing ───────────────────────────────────────────────────────────────────

def test_parse_bundled_file():
    inst = parse(bundled_path("b2"))
    assert inst.name == "b2"
    assert [q.id for q in inst.quantale] == ["B2"]


def test_bundled_path_accepts_both_spellings():
    assert bundled_path("c3") == bundled_path("c3.inst")


def test_yaml_error_has_a_position():
    with pytest.raises(InstanceParseError) as exc:
        parse_text("version: 1\nquantale: [\n")
    assert exc.value.line > 0


def test_missing_field_points_at_its_entry():
    text = "version: 1\nquantale:\n  - id: B\n    elements: ['0']\n    tensor: {'0': {'0': '0'}}\n"
    with pytest.raises(InstanceParseError) as exc:
        parse_text(text)
    assert (exc.value.line, exc.value.column) == (3, 5)
    assert "unit" in str(exc.value)


def test_unknown_section_is_rejected():
    with pytest.raises(InstanceParseError):
        parse_text(_with("colour: red\n"))


def test_duplicate_ids_are_rejected():
    with pytest.raises(InstanceParseError, match="declared twice"):
        parse_text(_with("monoid:\n  - id: B2\n    elements: ['e']\n    unit: e\n    mult: {e: {e: e}}\n"))


def test_unsupported_version():
    with pytest.raises(InstanceParseError):
        parse_text(B2_TEXT.replace("version: 1", "version: 2"))


def test_explicit_functor_needs_all_structure_cells():
    text = _with("functor:\n  - id: F\n    source: B2\n    target: B2\n    omap: {'0': '0', '1': '1'}\n    e: 1<=1\n")
    with pytest.raises(InstanceParseError, match="mmap, e and m"):
        parse_text(text)


def test_unreadable_file(tmp_path):
    with pytest.raises(InstanceParseError):
        parse(tmp_path / "missing.inst")


# ── Serialization ─────────────────────────────────────────────────────────────

@pytest.mark.parametrize("path", sorted(BUNDLED_DIR.glob("*.inst")), ids=lambda p: p.stem)
def test_serialization_is_canonical(path):
    once = serialize(parse(path))
    assert serialize(parse_text(once)) == once


_ELEMENT_NAMES = ["0", "1", "1/2", "a", "yes", "null", "*", "x y", "ε"]


@st.composite
def _quantale_sections(draw) -> QuantaleSection:
    elements = draw(st.lists(st.sampled_from(_ELEMENT_NAMES), min_size=1, max_size=4, unique=True))
    tensor = {x: {y: draw(st.sampled_from(elements)) for y in elements} for x in elements}
    return QuantaleSection(id=draw(st.sampled_from(["B", "Q", "on"])), elements=elements,
                           unit=draw(st.sampled_from(elements)), tensor=tensor)


@settings(max_examples=40, deadline=None)
@given(_quantale_sections())
def test_serialized_sections_parse_back(section):
    inst = InstanceFile(name="generated", quantale=[section])
    assert parse_text(serialize(inst)) == inst


# ── Resolution ────────────────────────────────────────────────────────────────

def test_load_bundled_file():
    r = load(bundled_path("b2"))
    assert list(r.smccs) == ["B2"]
    assert r.count() == 1


def test_bundle_resolves_every_section(bundle):
    assert set(bundle.functors) >= {"r", "q", "iota", "t", "inv", "qr", "rq", "iota_rq"}
    assert bundle.nats["iota_eps"].target == bundle.functors["iota"]
    assert bundle.adjunctions["r_q"].left == bundle.functors["r"]


def test_unknown_reference_names_the_id():
    text = _with("functor:\n  - id: F\n    source: B2\n    target: Nope\n    omap: {'0': '0', '1': '1'}\n")
    with pytest.raises(ResolutionError) as exc:
        resolve(parse_text(text))
    assert exc.value.ref == "Nope"
    assert exc.value.owner == "F"


def test_thin_functor_with_partial_object_map():
    text = _with("functor:\n  - id: F\n    source: B2\n    target: B2\n    omap: {'0': '0'}\n")
    with pytest.raises(StructuralError, match="object map"):
        resolve(parse_text(text))


def test_override_with_wrong_key_length():
    text = _with("smcc:\n  - id: X\n    quantale: B2\n    overrides:\n      - {table: ihom, key: ['1'], value: '1'}\n")
    with pytest.raises(StructuralError):
        resolve(parse_text(text))


# ── Validation ────────────────────────────────────────────────────────────────

def test_bundle_validates(bundle):
    reports = validate(bundle)
    assert reports
    assert all(rep.ok for rep in reports.values()), [k for k, rep in reports.items() if not rep.ok]


def test_overridden_internal_hom_fails_validation():
    text = _with("smcc:\n  - id: B2bad\n    quantale: B2\n    overrides:\n      - {table: ihom, key: ['1', '0'], value: '1'}\n")
    reports = validate(resolve(parse_text(text)))
    assert reports["smcc:B2"].ok
    assert "closed.ev_shape" in reports["smcc:B2bad"].laws()
