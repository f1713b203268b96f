"""Parse, serialize and resolve instance files.

parse() turns YAML text into an InstanceFile, with line/column-located
errors. resolve() builds the engine values section by section; a reference
to an id that was not declared earlier raises ResolutionError.
"""
import dataclasses
import logging
from dataclasses import dataclass, field
from pathlib import Path

import yaml
from pydantic import ValidationError

from engine.adjoint import Adjunction, check_adjunction
from engine.autoenrich import autoenrich
from engine.chbase import push_monvcat, push_vcat
from engine.enriched import SymMonClosedVCat, VCat, check_symmonclosed, check_vcat
from engine.errors import EngineError, StructuralError
from engine.fincat import FinCat, FinFunctor, check_category
from engine.groth import BaseIndex, check_base_index
from engine.laws import LawReport
from engine.smcc import (
    CommMonoidDesc,
    MonoidalFunctor,
    MonoidalNatTrans,
    QuantaleDesc,
    Smcc,
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
    vcomp_monoidal,
    whisker_left_monoidal,
    whisker_right_monoidal,
)
from engine.twocat import SmccatContext
from instances.models import SECTION_ORDER, InstanceFile

logger = logging.getLogger(__name__)

BUNDLED_DIR = Path(__file__).parent / "bundled"


class InstanceParseError(StructuralError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")


class ResolutionError(StructuralError):
    def __init__(self, ref: str, owner: str, section: str):
        self.ref = ref
        self.owner = owner
        self.section = section
        super().__init__(f"{owner}: unknown {section} id {ref!r}")


# ── Parsing ───────────────────────────────────────────────────────────────────

def _locate(node, loc: tuple) -> yaml.Mark | None:
    """Start mark of the deepest YAML node along a pydantic error location."""
    mark = node.start_mark if node is not None else None
    for part in loc:
        if isinstance(node, yaml.MappingNode):
            nxt = next((v for k, v in node.value if k.value == str(part)), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(part, int) and part < len(node.value):
            nxt = node.value[part]
        else:
            nxt = None
        if nxt is None:
            break
        node = nxt
        mark = node.start_mark
    return mark


def parse_text(text: str, source: str = "<string>") -> InstanceFile:
    try:
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark or e.context_mark
        line, col = (mark.line + 1, mark.column + 1) if mark else (0, 0)
        raise InstanceParseError(f"{source}: {e.problem or e}", line, col) from None
    if not isinstance(data, dict):
        raise InstanceParseError(f"{source}: an instance file must be a mapping of sections", 1, 1)
    try:
        return InstanceFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        mark = _locate(yaml.compose(text), first["loc"])
        line, col = (mark.line + 1, mark.column + 1) if mark else (0, 0)
        where = ".".join(str(p) for p in first["loc"]) or "file"
        raise InstanceParseError(f"{source}: {where}: {first['msg']}", line, col) from None


def parse(path: str | Path) -> InstanceFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InstanceParseError(f"cannot read {path}: {e}") from None
    return parse_text(text, source=str(path))


def bundled_path(name: str) -> Path:
    """Path of a bundled instance by short name, e.g. 'b2' or 'bundle'."""
    return BUNDLED_DIR / (name if name.endswith(".inst") else f"{name}.inst")


def serialize(inst: InstanceFile) -> str:
    """Canonical YAML: sections in declaration order, unset fields and empty sections dropped."""
    data = inst.model_dump(mode="json", exclude_none=True)
    canonical = {"version": data["version"]}
    if inst.name is not None:
        canonical["name"] = inst.name
    for section in SECTION_ORDER:
        entries = [
            {k: v for k, v in entry.items() if v != []}
            for entry in data[section]
        ]
        if entries:
            canonical[section] = entries
    return yaml.safe_dump(canonical, sort_keys=False, allow_unicode=True, default_flow_style=None, width=100)


# ── Resolution ────────────────────────────────────────────────────────────────

@dataclass
class Resolved:
    """Engine values of one instance file, keyed by id in declaration order."""

    name: str
    categories: dict[str, FinCat] = field(default_factory=dict)
    smccs: dict[str, Smcc] = field(default_factory=dict)
    functors: dict[str, MonoidalFunctor] = field(default_factory=dict)
    nats: dict[str, MonoidalNatTrans] = field(default_factory=dict)
    vcats: dict[str, VCat] = field(default_factory=dict)
    monvcats: dict[str, SymMonClosedVCat] = field(default_factory=dict)
    base_indexes: dict[str, BaseIndex] = field(default_factory=dict)
    adjunctions: dict[str, Adjunction] = field(default_factory=dict)

    def count(self) -> int:
        return sum(len(getattr(self, f.name)) for f in dataclasses.fields(self) if f.name != "name")


def _ref(table: dict, ref: str, owner: str, section: str):
    try:
        return table[ref]
    except KeyError:
        raise ResolutionError(ref, owner, section) from None


def _pairs(nested: dict[str, dict[str, str]]) -> dict[tuple[str, str], str]:
    return {(x, y): v for x, row in nested.items() for y, v in row.items()}


def _renamed(value, name: str):
    return dataclasses.replace(value, name=name)


_OVERRIDE_ARITY = {"tensor_obj": 2, "tensor_mor": 2, "assoc": 3, "lunit": 1, "runit": 1, "sym": 2, "ihom": 2, "ev": 2}


def _apply_overrides(v: Smcc, sec) -> Smcc:
    changes: dict[str, dict] = {}
    for o in sec.overrides:
        if len(o.key) != _OVERRIDE_ARITY[o.table]:
            raise StructuralError(f"{sec.id}: {o.table} keys have {_OVERRIDE_ARITY[o.table]} parts, got {o.key}")
        key = o.key[0] if len(o.key) == 1 else tuple(o.key)
        table = changes.setdefault(o.table, dict(getattr(v, o.table)))
        if key not in table:
            raise StructuralError(f"{sec.id}: {o.table} has no entry at {o.key}")
        logger.debug("%s: %s%s %s -> %s", sec.id, o.table, o.key, table[key], o.value)
        table[key] = o.value
    return dataclasses.replace(v, name=sec.id, **changes)


def _resolve_functor(r: Resolved, sec) -> MonoidalFunctor:
    fs = r.functors
    if sec.mode == "identity":
        return _renamed(identity_monoidal(_ref(r.smccs, sec.identity, sec.id, "smcc")), sec.id)
    if sec.mode == "compose":
        if not sec.compose:
            raise StructuralError(f"{sec.id}: compose needs at least one functor")
        parts = [_ref(fs, f, sec.id, "functor") for f in sec.compose]
        out = parts[-1]
        for H in reversed(parts[:-1]):
            out = compose_monoidal(H, out)
        return _renamed(out, sec.id)
    source = _ref(r.smccs, sec.source, sec.id, "smcc")
    target = _ref(r.smccs, sec.target, sec.id, "smcc")
    if set(sec.omap) != set(source.objects):
        missing = sorted(set(source.objects) - set(sec.omap)) or sorted(set(sec.omap) - set(source.objects))
        raise StructuralError(f"{sec.id}: object map does not match the objects of {source.name} at {missing}")
    if sec.mode == "thin":
        return thin_monoidal_functor(source, target, sec.omap, name=sec.id)
    functor = FinFunctor(source.cat, target.cat, dict(sec.omap), dict(sec.mmap), name=sec.id)
    return MonoidalFunctor(source, target, functor, sec.e, _pairs(sec.m), name=sec.id)


def _resolve_nat(r: Resolved, sec) -> MonoidalNatTrans:
    fs, ns = r.functors, r.nats
    if sec.mode == "identity":
        return _renamed(identity_monoidal_nat(_ref(fs, sec.identity, sec.id, "functor")), sec.id)
    if sec.mode == "vcomp":
        if not sec.vcomp:
            raise StructuralError(f"{sec.id}: vcomp needs at least one transformation")
        parts = [_ref(ns, n, sec.id, "nat") for n in sec.vcomp]
        out = parts[-1]
        for beta in reversed(parts[:-1]):
            out = vcomp_monoidal(beta, out)
        return _renamed(out, sec.id)
    if sec.mode == "whisker_left":
        H, alpha = sec.whisker_left
        return _renamed(whisker_left_monoidal(_ref(fs, H, sec.id, "functor"), _ref(ns, alpha, sec.id, "nat")), sec.id)
    if sec.mode == "whisker_right":
        alpha, K = sec.whisker_right
        return _renamed(whisker_right_monoidal(_ref(ns, alpha, sec.id, "nat"), _ref(fs, K, sec.id, "functor")), sec.id)
    F = _ref(fs, sec.source, sec.id, "functor")
    G = _ref(fs, sec.target, sec.id, "functor")
    if sec.mode == "thin":
        return thin_monoidal_nat(F, G, sec.id)
    return MonoidalNatTrans(F, G, dict(sec.components), name=sec.id)


def _resolve_vcat(r: Resolved, sec) -> VCat:
    if sec.autoenrich is not None:
        return autoenrich(_ref(r.smccs, sec.autoenrich, sec.id, "smcc")).m
    if sec.push is not None:
        G, a = sec.push
        return push_vcat(_ref(r.functors, G, sec.id, "functor"), _ref(r.vcats, a, sec.id, "vcat"))
    base = _ref(r.smccs, sec.base, sec.id, "smcc")
    comp = {(x, y, z): f for x, y, z, f in sec.comp}
    return VCat(base, tuple(sec.objects), _pairs(sec.hom), comp, dict(sec.unit), name=sec.id)


def _resolve_monvcat(r: Resolved, sec) -> SymMonClosedVCat:
    if sec.autoenrich is not None:
        return autoenrich(_ref(r.smccs, sec.autoenrich, sec.id, "smcc"))
    G, M = sec.push
    return push_monvcat(_ref(r.functors, G, sec.id, "functor"), _ref(r.monvcats, M, sec.id, "monvcat"))


def resolve(inst: InstanceFile) -> Resolved:
    """Build every declared entity. Raises ResolutionError or another StructuralError."""
    r = Resolved(name=inst.name or "instance")
    for sec in inst.quantale:
        desc = QuantaleDesc(sec.id, tuple(sec.elements), tuple(sec.order), sec.unit, _pairs(sec.tensor))
        r.smccs[sec.id] = quantale_to_smcc(desc)
    for sec in inst.monoid:
        r.smccs[sec.id] = monoid_to_smcc(CommMonoidDesc(sec.id, tuple(sec.elements), sec.unit, _pairs(sec.mult)))
    for sec in inst.category:
        dom = {f: d for f, (d, _) in sec.morphisms.items()}
        cod = {f: c for f, (_, c) in sec.morphisms.items()}
        comp = {(g, f): h for g, f, h in sec.comp}
        r.categories[sec.id] = FinCat(tuple(sec.objects), tuple(sec.morphisms), dom, cod, dict(sec.identity), comp,
                                      name=sec.id)
    for sec in inst.smcc:
        source = sec.quantale if sec.quantale is not None else sec.monoid
        r.smccs[sec.id] = _apply_overrides(_ref(r.smccs, source, sec.id, "quantale or monoid"), sec)
    for sec in inst.functor:
        r.functors[sec.id] = _resolve_functor(r, sec)
    for sec in inst.nat:
        r.nats[sec.id] = _resolve_nat(r, sec)
    for sec in inst.vcat:
        r.vcats[sec.id] = _resolve_vcat(r, sec)
    for sec in inst.monvcat:
        r.monvcats[sec.id] = _resolve_monvcat(r, sec)
    for sec in inst.base_index:
        r.base_indexes[sec.id] = BaseIndex(
            [_ref(r.smccs, v, sec.id, "smcc") for v in sec.bases],
            [_ref(r.functors, F, sec.id, "functor") for F in sec.functors],
            [_ref(r.nats, t, sec.id, "nat") for t in sec.nats],
            name=sec.id,
        )
    for sec in inst.adjunction:
        r.adjunctions[sec.id] = Adjunction(
            SmccatContext(),
            _ref(r.functors, sec.left, sec.id, "functor"),
            _ref(r.functors, sec.right, sec.id, "functor"),
            _ref(r.nats, sec.unit, sec.id, "nat"),
            _ref(r.nats, sec.counit, sec.id, "nat"),
            name=sec.id,
        )
    logger.debug("resolved %s: %d entities", r.name, r.count())
    return r


def load(path: str | Path) -> Resolved:
    return resolve(parse(path))


# ── Validation ────────────────────────────────────────────────────────────────

def _guarded(check, value) -> LawReport:
    try:
        return check(value)
    except EngineError as e:
        report = LawReport()
        report.structural_error(str(e))
        return report


def validate(r: Resolved) -> dict[str, LawReport]:
    """Structural check of every declared entity, keyed 'section:id'."""
    checks = (
        ("category", r.categories, check_category),
        ("smcc", r.smccs, check_smcc),
        ("functor", r.functors, check_monoidal_functor),
        ("nat", r.nats, check_monoidal_nat),
        ("vcat", r.vcats, check_vcat),
        ("monvcat", r.monvcats, check_symmonclosed),
        ("base_index", r.base_indexes, check_base_index),
        ("adjunction", r.adjunctions, check_adjunction),
    )
    out = {}
    for section, table, check in checks:
        for key, value in table.items():
            out[f"{section}:{key}"] = _guarded(check, value)
    return out
