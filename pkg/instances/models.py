"""Pydantic models for instance files, one per section.

Every entity has an id; later sections refer to earlier entities by id.
Tables keyed by pairs are written as nested maps: tensor[x][y].
"""
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", coerce_numbers_to_str=True)

    id: str


def _one_of(model: BaseModel, *names: str) -> str:
    given = [n for n in names if getattr(model, n) is not None]
    if len(given) != 1:
        raise ValueError(f"exactly one of {', '.join(names)} is required, got {given or 'none'}")
    return given[0]


# ── Bases ─────────────────────────────────────────────────────────────────────

class QuantaleSection(_Section):
    elements: list[str]
    order: list[tuple[str, str]] = Field(default_factory=list)   # generating pairs x <= y
    unit: str
    tensor: dict[str, dict[str, str]]


class MonoidSection(_Section):
    elements: list[str]
    unit: str
    mult: dict[str, dict[str, str]]


class CategorySection(_Section):
    objects: list[str]
    morphisms: dict[str, tuple[str, str]]     # id -> (dom, cod)
    identity: dict[str, str]
    comp: list[tuple[str, str, str]]          # (g, f, g∘f)


class Override(BaseModel):
    model_config = ConfigDict(extra="forbid", coerce_numbers_to_str=True)

    table: Literal["tensor_obj", "tensor_mor", "assoc", "lunit", "runit", "sym", "ihom", "ev"]
    key: list[str]
    value: str


class SmccSection(_Section):
    quantale: Optional[str] = None
    monoid: Optional[str] = None
    overrides: list[Override] = Field(default_factory=list)

    @model_validator(mode="after")
    def _source(self):
        _one_of(self, "quantale", "monoid")
        return self


# ── Functors and transformations ──────────────────────────────────────────────

class FunctorSection(_Section):
    identity: Optional[str] = None
    compose: Optional[list[str]] = None       # [H, G, F] means H∘G∘F
    source: Optional[str] = None
    target: Optional[str] = None
    omap: Optional[dict[str, str]] = None
    mmap: Optional[dict[str, str]] = None
    e: Optional[str] = None
    m: Optional[dict[str, dict[str, str]]] = None

    @model_validator(mode="after")
    def _mode(self):
        if self.identity is not None or self.compose is not None:
            _one_of(self, "identity", "compose")
            return self
        if self.source is None or self.target is None or self.omap is None:
            raise ValueError("a functor needs identity, compose, or source/target/omap")
        explicit = (self.mmap, self.e, self.m)
        if any(x is not None for x in explicit) and not all(x is not None for x in explicit):
            raise ValueError("an explicit functor needs mmap, e and m together")
        return self

    @property
    def mode(self) -> str:
        if self.identity is not None:
            return "identity"
        if self.compose is not None:
            return "compose"
        return "explicit" if self.mmap is not None else "thin"


class NatSection(_Section):
    source: Optional[str] = None
    target: Optional[str] = None
    components: Optional[dict[str, str]] = None
    identity: Optional[str] = None
    vcomp: Optional[list[str]] = None         # [β, α] means β·α
    whisker_left: Optional[tuple[str, str]] = None    # (H, α)
    whisker_right: Optional[tuple[str, str]] = None   # (α, K)

    @model_validator(mode="after")
    def _mode(self):
        derived = [n for n in ("identity", "vcomp", "whisker_left", "whisker_right") if getattr(self, n) is not None]
        if derived:
            _one_of(self, "identity", "vcomp", "whisker_left", "whisker_right")
        elif self.source is None or self.target is None:
            raise ValueError("a transformation needs source and target, or a derivation")
        return self

    @property
    def mode(self) -> str:
        for n in ("identity", "vcomp", "whisker_left", "whisker_right"):
            if getattr(self, n) is not None:
                return n
        return "explicit" if self.components is not None else "thin"


# ── Enriched categories ───────────────────────────────────────────────────────

class VCatSection(_Section):
    autoenrich: Optional[str] = None
    push: Optional[tuple[str, str]] = None    # (functor, vcat)
    base: Optional[str] = None
    objects: Optional[list[str]] = None
    hom: Optional[dict[str, dict[str, str]]] = None
    comp: Optional[list[tuple[str, str, str, str]]] = None   # (A, B, C, morphism)
    unit: Optional[dict[str, str]] = None

    @model_validator(mode="after")
    def _mode(self):
        if self.autoenrich is None and self.push is None:
            if None in (self.base, self.objects, self.hom, self.comp, self.unit):
                raise ValueError("an explicit V-category needs base, objects, hom, comp and unit")
            return self
        _one_of(self, "autoenrich", "push")
        return self


class MonVCatSection(_Section):
    autoenrich: Optional[str] = None
    push: Optional[tuple[str, str]] = None    # (functor, monvcat)

    @model_validator(mode="after")
    def _mode(self):
        _one_of(self, "autoenrich", "push")
        return self


# ── Manifests ─────────────────────────────────────────────────────────────────

class BaseIndexSection(_Section):
    bases: list[str]
    functors: list[str] = Field(default_factory=list)
    nats: list[str] = Field(default_factory=list)


class AdjunctionSection(_Section):
    left: str
    right: str
    unit: str
    counit: str


SECTION_ORDER = (
    "quantale", "monoid", "category", "smcc", "functor", "nat", "vcat", "monvcat", "base_index", "adjunction",
)


class InstanceFile(BaseModel):
    model_config = ConfigDict(extra="forbid", coerce_numbers_to_str=True)

    version: Literal[1] = 1
    name: Optional[str] = None
    quantale: list[QuantaleSection] = Field(default_factory=list)
    monoid: list[MonoidSection] = Field(default_factory=list)
    category: list[CategorySection] = Field(default_factory=list)
    smcc: list[SmccSection] = Field(default_factory=list)
    functor: list[FunctorSection] = Field(default_factory=list)
    nat: list[NatSection] = Field(default_factory=list)
    vcat: list[VCatSection] = Field(default_factory=list)
    monvcat: list[MonVCatSection] = Field(default_factory=list)
    base_index: list[BaseIndexSection] = Field(default_factory=list)
    adjunction: list[AdjunctionSection] = Field(default_factory=list)

    @model_validator(mode="after")
    def _unique_ids(self):
        seen: dict[str, str] = {}
        for section in SECTION_ORDER:
            for entry in getattr(self, section):
                if entry.id in seen:
                    raise ValueError(f"id {entry.id!r} is declared twice ({seen[entry.id]} and {section})")
                seen[entry.id] = section
        return self
