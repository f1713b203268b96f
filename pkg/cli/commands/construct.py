import logging
from collections.abc import Callable

import click

from cli.helpers import FORMATS, emit, load_instance
from engine.adjoint import check_adjunction, enrich_adjunction, laxslice_adjunction, reconstruct_left_adjoint
from engine.autoenrich import autoenrich, grave, grave_nat, reconstruct_iso
from engine.chbase import canonical_normalization, comparison_KG, kappa, normality_witness, push_monvcat, push_vcat
from engine.enriched import MonVFunctor, MonVNatTrans, SymMonClosedVCat, VCat
from engine.errors import EngineError, LawViolationError
from engine.fincat import FinFunctor
from engine.groth import designated_cocartesian, lift_obj
from engine.smcc import MonoidalFunctor
from instances.helpers import Resolved

logger = logging.getLogger(__name__)


# ── Payloads ──────────────────────────────────────────────────────────────────

def _keyed(table: dict) -> dict[str, str]:
    return {",".join(k) if isinstance(k, tuple) else k: v for k, v in table.items()}


def describe_vcat(a: VCat) -> dict:
    return {"name": a.name, "base": a.base.name, "objects": list(a.objects), "hom": _keyed(a.hom),
            "unit": dict(a.unit)}


def describe_monvcat(M: SymMonClosedVCat) -> dict:
    out = describe_vcat(M.m)
    out.update(name=M.name, unit_obj=M.unit_obj, tensor=dict(M.tensorV.omap))
    return out


def describe_monvfunctor(S: MonVFunctor) -> dict:
    return {"name": S.name, "source": S.source.name, "target": S.target.name, "omap": dict(S.functor.omap),
            "hmap": _keyed(S.functor.hmap), "e": S.e, "m": _keyed(S.m)}


def describe_monoidal_functor(F: MonoidalFunctor) -> dict:
    return {"name": F.name, "source": F.source.name, "target": F.target.name, "omap": dict(F.functor.omap),
            "mmap": dict(F.functor.mmap), "e": F.e, "m": _keyed(F.m), "strictness": F.strictness}


def describe_monvnat(t: MonVNatTrans) -> dict:
    return {"name": t.name, "source": t.source.name, "target": t.target.name, "components": dict(t.components)}


def describe_finfunctor(K: FinFunctor) -> dict:
    return {"name": K.name, "omap": dict(K.omap), "mmap": dict(K.mmap), "isomorphism": K.is_isomorphism}


# ── Operations ────────────────────────────────────────────────────────────────

def _push(G: MonoidalFunctor, a) -> dict:
    if isinstance(a, SymMonClosedVCat):
        return describe_monvcat(push_monvcat(G, a))
    return describe_vcat(push_vcat(G, a))


def _reconstruct(M: SymMonClosedVCat) -> dict:
    rec = reconstruct_iso(M)
    return {"inclusion": describe_monvfunctor(rec.inclusion), "inverse": describe_monvfunctor(rec.inverse)}


def _psi(k: MonoidalFunctor) -> dict:
    cell = designated_cocartesian(k, lift_obj(k.source))
    return {"down": k.name, "source": cell.source.name, "target": cell.target.name, "up": describe_monvfunctor(cell.up)}


def _enrich(a) -> dict:
    e = enrich_adjunction(a)
    adj = e.adjunction
    return {
        "left": describe_monvfunctor(adj.left),
        "right": describe_monvfunctor(adj.right),
        "unit": describe_monvnat(adj.unit),
        "counit": describe_monvnat(adj.counit),
        "report": e.report.to_dict(),
    }


def _left_adjoint(a) -> dict:
    F, G = a.left, a.right
    rebuilt = reconstruct_left_adjoint(G, dict(F.functor.omap), dict(a.unit.components), name=f"{F.name}'")
    out = describe_monoidal_functor(rebuilt)
    out["equals_left"] = rebuilt == F
    return out


# op -> (argument kinds, driver)
OPS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "autoenrich": (("smcc",), lambda v: describe_monvcat(autoenrich(v))),
    "push": (("functor", "enriched"), _push),
    "grave": (("functor",), lambda G: describe_monvfunctor(grave(G))),
    "grave_nat": (("nat",), lambda t: describe_monvnat(grave_nat(t))),
    "comparison_KG": (("functor",), lambda G: describe_finfunctor(comparison_KG(G))),
    "normality": (("functor",), lambda G: {"functor": G.name, "normal": not normality_witness(G),
                                           "witness": list(normality_witness(G))}),
    "normalization": (("monvcat",), lambda M: describe_monvfunctor(canonical_normalization(M).U)),
    "kappa": (("functor",), lambda G: describe_monvnat(kappa(grave(G)))),
    "reconstruct": (("monvcat",), _reconstruct),
    "psi": (("functor",), _psi),
    "enrich_adjunction": (("adjunction",), _enrich),
    "laxslice_adjunction": (("adjunction",), lambda a: check_adjunction(laxslice_adjunction(a)).to_dict()),
    "reconstruct_left_adjoint": (("adjunction",), _left_adjoint),
}


def _lookup(r: Resolved, kind: str, ref: str):
    tables = {
        "smcc": (r.smccs,), "functor": (r.functors,), "nat": (r.nats,), "monvcat": (r.monvcats,),
        "adjunction": (r.adjunctions,), "enriched": (r.vcats, r.monvcats),
    }[kind]
    for table in tables:
        if ref in table:
            return table[ref]
    raise click.UsageError(f"no {kind} with id {ref!r}")


@click.command()
@click.argument("op", type=click.Choice(sorted(OPS)))
@click.argument("args", nargs=-1)
@click.option("--file", "file", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.pass_context
def construct(ctx: click.Context, op: str, args: tuple[str, ...], file: str, fmt: str) -> None:
    """Run construction OP on the entities ARGS declared in FILE and print the result."""
    kinds, driver = OPS[op]
    if len(args) != len(kinds):
        raise click.UsageError(f"{op} takes {len(kinds)} argument(s): {', '.join(kinds)}")
    r = load_instance(ctx, file)
    values = [_lookup(r, kind, ref) for kind, ref in zip(kinds, args)]
    try:
        payload = driver(*values)
    except LawViolationError as e:
        click.echo(f"error: {e}", err=True)
        emit(e.report.to_dict(), fmt)
        ctx.exit(1)
    except EngineError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(2)
    emit(payload, fmt)
