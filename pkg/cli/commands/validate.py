import logging

import click

from cli.helpers import FORMATS, emit, load_instance
from instances.helpers import validate as validate_instance

logger = logging.getLogger(__name__)


@click.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.pass_context
def validate(ctx: click.Context, file: str, fmt: str) -> None:
    """Parse FILE, resolve its references and check every declared entity."""
    r = load_instance(ctx, file)
    reports = validate_instance(r)
    if fmt == "json":
        emit({key: rep.to_dict() for key, rep in reports.items()}, fmt)
    else:
        for key, rep in reports.items():
            status = "ok" if rep.ok else "FAIL"
            click.echo(f"{status:4}  {key}")
            for v in rep.canonical().violations[:3]:
                click.echo(f"      {v.law} at ({', '.join(v.instance)})")
            for msg in rep.structural[:3]:
                click.echo(f"      structural: {msg}")
    if any(rep.structural for rep in reports.values()):
        ctx.exit(2)
    if any(rep.violations for rep in reports.values()):
        ctx.exit(1)
