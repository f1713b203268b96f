import asyncio
import logging
from typing import Optional

import click

from cli.helpers import FORMATS, load_instance
from engine.errors import EngineError
from suites.registry import SUITES
from suites.runner import RunReport, format_text, run_suites

logger = logging.getLogger(__name__)


def _run(ctx: click.Context, file: str, suites: list[str], probe_bound: Optional[int], fmt: str,
         timings: bool) -> None:
    r = load_instance(ctx, file)
    try:
        result: RunReport = asyncio.run(run_suites(r, suites, probe_bound=probe_bound, timings=timings))
    except EngineError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(2)
    click.echo(result.to_json() if fmt == "json" else format_text(result), nl=fmt != "json")
    ctx.exit(result.exit_code)


@click.command()
@click.argument("suites", nargs=-1)
@click.option("--file", "file", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--probe-bound", type=click.IntRange(min=1), default=None,
              help="Problems tried per designated cell (default BASECHANGE_PROBE_BOUND).")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.option("--timings", is_flag=True, help="Record seconds per check.")
@click.pass_context
def check(ctx: click.Context, suites: tuple[str, ...], file: str, probe_bound: Optional[int], fmt: str,
          timings: bool) -> None:
    """Run the theorem SUITES ('all' for every one) over FILE."""
    _run(ctx, file, list(suites), probe_bound, fmt, timings)


@click.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--probe-bound", type=click.IntRange(min=1), default=None)
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.option("--timings", is_flag=True, help="Record seconds per check.")
@click.pass_context
def report(ctx: click.Context, file: str, probe_bound: Optional[int], fmt: str, timings: bool) -> None:
    """Run every registered suite over FILE."""
    _run(ctx, file, list(SUITES), probe_bound, fmt, timings)
