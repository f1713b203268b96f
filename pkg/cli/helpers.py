import json
import logging
from pathlib import Path

import click
import yaml

from engine.errors import EngineError
from instances.helpers import Resolved, load

logger = logging.getLogger(__name__)

FORMATS = click.Choice(["text", "json"])


def load_instance(ctx: click.Context, path: str | Path) -> Resolved:
    """Parse and resolve, or print the error and exit with status 2."""
    try:
        return load(path)
    except EngineError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(2)


def emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        click.echo(yaml.safe_dump(payload, sort_keys=False, allow_unicode=True, default_flow_style=None).rstrip())
