import logging

import click

from cli.commands.check import check, report
from cli.commands.construct import construct
from cli.commands.validate import validate

logger = logging.getLogger(__name__)


@click.group()
@click.option("--verbose", is_flag=True, help="Log constructions at DEBUG.")
@click.option("--quiet", is_flag=True, help="Only log warnings and errors.")
def basechange(verbose: bool, quiet: bool) -> None:
    """Finite-instance checks for enriched categories and change of base."""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif quiet:
        logging.getLogger().setLevel(logging.WARNING)


basechange.add_command(validate)
basechange.add_command(construct)
basechange.add_command(check)
basechange.add_command(report)
