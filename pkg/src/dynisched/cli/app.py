"""Main Typer application for the dynisched CLI."""

import logging

import typer

from dynisched import __version__
from dynisched.cli.commands.bench import bench
from dynisched.cli.commands.config_cmd import config
from dynisched.cli.commands.gen import gen
from dynisched.cli.commands.reduce import reduce
from dynisched.cli.commands.run import run
from dynisched.cli.commands.verify import verify
from dynisched.cli.ui.console import configure_logging, console
from dynisched.config import LoggingSettings

app = typer.Typer(
    name="dynisched",
    help="Dynamic interval scheduling engines with brute-force verification and benchmarks.",
    no_args_is_help=True,
    rich_markup_mode="rich",
)


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        console.print(f"dynisched version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "--version",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit.",
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose",
        "-v",
        help="Log structural rebuilds, splits and merges at DEBUG level.",
    ),
) -> None:
    """dynisched: exact dynamic interval scheduling on 1, 2 and m machines.

    Generate a workload with [bold]dynisched gen[/bold], answer it with
    [bold]dynisched run[/bold], cross-check engines with
    [bold]dynisched verify[/bold] and measure them with
    [bold]dynisched bench[/bold].

    Set DYNISCHED_DEBUG_ASSERT=1 to recompute every query answer with the
    brute-force oracle.
    """
    configure_logging(logging.DEBUG if verbose else LoggingSettings().level)


# Register commands from individual modules
app.command()(gen)
app.command()(run)
app.command()(verify)
app.command()(bench)
app.command()(reduce)
app.command()(config)
