"""Verify command: cross-check two engines, or an engine against an answers file."""

from pathlib import Path

import typer

from dynisched.bench.runner import compare_answers, run_trace
from dynisched.bench.runner import verify as verify_engines
from dynisched.cli.commands.run import resolve_engine
from dynisched.cli.ui.console import print_error, print_verdict
from dynisched.config import load_settings
from dynisched.core.errors import SchedulingError
from dynisched.models.trace import ParseError, read_trace


def _read_answers(path: Path) -> list[int]:
    return [int(line) for line in path.read_text(encoding="utf-8").split()]


def verify(
    trace: Path = typer.Argument(
        ...,
        exists=True,
        dir_okay=False,
        help="Trace file to execute.",
    ),
    engine_name: str | None = typer.Option(
        None,
        "--engine",
        "-e",
        help="Engine under test.",
    ),
    against: str = typer.Option(
        "naive",
        "--against",
        "-a",
        help="Reference engine.",
    ),
    machines: int | None = typer.Option(
        None,
        "--machines",
        "-m",
        help="Number of machines.",
    ),
    expected: Path | None = typer.Option(
        None,
        "--expected",
        exists=True,
        dir_okay=False,
        help="Compare with an answers file instead of a reference engine.",
    ),
    config_file: str | None = typer.Option(
        None,
        "--config",
        "-c",
        help="Path to configuration YAML file.",
    ),
) -> None:
    """Check that an engine answers a trace exactly like the reference.

    Prints PASS, or FAIL with the 0-based index of the first query whose
    answers differ; a FAIL exits with code 1.
    """
    settings = load_settings(config_file)
    try:
        engine = resolve_engine(settings, engine_name, machines)
        if expected is not None:
            result = compare_answers(_read_answers(expected), run_trace(read_trace(trace), engine))
        else:
            reference = resolve_engine(settings, against, engine.machines)
            result = verify_engines(read_trace(trace), reference, engine)
    except ParseError as exc:
        print_error(f"{trace}:{exc.line_no}: {exc.message}")
        raise typer.Exit(code=1)
    except (SchedulingError, ValueError) as exc:
        print_error(str(exc))
        raise typer.Exit(code=1)

    print_verdict(result.passed, str(result))
    if not result.passed:
        raise typer.Exit(code=1)
