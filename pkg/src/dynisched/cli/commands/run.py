"""Run command: execute a trace on one engine."""

from pathlib import Path

import typer

from dynisched.bench.runner import run_trace
from dynisched.cli.ui.console import print_engine_stats, print_error, print_success
from dynisched.config import Settings, load_settings
from dynisched.core.errors import SchedulingError
from dynisched.engines import ENGINES, EngineBase, create_engine
from dynisched.models.trace import ParseError, read_trace


def resolve_engine(
    settings: Settings, name: str | None, machines: int | None, *, weighted: bool = False
) -> EngineBase:
    """Engine from CLI flags, falling back to the configured engine and machine count.

    Raises:
        ValueError: Unknown engine, or a machine count the engine cannot serve.
    """
    name = name or settings.engine.name
    if machines is None:
        machines = settings.engine.machines
        if name in ENGINES:
            machines = max(machines, ENGINES[name].min_machines)
    return create_engine(
        name,
        machines,
        debug_assert=settings.engine.debug_assert,
        eager_tables=settings.engine.eager_tables,
        weighted=weighted,
    )


def run(
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
        help="Engine: naive, sqrt, cuberoot, two, multi, deleteonly or insertonly.",
    ),
    machines: int | None = typer.Option(
        None,
        "--machines",
        "-m",
        help="Number of machines.",
    ),
    weighted: bool = typer.Option(
        False,
        "--weighted",
        help="Answer with the maximum compatible weight (naive engine only).",
    ),
    out: Path | None = typer.Option(
        None,
        "--out",
        "-o",
        help="Answers file to write, one line per query. Prints to stdout when omitted.",
    ),
    stats: bool = typer.Option(
        False,
        "--stats",
        help="Print engine counters after the run.",
    ),
    config_file: str | None = typer.Option(
        None,
        "--config",
        "-c",
        help="Path to configuration YAML file.",
    ),
) -> None:
    """Execute a trace and print one answer per query.

    Malformed lines and illegal operations (a delete of an id that is not
    live, a reused id) stop the run with the offending line number.
    """
    settings = load_settings(config_file)
    try:
        engine = resolve_engine(settings, engine_name, machines, weighted=weighted)
        answers = run_trace(read_trace(trace), engine)
    except ParseError as exc:
        print_error(f"{trace}:{exc.line_no}: {exc.message}")
        raise typer.Exit(code=1)
    except (SchedulingError, ValueError) as exc:
        print_error(str(exc))
        raise typer.Exit(code=1)

    if out is None:
        for answer in answers:
            typer.echo(str(answer))
    else:
        out.write_text("".join(f"{answer}\n" for answer in answers), encoding="utf-8")
        print_success(f"Wrote {len(answers)} answers to {out}")

    if stats:
        print_engine_stats(engine.name, engine.machines, engine.stats())
