"""Bench command: measure engines on trace files and write a CSV."""

import logging
from contextlib import closing
from pathlib import Path

import typer

from dynisched.bench.runner import BenchRecord, EngineSpec, bench_pairs, write_csv
from dynisched.cli.commands.run import resolve_engine
from dynisched.cli.ui.console import (
    print_bench_table,
    print_error,
    print_info,
    print_success,
    print_warning,
)
from dynisched.cli.ui.progress import track
from dynisched.config import load_settings
from dynisched.core.errors import SchedulingError
from dynisched.models.trace import ParseError

logger = logging.getLogger(__name__)


def bench(
    traces: list[Path] = typer.Argument(
        None,
        exists=True,
        dir_okay=False,
        help="Trace files to benchmark.",
    ),
    engines: list[str] = typer.Option(
        None,
        "--engine",
        "-e",
        help="Engine to benchmark; repeat for several. Defaults to the configured list.",
    ),
    machines: int | None = typer.Option(
        None,
        "--machines",
        "-m",
        help="Number of machines.",
    ),
    out: Path | None = typer.Option(
        None,
        "--out",
        "-o",
        help="CSV file to write. Defaults to bench.output_path from the config.",
    ),
    jobs: int | None = typer.Option(
        None,
        "--jobs",
        "-j",
        min=1,
        help="Worker processes running (engine, trace) pairs. Defaults to bench.jobs from the config.",
    ),
    config_file: str | None = typer.Option(
        None,
        "--config",
        "-c",
        help="Path to configuration YAML file.",
    ),
) -> None:
    """Run every engine on every trace and write one CSV row per pair.

    Columns: engine, machines, ops, seed, elementary_ops, rebuild_count,
    wall_ns, answers_digest. Engines that agree on a trace produce the same
    digest. Engines that cannot run with the requested machine count are
    skipped with a warning. With more than one job the pairs run in worker
    processes and rows keep the engine-major order.
    """
    settings = load_settings(config_file)
    traces = traces or []
    engines = engines or settings.bench.engines
    out = out or Path(settings.bench.output_path)
    jobs = jobs or settings.bench.jobs
    if not traces:
        print_info("No trace files given; writing the CSV header only")

    pairs: list[tuple[Path, EngineSpec]] = []
    for name in engines:
        try:
            spec = EngineSpec.of(resolve_engine(settings, name, machines))
        except (SchedulingError, ValueError) as exc:
            print_warning(f"Skipping {name}: {exc}")
            continue
        pairs.extend((trace, spec) for trace in traces)

    records: list[BenchRecord] = []
    digests: dict[Path, set[str]] = {trace: set() for trace in traces}
    with closing(bench_pairs(pairs, jobs)) as results, track("Benchmarking", len(pairs)) as advance:
        for trace, spec in pairs:
            try:
                record = next(results)
            except ParseError as exc:
                print_error(f"{trace}:{exc.line_no}: {exc.message}")
                raise typer.Exit(code=1)
            except SchedulingError as exc:
                print_error(f"{spec.name} on {trace}: {exc}")
                raise typer.Exit(code=1)
            records.append(record)
            digests[trace].add(record.answers_digest)
            advance(1)

    with open(out, "w", encoding="utf-8", newline="") as f:
        rows = write_csv(records, f)
    logger.info("Wrote %d benchmark rows to %s", rows, out)

    if records:
        print_bench_table(records)

    for trace, seen in digests.items():
        if len(seen) > 1:
            print_warning(f"Engines disagree on {trace}: {len(seen)} distinct answer digests")
    print_success(f"Wrote {rows} rows to {out}")
