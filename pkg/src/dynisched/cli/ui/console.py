"""Shared rich console, log routing and the result views of the dynisched CLI."""

import logging
from collections.abc import Iterable, Mapping

from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from dynisched.bench.runner import BenchRecord

# Shared by command output, log records and progress bars
console = Console()

BRAND_COLOR = "bright_cyan"
SUCCESS_COLOR = "green"
WARNING_COLOR = "yellow"
ERROR_COLOR = "red"
MUTED_COLOR = "dim"


def configure_logging(level: str | int) -> None:
    """Route ``dynisched.*`` loggers through the shared console."""
    handler = RichHandler(console=console, show_path=False, rich_tracebacks=True)
    root = logging.getLogger("dynisched")
    root.handlers = [handler]
    root.setLevel(level)
    root.propagate = False


def print_header(title: str) -> None:
    console.print(
        Panel(
            Text(title, style=f"bold {BRAND_COLOR}", justify="center"),
            border_style=BRAND_COLOR,
            padding=(0, 2),
        )
    )


def print_success(message: str) -> None:
    console.print(f"[{SUCCESS_COLOR}]\\[+][/{SUCCESS_COLOR}] {message}")


def print_warning(message: str) -> None:
    console.print(f"[{WARNING_COLOR}]\\[!][/{WARNING_COLOR}] {message}")


def print_error(message: str) -> None:
    console.print(f"[{ERROR_COLOR}]\\[x][/{ERROR_COLOR}] {message}")


def print_info(message: str) -> None:
    console.print(f"[{BRAND_COLOR}]\\[*][/{BRAND_COLOR}] {message}")


def print_muted(message: str) -> None:
    console.print(f"[{MUTED_COLOR}]{message}[/{MUTED_COLOR}]")


def print_verdict(passed: bool, detail: str) -> None:
    """PASS/FAIL line shared by ``verify`` and ``reduce``."""
    if passed:
        print_success(detail)
    else:
        print_error(detail)


def print_key_value_table(title: str, data: Mapping[str, str]) -> None:
    table = Table(title=title, title_style=BRAND_COLOR, show_header=False)
    table.add_column("Key", style="bold")
    table.add_column("Value")
    for key, value in data.items():
        table.add_row(key, value)
    console.print(table)


def print_engine_stats(name: str, machines: int, stats: Mapping[str, int]) -> None:
    """Engine counters, numbers right-aligned with thousands separators."""
    table = Table(title=f"{name} (m={machines})", title_style=BRAND_COLOR, show_header=False)
    table.add_column("Counter", style="bold")
    table.add_column("Value", justify="right")
    for key, value in sorted(stats.items()):
        table.add_row(key, f"{value:,}")
    console.print(table)


def print_bench_table(records: Iterable[BenchRecord]) -> None:
    """One line per benchmark row; wall time shown in milliseconds."""
    table = Table(title="Benchmark", title_style=BRAND_COLOR)
    table.add_column("Engine", style="bold")
    table.add_column("m", justify="right")
    table.add_column("Ops", justify="right")
    table.add_column("Elementary ops", justify="right")
    table.add_column("Rebuilds", justify="right")
    table.add_column("Wall ms", justify="right")
    table.add_column("Digest", style=MUTED_COLOR)
    for record in records:
        table.add_row(
            record.engine,
            str(record.machines),
            str(record.ops),
            f"{record.elementary_ops:,}",
            str(record.rebuild_count),
            f"{record.wall_ns / 1e6:.1f}",
            record.answers_digest,
        )
    console.print(table)
