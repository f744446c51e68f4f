"""Progress displays for long-running commands."""

from collections.abc import Callable, Generator
from contextlib import contextmanager

from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)

from dynisched.cli.ui.console import BRAND_COLOR, console


@contextmanager
def spinner(message: str) -> Generator[None, None, None]:
    """Spinner for a single blocking step, e.g. solving every guess of a reduction."""
    with console.status(f"[{BRAND_COLOR}]{message}[/{BRAND_COLOR}]"):
        yield


@contextmanager
def track(description: str, total: int) -> Generator[Callable[[int], None], None, None]:
    """Transient bar over ``total`` steps; yields ``advance(steps)``.

    Usage::

        with track("Benchmarking", len(traces) * len(engines)) as advance:
            for job in jobs:
                run(job)
                advance(1)
    """
    progress = Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=console,
        transient=True,
    )
    with progress:
        task = progress.add_task(description, total=total)

        def advance(steps: int) -> None:
            progress.advance(task, steps)

        yield advance
