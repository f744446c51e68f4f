"""Console output, result views and progress displays for the CLI."""

from .console import (
    configure_logging,
    console,
    print_bench_table,
    print_engine_stats,
    print_error,
    print_header,
    print_info,
    print_key_value_table,
    print_muted,
    print_success,
    print_verdict,
    print_warning,
)
from .progress import spinner, track

__all__ = [
    "configure_logging",
    "console",
    "print_bench_table",
    "print_engine_stats",
    "print_error",
    "print_header",
    "print_info",
    "print_key_value_table",
    "print_muted",
    "print_success",
    "print_verdict",
    "print_warning",
    "spinner",
    "track",
]
