"""Workload generation, trace execution, verification and benchmarking."""

from .runner import (
    BENCH_COLUMNS,
    BenchRecord,
    VerifyResult,
    answers_digest,
    bench_trace,
    compare_answers,
    run_trace,
    verify,
    write_csv,
)
from .workload import BadMix, Mix, WorkloadGenerator, WorkloadModel, WorkloadParams, generate, parse_mix

__all__ = [
    "BENCH_COLUMNS",
    "BadMix",
    "BenchRecord",
    "Mix",
    "VerifyResult",
    "WorkloadGenerator",
    "WorkloadModel",
    "WorkloadParams",
    "answers_digest",
    "bench_trace",
    "compare_answers",
    "generate",
    "parse_mix",
    "run_trace",
    "verify",
    "write_csv",
]
