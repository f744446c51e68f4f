"""Trace execution, engine cross-verification and benchmark records."""

import csv
import logging
import time
from collections.abc import Callable, Generator, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from pydantic import BaseModel, Field

from dynisched.core.errors import OracleMismatch, SchedulingError
from dynisched.engines.base import EngineBase
from dynisched.engines.factory import create_engine
from dynisched.models.trace import DeleteOp, InsertOp, ParseError, QueryOp, read_header, read_trace

logger = logging.getLogger(__name__)

TraceLine = tuple[int, InsertOp | DeleteOp | QueryOp]

BENCH_COLUMNS = (
    "engine",
    "machines",
    "ops",
    "seed",
    "elementary_ops",
    "rebuild_count",
    "wall_ns",
    "answers_digest",
)

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def answers_digest(answers: Iterable[int]) -> str:
    """64-bit FNV-1a over each answer in decimal followed by a newline, as 16 hex digits."""
    h = FNV_OFFSET
    for answer in answers:
        for byte in f"{answer}\n".encode("ascii"):
            h = ((h ^ byte) * FNV_PRIME) & _MASK64
    return f"{h:016x}"


def run_trace(ops: Iterable[TraceLine], engine: EngineBase) -> list[int]:
    """Apply numbered trace operations; returns one answer per query.

    Raises:
        ParseError: The engine rejected an operation; carries its line number.
        OracleMismatch: Debug shadow checking found a wrong answer.
    """
    answers: list[int] = []
    for line_no, op in ops:
        try:
            answer = engine.apply(op)
        except OracleMismatch:
            raise
        except (SchedulingError, ValueError) as exc:
            raise ParseError(line_no, str(exc))
        if answer is not None:
            answers.append(answer)
    logger.info("%s answered %d queries over %d live intervals", engine.name, len(answers), len(engine))
    return answers


@dataclass(frozen=True, slots=True)
class VerifyResult:
    """Outcome of comparing two answer streams; ``index`` is the first divergent query (0-based)."""

    passed: bool
    index: int | None = None
    expected: int | None = None
    actual: int | None = None

    def __str__(self) -> str:
        if self.passed:
            return "PASS"
        return f"FAIL at query {self.index}: {self.expected} != {self.actual}"


def compare_answers(first: Sequence[int], second: Sequence[int]) -> VerifyResult:
    for index, (a, b) in enumerate(zip(first, second, strict=False)):
        if a != b:
            return VerifyResult(False, index, a, b)
    if len(first) != len(second):
        index = min(len(first), len(second))
        return VerifyResult(
            False,
            index,
            first[index] if index < len(first) else None,
            second[index] if index < len(second) else None,
        )
    return VerifyResult(True)


def verify(ops: Iterable[TraceLine], first: EngineBase, second: EngineBase) -> VerifyResult:
    """Feed both engines in lockstep and stop at the first query they disagree on.

    Raises:
        ParseError: Either engine rejected an operation.
    """
    index = 0
    for line_no, op in ops:
        try:
            a = first.apply(op)
            b = second.apply(op)
        except OracleMismatch:
            raise
        except (SchedulingError, ValueError) as exc:
            raise ParseError(line_no, str(exc))
        if a is None:
            continue
        if a != b:
            logger.info("%s and %s diverge at query %d (line %d)", first.name, second.name, index, line_no)
            return VerifyResult(False, index, a, b)
        index += 1
    logger.info("%s and %s agree on %d queries", first.name, second.name, index)
    return VerifyResult(True)


class BenchRecord(BaseModel):
    """One benchmark row."""

    engine: str
    machines: int
    ops: int
    seed: int = Field(default=-1, description="Generator seed from the trace header, -1 when absent")
    elementary_ops: int
    rebuild_count: int
    wall_ns: int
    answers_digest: str

    def row(self) -> list[str]:
        return [str(getattr(self, column)) for column in BENCH_COLUMNS]


def bench_trace(trace: Path | str, engine_factory: Callable[[], EngineBase]) -> BenchRecord:
    """Run one trace on a fresh engine and measure it."""
    header = read_header(trace)
    ops = read_trace(trace)
    engine = engine_factory()
    began = time.perf_counter_ns()
    answers = run_trace(ops, engine)
    wall_ns = time.perf_counter_ns() - began
    try:
        seed = int(header.get("seed", -1))
    except ValueError:
        seed = -1
    record = BenchRecord(
        engine=engine.name,
        machines=engine.machines,
        ops=len(ops),
        seed=seed,
        elementary_ops=engine.elementary_ops,
        rebuild_count=engine.rebuild_count,
        wall_ns=wall_ns,
        answers_digest=answers_digest(answers),
    )
    logger.info(
        "bench %s m=%d on %s: %d elementary ops, %d rebuilds",
        record.engine,
        record.machines,
        trace,
        record.elementary_ops,
        record.rebuild_count,
    )
    return record


@dataclass(frozen=True, slots=True)
class EngineSpec:
    """How to build a fresh engine; picklable, so pairs can run in worker processes."""

    name: str
    machines: int
    debug_assert: bool = False
    eager_tables: bool = True

    @classmethod
    def of(cls, engine: EngineBase) -> "EngineSpec":
        eager = getattr(engine, "eager_tables", True)
        return cls(engine.name, engine.machines, engine.debug_assert, eager)

    def build(self) -> EngineBase:
        return create_engine(
            self.name, self.machines, debug_assert=self.debug_assert, eager_tables=self.eager_tables
        )


def _bench_pair(trace: Path, spec: EngineSpec) -> BenchRecord:
    return bench_trace(trace, spec.build)


def bench_pairs(
    pairs: Sequence[tuple[Path, EngineSpec]], jobs: int = 1
) -> Generator[BenchRecord, None, None]:
    """Benchmark every (trace, engine) pair, yielding records in input order.

    With ``jobs > 1`` the pairs run in a process pool; each worker builds its
    own engine. Wall times then include contention between workers.

    Raises:
        ParseError: A trace line was malformed or rejected by the engine.
        OracleMismatch: Debug shadow checking found a wrong answer.
    """
    if jobs <= 1:
        for trace, spec in pairs:
            yield _bench_pair(trace, spec)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_bench_pair, trace, spec) for trace, spec in pairs]
        try:
            for future in futures:
                yield future.result()
        finally:
            for future in futures:
                future.cancel()


def write_csv(records: Iterable[BenchRecord], out: TextIO) -> int:
    """Write the header and one row per record; returns the number of rows."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    count = 0
    for record in records:
        writer.writerow(record.row())
        count += 1
    return count
