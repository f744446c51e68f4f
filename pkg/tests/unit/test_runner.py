"""Tests for trace execution, engine cross-checks and benchmark output."""

import io
from pathlib import Path

import pytest

from dynisched.bench.runner import (
    BENCH_COLUMNS,
    BenchRecord,
    EngineSpec,
    answers_digest,
    bench_pairs,
    bench_trace,
    compare_answers,
    run_trace,
    verify,
    write_csv,
)
from dynisched.bench.workload import WorkloadParams, generate
from dynisched.engines import CubeRootEngine, NaiveEngine, SqrtEngine, create_engine
from dynisched.models.trace import DeleteOp, InsertOp, ParseError, QueryOp, write_trace
from tests.helpers import FIX1, Op, insert_ops


def _numbered(ops: list[Op]) -> list[tuple[int, Op]]:
    return list(enumerate(ops, start=1))


class TestAnswersDigest:
    """Tests for the answer stream digest."""

    def test_empty_is_offset_basis(self) -> None:
        assert answers_digest([]) == "cbf29ce484222325"

    def test_sensitive_to_values_and_boundaries(self) -> None:
        assert answers_digest([1]) != answers_digest([2])
        assert answers_digest([12]) != answers_digest([1, 2])
        assert len(answers_digest([3, 4])) == 16


class TestRunTrace:
    """Tests for run_trace."""

    def test_answers(self) -> None:
        ops = _numbered([*insert_ops(FIX1.values()), QueryOp(), DeleteOp(id=2), QueryOp()])
        assert run_trace(ops, NaiveEngine()) == [3, 2]

    def test_illegal_operation_reports_line(self) -> None:
        ops = [(1, InsertOp(id=1, s=0, f=2)), (4, DeleteOp(id=9))]
        with pytest.raises(ParseError) as exc_info:
            run_trace(ops, SqrtEngine())
        assert exc_info.value.line_no == 4
        assert "unknown interval id 9" in exc_info.value.message

    def test_duplicate_id_reports_line(self) -> None:
        ops = [(1, InsertOp(id=1, s=0, f=2)), (2, InsertOp(id=1, s=3, f=4))]
        with pytest.raises(ParseError) as exc_info:
            run_trace(ops, NaiveEngine())
        assert exc_info.value.line_no == 2

    def test_out_of_range_coordinate_reports_line(self) -> None:
        ops = [(1, InsertOp(id=1, s=0, f=2)), (3, InsertOp(id=2, s=0, f=1 << 61))]
        with pytest.raises(ParseError) as exc_info:
            run_trace(ops, SqrtEngine())
        assert exc_info.value.line_no == 3
        assert "out of range" in exc_info.value.message

    def test_verify_out_of_range_coordinate_reports_line(self) -> None:
        ops = [(5, InsertOp(id=1, s=-(1 << 61), f=0))]
        with pytest.raises(ParseError) as exc_info:
            verify(ops, NaiveEngine(), SqrtEngine())
        assert exc_info.value.line_no == 5


class TestVerify:
    """Tests for answer comparison."""

    def test_compare_equal(self) -> None:
        assert compare_answers([1, 2, 3], [1, 2, 3]).passed

    def test_compare_first_difference(self) -> None:
        result = compare_answers([1, 2, 3], [1, 5, 4])
        assert (result.index, result.expected, result.actual) == (1, 2, 5)
        assert str(result) == "FAIL at query 1: 2 != 5"

    def test_compare_length_mismatch(self) -> None:
        result = compare_answers([1, 2], [1, 2, 3])
        assert not result.passed
        assert (result.index, result.expected, result.actual) == (2, None, 3)

    def test_engines_agree(self) -> None:
        ops = generate(WorkloadParams(ops=300, seed=9, coord_range=200, max_length=30))
        assert str(verify(_numbered(ops), NaiveEngine(), CubeRootEngine())) == "PASS"

    def test_engines_disagree(self) -> None:
        ops = _numbered([QueryOp(), InsertOp(id=1, s=0, f=2, weight=5), QueryOp()])
        result = verify(ops, NaiveEngine(), NaiveEngine(weighted=True))
        assert (result.passed, result.index, result.expected, result.actual) == (False, 1, 1, 5)


class TestBench:
    """Tests for benchmark records and CSV output."""

    def test_bench_trace(self, trace_file: Path) -> None:
        record = bench_trace(trace_file, NaiveEngine)
        assert record.engine == "naive"
        assert record.machines == 1
        assert record.ops == 5
        assert record.seed == -1
        assert record.answers_digest == answers_digest([3])
        assert record.wall_ns >= 0

    def test_seed_from_header(self, tmp_path: Path) -> None:
        params = WorkloadParams(ops=40, seed=7)
        path = tmp_path / "g.trace"
        write_trace(path, generate(params), params.header())
        record = bench_trace(path, SqrtEngine)
        assert record.seed == 7
        assert record.ops == 40

    def test_write_csv(self) -> None:
        record = BenchRecord(
            engine="sqrt",
            machines=1,
            ops=10,
            seed=3,
            elementary_ops=120,
            rebuild_count=2,
            wall_ns=999,
            answers_digest="00000000000000ff",
        )
        out = io.StringIO()
        assert write_csv([record, record], out) == 2
        lines = out.getvalue().splitlines()
        assert lines[0] == ",".join(BENCH_COLUMNS)
        assert lines[1] == "sqrt,1,10,3,120,2,999,00000000000000ff"
        assert len(lines) == 3

    def test_write_csv_header_only(self) -> None:
        out = io.StringIO()
        assert write_csv([], out) == 0
        assert out.getvalue() == ",".join(BENCH_COLUMNS) + "\n"


class TestBenchPairs:
    """Tests for benchmarking (engine, trace) pairs, in order or in worker processes."""

    @pytest.fixture
    def traces(self, tmp_path: Path) -> list[Path]:
        paths = []
        for seed in (1, 2):
            params = WorkloadParams(ops=120, seed=seed, coord_range=300, max_length=40)
            path = tmp_path / f"w{seed}.trace"
            write_trace(path, generate(params), params.header())
            paths.append(path)
        return paths

    def test_engine_spec_builds_fresh_engines(self) -> None:
        spec = EngineSpec.of(create_engine("multi", 4, eager_tables=False))
        assert spec == EngineSpec("multi", 4, False, False)
        first, second = spec.build(), spec.build()
        assert first is not second
        assert first.machines == 4

    def test_parallel_rows_match_sequential(self, traces: list[Path]) -> None:
        pairs = [(trace, EngineSpec(name, 1)) for name in ("naive", "sqrt", "cuberoot") for trace in traces]
        sequential = list(bench_pairs(pairs))
        parallel = list(bench_pairs(pairs, jobs=2))
        assert [(r.engine, r.seed, r.answers_digest) for r in parallel] == [
            (r.engine, r.seed, r.answers_digest) for r in sequential
        ]
        by_trace = {r.seed: r.answers_digest for r in sequential if r.engine == "naive"}
        assert all(r.answers_digest == by_trace[r.seed] for r in parallel)

    def test_worker_parse_error_keeps_line(self, tmp_path: Path) -> None:
        bad = tmp_path / "bad.trace"
        bad.write_text("I 1 0 2\nQ\nD 7\n", encoding="utf-8")
        with pytest.raises(ParseError) as exc_info:
            list(bench_pairs([(bad, EngineSpec("sqrt", 1))], jobs=2))
        assert exc_info.value.line_no == 3
        assert "unknown interval id 7" in exc_info.value.message
