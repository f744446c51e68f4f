"""Tests for the engine base, the naive engine, the factory and the single-mode engines."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynisched.core.base import SchedulerProtocol
from dynisched.core.errors import DuplicateId, ModeViolation, UnknownId, UnsupportedMachineCount
from dynisched.engines import (
    DeleteOnlyEngine,
    EngineMachineMismatch,
    InsertOnlyEngine,
    MultiMachineEngine,
    NaiveEngine,
    SqrtEngine,
    TwoMachineEngine,
    create_engine,
    engine_names,
    machine_range,
)
from dynisched.models.trace import DeleteOp, InsertOp, QueryOp
from tests.helpers import FIX1, FIX2, Op, insert_ops, oracle_answers, replay, traces


class TestNaiveEngine:
    """Tests for the recompute-from-scratch engine."""

    def test_fix1_answer(self) -> None:
        engine = NaiveEngine()
        assert replay(engine, [*insert_ops(FIX1.values()), QueryOp()]) == [3]
        assert len(engine) == 4

    def test_delete_changes_answer(self) -> None:
        ops = [*insert_ops(FIX2.values()), QueryOp(), DeleteOp(id=2), DeleteOp(id=3), QueryOp()]
        assert replay(NaiveEngine(), ops) == [2, 1]

    def test_two_machines(self) -> None:
        assert replay(NaiveEngine(2), [*insert_ops(FIX1.values()), QueryOp()]) == [4]

    def test_weighted(self) -> None:
        ops: list[Op] = [
            InsertOp(id=1, s=0, f=2, weight=2),
            InsertOp(id=2, s=1, f=4, weight=5),
            InsertOp(id=3, s=3, f=5, weight=2),
            QueryOp(),
        ]
        assert replay(NaiveEngine(weighted=True), ops) == [5]

    def test_weighted_needs_one_machine(self) -> None:
        with pytest.raises(ValueError):
            NaiveEngine(2, weighted=True)

    def test_empty_query(self) -> None:
        assert NaiveEngine().apply(QueryOp()) == 0

    def test_satisfies_protocol(self) -> None:
        assert isinstance(NaiveEngine(), SchedulerProtocol)


class TestEngineBase:
    """Tests for id bookkeeping and debug shadow checks."""

    def test_duplicate_insert(self) -> None:
        engine = SqrtEngine()
        engine.apply(InsertOp(id=1, s=0, f=2))
        with pytest.raises(DuplicateId):
            engine.apply(InsertOp(id=1, s=5, f=6))

    def test_unknown_delete(self) -> None:
        with pytest.raises(UnknownId):
            SqrtEngine().apply(DeleteOp(id=9))

    def test_id_reuse_after_delete_rejected(self) -> None:
        engine = SqrtEngine()
        replay(engine, [InsertOp(id=1, s=0, f=2), DeleteOp(id=1)])
        with pytest.raises(DuplicateId):
            engine.apply(InsertOp(id=1, s=3, f=4))
        assert len(engine) == 0

    def test_counters(self) -> None:
        engine = SqrtEngine()
        replay(engine, [*insert_ops(FIX1.values()), QueryOp()])
        stats = engine.stats()
        assert stats["live"] == 4
        assert stats["queries"] == 1
        assert engine.elementary_ops > 0
        assert stats["elementary_ops"] == engine.elementary_ops

    def test_debug_assert_passes_on_correct_engine(self) -> None:
        engine = SqrtEngine(debug_assert=True)
        assert replay(engine, [*insert_ops(FIX1.values()), QueryOp()]) == [3]

    def test_machine_bounds(self) -> None:
        with pytest.raises(UnsupportedMachineCount):
            SqrtEngine(2)
        with pytest.raises(UnsupportedMachineCount):
            TwoMachineEngine(3)
        with pytest.raises(UnsupportedMachineCount):
            MultiMachineEngine(7)


class TestFactory:
    """Tests for engine creation by name."""

    def test_names(self) -> None:
        assert engine_names() == ["naive", "sqrt", "cuberoot", "two", "multi", "deleteonly", "insertonly"]

    def test_machine_ranges(self) -> None:
        assert machine_range("naive") == ">= 1"
        assert machine_range("two") == "2"
        assert machine_range("multi") == "3..6"
        assert machine_range("sqrt") == "1"

    def test_create(self) -> None:
        assert isinstance(create_engine("sqrt"), SqrtEngine)
        assert create_engine("multi", 4).machines == 4
        assert create_engine("naive", 5).machines == 5

    def test_unknown_engine(self) -> None:
        with pytest.raises(ValueError, match="Unknown engine"):
            create_engine("quantum")

    def test_machine_mismatch(self) -> None:
        with pytest.raises(EngineMachineMismatch):
            create_engine("two", 1)
        with pytest.raises(EngineMachineMismatch):
            create_engine("sqrt", 2)

    def test_multi_above_six_is_unsupported(self) -> None:
        with pytest.raises(UnsupportedMachineCount):
            create_engine("multi", 7)

    def test_weighted_only_for_naive(self) -> None:
        with pytest.raises(ValueError, match="weighted"):
            create_engine("sqrt", weighted=True)
        assert create_engine("naive", weighted=True).weighted


@st.composite
def delete_phase_traces(draw: st.DrawFn) -> list[Op]:
    """Inserts first, then only deletes and queries."""
    n = draw(st.integers(0, 15))
    ops: list[Op] = []
    for id in range(n):
        s = draw(st.integers(0, 25))
        ops.append(InsertOp(id=id, s=s, f=s + draw(st.integers(1, 8))))
    ops.append(QueryOp())
    for id in draw(st.permutations(range(n))):
        ops.append(DeleteOp(id=id))
        if draw(st.booleans()):
            ops.append(QueryOp())
    ops.append(QueryOp())
    return ops


class TestSingleModeEngines:
    """Tests for the delete-only and insert-only engines."""

    def test_delete_only_answers(self) -> None:
        ops = [*insert_ops(FIX2.values()), QueryOp(), DeleteOp(id=2), QueryOp(), DeleteOp(id=3), QueryOp()]
        assert replay(DeleteOnlyEngine(), ops) == [2, 1, 1]

    def test_delete_only_rejects_late_insert(self) -> None:
        engine = DeleteOnlyEngine()
        replay(engine, [*insert_ops(FIX1.values()), DeleteOp(id=1)])
        with pytest.raises(ModeViolation):
            engine.apply(InsertOp(id=9, s=0, f=1))

    def test_insert_only_rejects_delete(self) -> None:
        engine = InsertOnlyEngine()
        engine.apply(InsertOp(id=1, s=0, f=2))
        with pytest.raises(ModeViolation):
            engine.apply(DeleteOp(id=1))

    def test_insert_only_stats(self) -> None:
        engine = InsertOnlyEngine()
        replay(engine, [*insert_ops(FIX2.values()), QueryOp()])
        assert engine.stats()["deactivations"] == 1

    @settings(max_examples=50, deadline=None)
    @given(delete_phase_traces())
    def test_delete_only_matches_naive(self, ops: list[Op]) -> None:
        assert replay(DeleteOnlyEngine(), ops) == oracle_answers(ops)

    @settings(max_examples=50, deadline=None)
    @given(traces(deletes=False))
    def test_insert_only_matches_naive(self, ops: list[Op]) -> None:
        assert replay(InsertOnlyEngine(), ops) == oracle_answers(ops)
