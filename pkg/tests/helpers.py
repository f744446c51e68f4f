"""Shared interval fixtures, trace strategies and replay helpers for tests."""

from collections.abc import Iterable, Sequence

from hypothesis import strategies as st

from dynisched.engines.base import EngineBase
from dynisched.engines.naive import NaiveEngine
from dynisched.models.intervals import NEG_INF, Interval, IntervalStamper
from dynisched.models.state import Barred, Component, GreedyState, Real
from dynisched.models.trace import DeleteOp, InsertOp, QueryOp

Op = InsertOp | DeleteOp | QueryOp

FIX1 = {"A": (0, 2), "B": (3, 5), "C": (1, 4), "D": (6, 7)}
FIX2 = {"P": (0, 10), "Q": (2, 3), "R": (4, 6)}
FIX3 = {"E1": (1, 2), "E2": (0, 3), "E3": (2, 4), "E4": (3, 5)}
FIXF = {"I1": (0, 2), "I2": (4, 6), "I3": (5, 8), "I4": (7, 10)}


def stamp_named(pairs: dict[str, tuple[int, int]], first_id: int = 1) -> dict[str, Interval]:
    """Stamp intervals in dict order; ids count up from ``first_id``."""
    stamper = IntervalStamper()
    return {
        name: stamper.stamp(first_id + k, s, f) for k, (name, (s, f)) in enumerate(pairs.items())
    }


def stamp_all(pairs: Iterable[tuple[int, int]]) -> list[Interval]:
    stamper = IntervalStamper()
    return [stamper.stamp(k, s, f) for k, (s, f) in enumerate(pairs)]


def insert_ops(pairs: Iterable[tuple[int, int]], first_id: int = 1) -> list[Op]:
    return [InsertOp(id=first_id + k, s=s, f=f) for k, (s, f) in enumerate(pairs)]


def replay(engine: EngineBase, ops: Sequence[Op]) -> list[int]:
    answers = []
    for op in ops:
        answer = engine.apply(op)
        if answer is not None:
            answers.append(answer)
    return answers


def oracle_answers(ops: Sequence[Op], machines: int = 1) -> list[int]:
    return replay(NaiveEngine(machines), ops)


@st.composite
def traces(
    draw: st.DrawFn,
    max_ops: int = 40,
    coord: int = 30,
    max_length: int = 8,
    deletes: bool = True,
) -> list[Op]:
    """A legal trace ending with a query; deletes only name live ids."""
    n = draw(st.integers(0, max_ops))
    kinds = "IIDQ" if deletes else "IIQ"
    live: list[int] = []
    ops: list[Op] = []
    next_id = 0
    for _ in range(n):
        kind = draw(st.sampled_from(kinds))
        if kind == "D" and live:
            victim = draw(st.sampled_from(live))
            live.remove(victim)
            ops.append(DeleteOp(id=victim))
        elif kind == "Q":
            ops.append(QueryOp())
        else:
            s = draw(st.integers(0, coord - 1))
            length = draw(st.integers(1, max_length))
            ops.append(InsertOp(id=next_id, s=s, f=s + length))
            live.append(next_id)
            next_id += 1
    ops.append(QueryOp())
    return ops


@st.composite
def interval_sets(draw: st.DrawFn, max_size: int = 12, coord: int = 20, max_length: int = 8) -> list[Interval]:
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, coord - 1), st.integers(1, max_length)),
            max_size=max_size,
        )
    )
    return stamp_all((s, s + length) for s, length in pairs)


@st.composite
def entry_states(
    draw: st.DrawFn,
    max_size: int = 10,
    coord: int = 30,
    max_length: int = 8,
    max_machines: int = 4,
) -> tuple[list[Interval], GreedyState]:
    """One part's intervals and an entry state whose real components all end before the part's first end.

    Machines drawn as ``None`` are idle since before anything started.
    """
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, coord - 1), st.integers(1, max_length)),
            min_size=1,
            max_size=max_size,
        )
    )
    m = draw(st.integers(1, max_machines))
    first_end = min(s + length for s, length in pairs)
    ends = draw(st.lists(st.none() | st.integers(-max_length, first_end - 1), min_size=m, max_size=m))
    stamper = IntervalStamper()
    part = [stamper.stamp(k, s, s + length) for k, (s, length) in enumerate(pairs)]
    components: list[Component] = [
        Barred(NEG_INF) if f is None else Real(stamper.stamp(-1 - k, f - 1, f)) for k, f in enumerate(ends)
    ]
    return part, GreedyState.of(components)
