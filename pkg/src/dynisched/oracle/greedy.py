"""Brute-force greedy references used as ground truth by every engine test."""

from collections.abc import Iterable, Sequence

from pydantic import BaseModel, Field

from dynisched.core.errors import UnknownId
from dynisched.models.intervals import NEG_INF, Endpoint, Interval, contains, end_key
from dynisched.models.state import GreedyState, Real


class MachineAssignment(BaseModel):
    """Outcome of the multi-machine greedy: accepted ids per machine."""

    machines: list[list[int]] = Field(..., description="Accepted interval ids per machine, in end order")
    count: int = Field(..., ge=0, description="Total number of accepted intervals")


def brute_lc(intervals: Iterable[Interval], cutoff: Endpoint) -> Interval | None:
    """Minimum-end interval starting at or after ``cutoff``, by linear scan."""
    best = None
    for interval in intervals:
        if interval.start >= cutoff and (best is None or interval.end < best.end):
            best = interval
    return best


def static_is(intervals: Iterable[Interval]) -> int:
    """Size of a maximum compatible subset (earliest-end greedy)."""
    count = 0
    free = NEG_INF
    for interval in sorted(intervals, key=end_key):
        if interval.start >= free:
            count += 1
            free = interval.end
    return count


def greedy_chain(intervals: Sequence[Interval], first: Interval) -> list[Interval]:
    """``[first, LC(first), LC(LC(first)), ...]`` over ``intervals``."""
    if first not in intervals:
        raise UnknownId(first.id)
    chain = [first]
    nxt = brute_lc(intervals, first.end)
    while nxt is not None:
        chain.append(nxt)
        nxt = brute_lc(intervals, nxt.end)
    return chain


def is_active(interval: Interval, intervals: Iterable[Interval]) -> bool:
    """Active iff no other interval is nested inside it."""
    return not any(other.id != interval.id and contains(interval, other) for other in intervals)


def active_subset(intervals: Sequence[Interval]) -> list[Interval]:
    """Quadratic containment scan, in end order."""
    return sorted((i for i in intervals if is_active(i, intervals)), key=end_key)


def latest_inside(interval: Interval, intervals: Iterable[Interval]) -> Interval | None:
    """The latest-ending interval nested inside ``interval`` (itself excluded)."""
    inner = [o for o in intervals if o.id != interval.id and contains(interval, o)]
    return max(inner, key=end_key) if inner else None


def static_multi(intervals: Iterable[Interval], m: int) -> MachineAssignment:
    """Greedy on ``m`` machines: earliest end first, onto the latest-busy compatible machine."""
    if m < 1:
        raise ValueError(f"machine count must be positive, got {m}")
    busy = [NEG_INF] * m
    machines: list[list[int]] = [[] for _ in range(m)]
    for interval in sorted(intervals, key=end_key):
        pick = -1
        for k in range(m):
            if busy[k] <= interval.start and (pick < 0 or busy[k] > busy[pick]):
                pick = k
        if pick >= 0:
            busy[pick] = interval.end
            machines[pick].append(interval.id)
    return MachineAssignment(machines=machines, count=sum(len(ids) for ids in machines))


def state_trace(intervals: Iterable[Interval], m: int) -> list[GreedyState]:
    """The greedy state before the first and after every considered interval."""
    state = GreedyState.initial(m)
    states = [state]
    for interval in sorted(intervals, key=end_key):
        pos = state.latest_compatible(interval.start)
        if pos is not None:
            state = state.replace_at(pos, Real(interval))
        states.append(state)
    return states


def part_sim_accepted(
    universe: Iterable[Interval], state: GreedyState
) -> tuple[list[Interval], GreedyState]:
    """Resume the multi-machine greedy from ``state`` over one part.

    Only intervals ending after the state's horizon are considered; Barred
    components accept any interval starting at or after their busy-until
    value but are never intervals themselves.
    """
    horizon = state.horizon
    accepted: list[Interval] = []
    for interval in sorted(universe, key=end_key):
        if interval.end <= horizon:
            continue
        pos = state.latest_compatible(interval.start)
        if pos is None:
            continue
        state = state.replace_at(pos, Real(interval))
        accepted.append(interval)
    return accepted, state


def part_sim(universe: Iterable[Interval], state: GreedyState) -> tuple[int, GreedyState]:
    """Accepted count and exit state of a part query."""
    accepted, exit_state = part_sim_accepted(universe, state)
    return len(accepted), exit_state
