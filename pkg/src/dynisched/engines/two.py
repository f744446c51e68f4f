"""Two-machine engine: square-root parts keyed by end with per-part state tables.

Every reachable two-machine state has one of three forms: the later
component is active and compatible with the earlier one (a), active and
overlapping it (b), or inactive with the earlier one nested inside it (c).
Tables hold the part-query result for the states ``{I, successor of I}``
(active ``I``) and ``{latest active inside I, I}`` (inactive ``I``).
"""

import logging
from collections.abc import Hashable
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

from dynisched.core.errors import UnclassifiableState
from dynisched.engines.partitioned import EndKeyedEngine, EndPart
from dynisched.engines.universe import PartUniverse, run_part_query
from dynisched.models.intervals import contains
from dynisched.models.state import GreedyState, Real

logger = logging.getLogger(__name__)


class StateForm(StrEnum):
    COMPATIBLE = "a"
    OVERLAPPING = "b"
    NESTED = "c"


def classify_form(state: GreedyState, universe: PartUniverse) -> StateForm:
    """Form of a two-machine state over ``universe``.

    Raises:
        UnclassifiableState: The later component is inactive and the earlier
            one is not nested inside it.
    """
    first, second = state.components
    if universe.component_active(second):
        return StateForm.COMPATIBLE if first.busy <= second.start else StateForm.OVERLAPPING
    assert isinstance(second, Real)
    if isinstance(first, Real) and contains(second.interval, first.interval):
        return StateForm.NESTED
    raise UnclassifiableState(f"{state}: {second} is inactive and does not contain {first}")


@dataclass
class TwoTables:
    """Successor-state (``B``) and nested-state (``C``) results of one part."""

    universe: PartUniverse
    entries: dict[Hashable, tuple[int, GreedyState]] = field(default_factory=dict)

    def key(self, state: GreedyState) -> Hashable | None:
        if state.m != 2:
            return None
        first, second = state.components
        if not (isinstance(first, Real) and isinstance(second, Real)):
            return None
        universe = self.universe
        if universe.is_active(first.interval):
            succ = universe.succ_active(first.interval)
            if succ is not None and succ.id == second.interval.id:
                return ("B", first.interval.id)
        if not universe.is_active(second.interval):
            inside = universe.latest_active_inside(second.interval)
            if inside is not None and inside.id == first.interval.id:
                return ("C", second.interval.id)
        return None

    def keyed_states(self) -> list[GreedyState]:
        """Every state the tables key, in decreasing index-sum order."""
        universe = self.universe
        states: list[GreedyState] = []
        for interval in universe.reals:
            if universe.is_active(interval):
                succ = universe.succ_active(interval)
                if succ is not None:
                    states.append(GreedyState.of((Real(interval), Real(succ))))
            else:
                inside = universe.latest_active_inside(interval)
                if inside is not None:
                    states.append(GreedyState.of((Real(inside), Real(interval))))
        states.sort(key=universe.index_sum, reverse=True)
        return states

    def rebuild(self) -> None:
        """Fill every entry; each query only reads entries of larger index sum."""
        self.entries.clear()
        for state in self.keyed_states():
            run_part_query(self.universe, state, self)

    def b_entry(self, interval_id: int) -> tuple[int, GreedyState] | None:
        return self.entries.get(("B", interval_id))

    def c_entry(self, interval_id: int) -> tuple[int, GreedyState] | None:
        return self.entries.get(("C", interval_id))


class TwoMachineEngine(EndKeyedEngine):
    name = "two"
    alpha = Fraction(1, 2)
    min_machines = 2
    max_machines = 2

    def __init__(self, machines: int = 2, *, debug_assert: bool = False) -> None:
        super().__init__(machines, debug_assert=debug_assert)

    def _build_tables(self, universe: PartUniverse) -> TwoTables:
        tables = TwoTables(universe)
        tables.rebuild()
        logger.debug("Two-machine tables: %d entries over %d intervals", len(tables.entries), len(universe))
        return tables

    def rebuild_part_tables(self, j: int) -> None:
        self.rebuild_part(j)

    def part_query(self, part: EndPart, state: GreedyState) -> tuple[int, GreedyState]:
        return run_part_query(part.universe, state, part.tables)

    def stats(self) -> dict[str, int]:
        stats = super().stats()
        stats["table_entries"] = sum(len(part.tables.entries) for part in self.payloads)
        return stats
