"""Recompute-from-scratch engine: the reference every other engine is checked against."""

import math

from dynisched.engines.base import EngineBase
from dynisched.models.intervals import Interval
from dynisched.oracle import static_is, static_multi, static_wis


class NaiveEngine(EngineBase):
    """Stores the live set and runs the static greedy on every query.

    With ``weighted=True`` queries return the maximum compatible weight
    instead of the maximum compatible count (single machine only).
    """

    name = "naive"
    max_machines = None

    def __init__(self, machines: int = 1, *, debug_assert: bool = False, weighted: bool = False) -> None:
        super().__init__(machines, debug_assert=debug_assert)
        if weighted and machines != 1:
            raise ValueError("weighted scheduling is single-machine only")
        self.weighted = weighted

    def _insert(self, interval: Interval) -> None:
        self.counter.tick()

    def _delete(self, interval: Interval) -> None:
        self.counter.tick()

    def _query(self) -> int:
        n = len(self._live)
        # Sorting plus one pass; every machine is inspected per interval.
        self.counter.tick(n * max(1, math.ceil(math.log2(n + 1))) + n * self.machines)
        intervals = self._live.values()
        if self.weighted:
            return static_wis(intervals)
        if self.machines == 1:
            return static_is(intervals)
        return static_multi(intervals, self.machines).count
