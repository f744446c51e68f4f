"""Active-set maintenance through the dominance staircase.

Interval ``I`` maps to the point ``(start, -end)``; it is active exactly when
no other point dominates it, i.e. nothing is nested inside ``I``. The
non-dominated points form a staircase that is increasing in start and in end.

A front is single-mode: the first mutation fixes it as delete-only or
insert-only and a mutation of the other kind raises ``ModeViolation``.
"""

import logging
from collections.abc import Iterable
from enum import StrEnum

from sortedcontainers import SortedKeyList, SortedList

from dynisched.core.counter import OpCounter
from dynisched.core.errors import DuplicateId, ModeViolation, UnknownId
from dynisched.core.segment_tree import MinSegmentTree
from dynisched.models.intervals import POS_INF, Endpoint, Interval, start_key

logger = logging.getLogger(__name__)

_DELETED = (POS_INF, -1)


class FrontMode(StrEnum):
    DELETE_ONLY = "delete-only"
    INSERT_ONLY = "insert-only"


class DominanceFront:
    """The active subset of a delete-only or insert-only interval collection."""

    def __init__(self, counter: OpCounter | None = None) -> None:
        self.counter = counter or OpCounter()
        self.mode: FrontMode | None = None
        self._live: dict[int, Interval] = {}
        self._staircase: SortedKeyList = SortedKeyList(key=start_key)
        self._stair_ends: SortedList = SortedList()
        self._active_ids: set[int] = set()
        # Delete-only range tree over the build-time start order.
        self._order: list[Interval] = []
        self._pos: dict[int, int] = {}
        self._tree: MinSegmentTree | None = None
        self.activation_events = 0
        self.deactivation_events = 0

    @classmethod
    def build(cls, intervals: Iterable[Interval], counter: OpCounter | None = None) -> "DominanceFront":
        """Build the front in ``O(n log n)``."""
        front = cls(counter)
        order = sorted(intervals, key=start_key)
        front._order = order
        for pos, interval in enumerate(order):
            if interval.id in front._pos:
                raise DuplicateId(interval.id)
            front._pos[interval.id] = pos
        front._live = {interval.id: interval for interval in order}
        front._tree = MinSegmentTree.build(
            [(interval.end, pos) for pos, interval in enumerate(order)], _DELETED, front.counter
        )
        suffix_min = POS_INF
        actives = []
        for interval in reversed(order):
            front.counter.tick()
            if interval.end < suffix_min:
                actives.append(interval)
                suffix_min = interval.end
        actives.reverse()
        front._staircase.update(actives)
        front._stair_ends.update(interval.end for interval in actives)
        front._active_ids.update(interval.id for interval in actives)
        return front

    def __len__(self) -> int:
        return len(self._live)

    def __contains__(self, id: object) -> bool:
        return id in self._live

    def intervals(self) -> list[Interval]:
        """Every live interval, active or not."""
        return list(self._live.values())

    def is_active(self, id: int) -> bool:
        if id not in self._live:
            raise UnknownId(id)
        return id in self._active_ids

    def actives(self) -> list[Interval]:
        """Active intervals in start order (equivalently end order)."""
        return list(self._staircase)

    def active_succ(self, cutoff: Endpoint) -> Interval | None:
        """Earliest-ending active interval starting at or after ``cutoff``."""
        self.counter.tick()
        pos = self._staircase.bisect_key_left(cutoff)
        return self._staircase[pos] if pos < len(self._staircase) else None

    def _enter(self, mode: FrontMode) -> None:
        if self.mode is None:
            self.mode = mode
            if mode is FrontMode.INSERT_ONLY:
                self._tree = None
        elif self.mode is not mode:
            raise ModeViolation(f"front is {self.mode}; cannot switch to {mode}")

    def delete(self, id: int) -> list[Interval]:
        """Remove ``id``; return the intervals that became active, in start order."""
        self._enter(FrontMode.DELETE_ONLY)
        interval = self._live.pop(id, None)
        if interval is None:
            raise UnknownId(id)
        assert self._tree is not None
        pos = self._pos[id]
        self._tree[pos] = _DELETED
        if id not in self._active_ids:
            return []

        rank = self._staircase.index(interval)
        pred = self._staircase[rank - 1] if rank > 0 else None
        succ = self._staircase[rank + 1] if rank + 1 < len(self._staircase) else None
        self._remove_active(interval)

        # Newly maximal points lie strictly right of pred, at or left of the
        # deleted point, and end before succ; peel them off by minimum end.
        lo = self._pos[pred.id] + 1 if pred is not None else 0
        bound = succ.end if succ is not None else POS_INF
        activated: list[Interval] = []
        while lo <= pos:
            end, at = self._tree.min(lo, pos + 1)
            if at < 0 or not end < bound:
                break
            candidate = self._order[at]
            self._add_active(candidate)
            activated.append(candidate)
            lo = at + 1
        self.activation_events += len(activated)
        return activated

    def insert(self, interval: Interval) -> list[Interval]:
        """Add ``interval``; return the intervals that stopped being active."""
        self._enter(FrontMode.INSERT_ONLY)
        if interval.id in self._live:
            raise DuplicateId(interval.id)
        self._live[interval.id] = interval
        self.counter.tick()
        right = self._staircase.bisect_key_left(interval.start)
        if right < len(self._staircase) and self._staircase[right].end < interval.end:
            return []
        left = self._stair_ends.bisect_right(interval.end)
        deactivated = list(self._staircase[left:right])
        for old in deactivated:
            self._remove_active(old)
        self._add_active(interval)
        self.deactivation_events += len(deactivated)
        return deactivated

    def _add_active(self, interval: Interval) -> None:
        self.counter.tick()
        self._staircase.add(interval)
        self._stair_ends.add(interval.end)
        self._active_ids.add(interval.id)

    def _remove_active(self, interval: Interval) -> None:
        self.counter.tick()
        self._staircase.remove(interval)
        self._stair_ends.remove(interval.end)
        self._active_ids.discard(interval.id)
