"""Polylog engines for traces that only delete or only insert after loading.

Both keep a dominance front and a greedy forest over its active intervals;
the answer is the depth of the earliest-ending interval, which is always
active.
"""

import logging

from dynisched.core.errors import ModeViolation
from dynisched.engines.base import EngineBase
from dynisched.models.intervals import NEG_INF, Interval
from dynisched.structures import DominanceFront, GreedyForest

logger = logging.getLogger(__name__)


class DeleteOnlyEngine(EngineBase):
    """Inserts load the initial set; once a delete happens, further inserts are rejected.

    The front and forest are built lazily from the loaded set on the first
    delete or query.
    """

    name = "deleteonly"

    def __init__(self, machines: int = 1, *, debug_assert: bool = False) -> None:
        super().__init__(machines, debug_assert=debug_assert)
        self._front: DominanceFront | None = None
        self._forest: GreedyForest | None = None
        self._deleting = False

    def _ensure_built(self) -> tuple[DominanceFront, GreedyForest]:
        if self._front is None or self._forest is None:
            live = self._live.values()
            self._front = DominanceFront.build(live, self.counter)
            self._forest = GreedyForest.build(self._front.actives(), self.counter)
            self._rebuilds += 1
            logger.debug("Built delete-only structures over %d intervals", len(self._live))
        return self._front, self._forest

    def _insert(self, interval: Interval) -> None:
        if self._deleting:
            raise ModeViolation(f"insert of {interval} after deletions started")
        self._front = self._forest = None

    def _delete(self, interval: Interval) -> None:
        front, forest = self._ensure_built()
        self._deleting = True
        activated = front.delete(interval.id)
        forest.on_delete(interval, activated)

    def _query(self) -> int:
        front, forest = self._ensure_built()
        first = front.active_succ(NEG_INF)
        return forest.depth(first.id) if first is not None else 0

    def stats(self) -> dict[str, int]:
        stats = super().stats()
        if self._front is not None and self._forest is not None:
            stats["activations"] = self._front.activation_events
            stats["reparent_calls"] = self._forest.reparent_calls
        return stats


class InsertOnlyEngine(EngineBase):
    """Starts empty and rejects every delete."""

    name = "insertonly"

    def __init__(self, machines: int = 1, *, debug_assert: bool = False) -> None:
        super().__init__(machines, debug_assert=debug_assert)
        self._front = DominanceFront(self.counter)
        self._forest = GreedyForest(self.counter)

    def _insert(self, interval: Interval) -> None:
        deactivated = self._front.insert(interval)
        self._forest.on_insert(interval, deactivated)

    def _delete(self, interval: Interval) -> None:
        raise ModeViolation(f"delete of {interval} in an insert-only engine")

    def _query(self) -> int:
        first = self._front.active_succ(NEG_INF)
        return self._forest.depth(first.id) if first is not None else 0

    def stats(self) -> dict[str, int]:
        stats = super().stats()
        stats["deactivations"] = self._front.deactivation_events
        stats["reparent_calls"] = self._forest.reparent_calls
        return stats
