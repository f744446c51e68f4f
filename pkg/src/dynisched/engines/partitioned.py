"""Epoch and part bookkeeping shared by the part-based engines.

Every live interval is in the global index and in exactly one part, chosen
by its start or end key. A part carries an engine-specific payload that is
rebuilt from the part's members whenever the partition splits or merges it,
and everything is re-chunked when an epoch ends.
"""

import logging
import math
from abc import abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from sortedcontainers import SortedKeyList

from dynisched.core.index import GlobalIndex
from dynisched.engines.base import EngineBase
from dynisched.engines.universe import PartUniverse
from dynisched.models.intervals import Interval, end_key, start_key
from dynisched.models.state import GreedyState
from dynisched.structures.partition import EpochRebuild, KeyMode, Merge, Partition, Signal, Split

logger = logging.getLogger(__name__)


class PartitionedEngine(EngineBase):
    """Maintains ``alpha``-sized parts and routes mutations to part payloads.

    Subclasses build payloads with ``_build_part`` and may update them in
    place through ``_part_insert`` and ``_part_delete``; the default is a
    full part rebuild.
    """

    alpha: Fraction
    key_mode: KeyMode

    def __init__(self, machines: int = 1, *, debug_assert: bool = False) -> None:
        super().__init__(machines, debug_assert=debug_assert)
        self.index = GlobalIndex(self.counter)
        self._key = start_key if self.key_mode is KeyMode.BY_START else end_key
        self.partition = Partition.new_epoch([], self.alpha, self.key_mode)
        self.members: list[SortedKeyList] = [SortedKeyList(key=self._key)]
        self.payloads: list[Any] = []
        self.splits = 0
        self.merges = 0
        self.epochs = 0
        self.part_rebuilds = 0
        self.payloads.append(self._build_part(0))

    # ------------------------------------------------------------------
    # payload hooks

    @abstractmethod
    def _build_part(self, j: int) -> Any:
        """A fresh payload for part ``j`` from ``self.members[j]``."""

    def _part_insert(self, j: int, interval: Interval) -> None:
        self.rebuild_part(j)

    def _part_delete(self, j: int, interval: Interval) -> None:
        self.rebuild_part(j)

    def rebuild_part(self, j: int) -> None:
        """Recompute part ``j`` from scratch."""
        self.payloads[j] = self._build_part(j)
        self.part_rebuilds += 1

    # ------------------------------------------------------------------
    # mutations

    def part_of(self, interval: Interval) -> int:
        return self.partition.locate(self._key(interval))

    def _insert(self, interval: Interval) -> None:
        self.index.insert(interval)
        j = self.part_of(interval)
        self.members[j].add(interval)
        signal = self.partition.note_mutation(j, +1)
        if signal is None:
            self._part_insert(j, interval)
        else:
            self._handle(signal)

    def _delete(self, interval: Interval) -> None:
        self.index.delete(interval.id)
        j = self.part_of(interval)
        self.members[j].remove(interval)
        signal = self.partition.note_mutation(j, -1)
        if signal is None:
            self._part_delete(j, interval)
        else:
            self._handle(signal)

    def _handle(self, signal: Signal | None) -> None:
        while signal is not None:
            match signal:
                case EpochRebuild():
                    self._new_epoch()
                case Split(part=j):
                    self._split(j)
                case Merge(left=j):
                    self._merge(j)
            signal = self.partition.recheck()

    def _new_epoch(self) -> None:
        ordered = sorted(self.index, key=self._key)
        self.partition = Partition.new_epoch([self._key(i) for i in ordered], self.alpha, self.key_mode)
        self.members = []
        start = 0
        for size in self.partition.sizes:
            self.members.append(SortedKeyList(ordered[start : start + size], key=self._key))
            start += size
        self.payloads = [self._build_part(j) for j in range(len(self.members))]
        self.epochs += 1
        self._rebuilds += 1
        logger.debug(
            "%s: epoch with N=%d, %d parts", self.name, self.partition.epoch_n, len(self.members)
        )

    def _split(self, j: int) -> None:
        members = self.members[j]
        # The ceil(s/2)-th member becomes the separator and opens the right part.
        left_size = math.ceil(len(members) / 2) - 1
        separator = self._key(members[left_size])
        self.partition.split(j, separator, left_size)
        left = SortedKeyList(members[:left_size], key=self._key)
        right = SortedKeyList(members[left_size:], key=self._key)
        self.members[j : j + 1] = [left, right]
        self.payloads[j : j + 1] = [None, None]
        self.payloads[j] = self._build_part(j)
        self.payloads[j + 1] = self._build_part(j + 1)
        self.splits += 1
        self._rebuilds += 1
        logger.debug("%s: split part %d (%d + %d)", self.name, j, len(left), len(right))

    def _merge(self, j: int) -> None:
        self.partition.merge(j)
        merged = SortedKeyList(self.members[j], key=self._key)
        merged.update(self.members[j + 1])
        self.members[j : j + 2] = [merged]
        self.payloads[j : j + 2] = [None]
        self.payloads[j] = self._build_part(j)
        self.merges += 1
        self._rebuilds += 1
        logger.debug("%s: merged parts %d and %d (%d members)", self.name, j, j + 1, len(merged))

    def check_partition(self) -> None:
        """Assert partition invariants and member placement (test support)."""
        self.partition.check_invariants()
        assert len(self.members) == len(self.partition) == len(self.payloads)
        for j, members in enumerate(self.members):
            assert len(members) == self.partition.sizes[j]
            lo, hi = self.partition.part_bounds(j)
            assert all(lo <= self._key(i) < hi for i in members), f"misplaced member in part {j}"

    def stats(self) -> dict[str, int]:
        stats = super().stats()
        stats.update(
            parts=len(self.members),
            epochs=self.epochs,
            splits=self.splits,
            merges=self.merges,
            part_rebuilds=self.part_rebuilds,
        )
        return stats


@dataclass(slots=True)
class EndPart:
    """Payload of an end-keyed part: its universe and the engine's tables."""

    universe: PartUniverse
    tables: Any


class EndKeyedEngine(PartitionedEngine):
    """Multi-machine engines: parts keyed by end, queried left to right.

    Each part is entered with the state left by the parts before it, rounded
    onto the part's own start points, and left with the rounding undone for
    machines that took nothing.
    """

    key_mode = KeyMode.BY_END

    @abstractmethod
    def _build_tables(self, universe: PartUniverse) -> Any:
        """Engine tables for a freshly built part universe."""

    @abstractmethod
    def part_query(self, part: EndPart, state: GreedyState) -> tuple[int, GreedyState]:
        """Accepted count and exit state for a rounded entry state."""

    def _build_part(self, j: int) -> EndPart:
        universe = PartUniverse(self.members[j], self.counter, debug=self.debug_assert)
        return EndPart(universe, self._build_tables(universe))

    def _query(self) -> int:
        state = GreedyState.initial(self.machines)
        total = 0
        for part in self.payloads:
            universe = part.universe
            if not len(universe):
                continue
            entry, originals = universe.round_state(state)
            if entry is None:
                continue
            count, exit_state = self.part_query(part, entry)
            total += count
            state = universe.unround(exit_state, originals)
        return total
