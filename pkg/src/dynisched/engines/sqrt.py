"""Single-machine engine with square-root parts and per-part greedy chains.

Parts are keyed by start. An interval is internal to its part when it ends
before the next separator; only internal intervals carry chain data. The
query walks the global greedy, jumping over whole internal chains.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from sortedcontainers import SortedKeyList

from dynisched.core.counter import OpCounter
from dynisched.engines.partitioned import PartitionedEngine
from dynisched.models.intervals import Endpoint, Interval, end_key, start_key
from dynisched.structures.partition import KeyMode

logger = logging.getLogger(__name__)


@dataclass
class PartChains:
    """Greedy chains restricted to one part's internal intervals.

    ``chain_len[id]`` counts the intervals chosen from ``id`` while staying
    internal, ``id`` included; ``chain_exit[id]`` is the last of them.
    """

    by_start: SortedKeyList = field(default_factory=lambda: SortedKeyList(key=start_key))
    by_end: SortedKeyList = field(default_factory=lambda: SortedKeyList(key=end_key))
    chain_len: dict[int, int] = field(default_factory=dict)
    chain_exit: dict[int, Interval] = field(default_factory=dict)

    @classmethod
    def build(cls, internals: list[Interval], counter: OpCounter) -> "PartChains":
        part = cls()
        part.by_start.update(internals)
        part.by_end.update(internals)
        starts = list(part.by_start)
        # suffix[k]: minimum-end internal among starts[k:]
        suffix: list[Interval | None] = [None] * (len(starts) + 1)
        for k in range(len(starts) - 1, -1, -1):
            counter.tick()
            best = suffix[k + 1]
            suffix[k] = starts[k] if best is None or starts[k].end < best.end else best
        for interval in reversed(part.by_end):
            counter.tick()
            nxt = suffix[part.by_start.bisect_key_left(interval.end)]
            if nxt is None:
                part.chain_len[interval.id] = 1
                part.chain_exit[interval.id] = interval
            else:
                part.chain_len[interval.id] = part.chain_len[nxt.id] + 1
                part.chain_exit[interval.id] = part.chain_exit[nxt.id]
        return part

    def is_internal(self, interval: Interval) -> bool:
        return interval.id in self.chain_len

    def __len__(self) -> int:
        return len(self.chain_len)


class SqrtEngine(PartitionedEngine):
    name = "sqrt"
    alpha = Fraction(1, 2)
    key_mode = KeyMode.BY_START

    def internals(self, j: int) -> list[Interval]:
        bound = self.partition.next_separator(j)
        return [interval for interval in self.members[j] if interval.end < bound]

    def _is_internal(self, j: int, interval: Interval) -> bool:
        return interval.end < self.partition.next_separator(j)

    def _build_part(self, j: int) -> PartChains:
        return PartChains.build(self.internals(j), self.counter)

    def _part_insert(self, j: int, interval: Interval) -> None:
        if self._is_internal(j, interval):
            self.rebuild_part(j)

    def _part_delete(self, j: int, interval: Interval) -> None:
        if self._is_internal(j, interval):
            self.rebuild_part(j)

    def _query(self) -> int:
        return self.traverse_query()

    def traverse_query(self) -> int:
        """Replay the greedy from the earliest-ending interval, chain by chain."""
        count = 0
        cur = self.index.earliest_end()
        while cur is not None:
            part: PartChains = self.payloads[self.part_of(cur)]
            if part.is_internal(cur):
                count += part.chain_len[cur.id]
                cutoff: Endpoint = part.chain_exit[cur.id].end
            else:
                count += 1
                cutoff = cur.end
            cur = self.index.lc(cutoff)
        return count

    def stats(self) -> dict[str, int]:
        stats = super().stats()
        stats["internal"] = sum(len(part) for part in self.payloads)
        return stats
