"""Single-machine engine with cube-root parts, decremental cores and insertion buffers.

Parts are keyed by start. The internal intervals of a part are split into a
decremental core, whose active intervals form a greedy forest, and a small
buffer of recent inserts. A forest node *directly wants to switch* when some
buffer interval is compatible with it and ends before its forest parent; the
greedy inside the part follows forest edges until the deepest such node and
then continues from the buffer.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from sortedcontainers import SortedKeyList

from dynisched.core.counter import OpCounter
from dynisched.core.errors import InactiveEntry
from dynisched.core.index import GlobalIndex
from dynisched.engines.partitioned import PartitionedEngine
from dynisched.models.intervals import POS_INF, Endpoint, Interval, end_key
from dynisched.structures import DominanceFront, GreedyForest, StabbingIndex
from dynisched.structures.partition import KeyMode, ceil_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BufferInfo:
    """Intervals chosen from a buffer interval to the end of its part, and the last one."""

    count: int
    exit: Interval


@dataclass(frozen=True, slots=True)
class SwitchRange:
    """Positions ``lo..hi-1`` of the forest nodes (scheduling order) that switch to ``buffer``."""

    buffer: Interval
    lo: int
    hi: int

    def __bool__(self) -> bool:
        return self.lo < self.hi


class PartCore:
    """Decremental core, buffer, switch index and buffer results of one part."""

    def __init__(
        self,
        internals: list[Interval],
        index: GlobalIndex,
        capacity: int,
        counter: OpCounter,
    ) -> None:
        self.index = index
        self.capacity = capacity
        self.counter = counter
        self.buffer: SortedKeyList = SortedKeyList(key=end_key)
        self.core_rebuilds = 0
        self.mutations_since_rebuild = 0
        self.rebuild_spacing: list[int] = []
        self.buffer_peak = 0
        self._rebuild_core(internals)

    # ------------------------------------------------------------------
    # mutations

    def _rebuild_core(self, internals: list[Interval]) -> None:
        self.core_ids = {interval.id for interval in internals}
        self.front = DominanceFront.build(internals, self.counter)
        self.forest = GreedyForest.build(self.front.actives(), self.counter)
        self.buffer.clear()
        self.refresh_buffer_info()

    def insert(self, interval: Interval) -> None:
        self.mutations_since_rebuild += 1
        self.buffer.add(interval)
        self.buffer_peak = max(self.buffer_peak, len(self.buffer))
        if len(self.buffer) > self.capacity:
            internals = self.front.intervals() + list(self.buffer)
            self.rebuild_spacing.append(self.mutations_since_rebuild)
            self.mutations_since_rebuild = 0
            self.core_rebuilds += 1
            logger.debug("Buffer overflow at %d; rebuilding core of %d", len(self.buffer), len(internals))
            self._rebuild_core(internals)
        else:
            self.refresh_buffer_info()

    def delete(self, interval: Interval) -> None:
        self.mutations_since_rebuild += 1
        if interval.id in self.core_ids:
            self.core_ids.discard(interval.id)
            activated = self.front.delete(interval.id)
            self.forest.on_delete(interval, activated)
        else:
            self.buffer.remove(interval)
        self.refresh_buffer_info()

    # ------------------------------------------------------------------
    # switching

    def is_internal(self, interval: Interval) -> bool:
        return interval.id in self.core_ids or interval in self.buffer

    def _lc_decr_end(self, node: Interval) -> Endpoint:
        parent = self.forest.lc(node.end)
        return parent.end if parent is not None else POS_INF

    def direct_switch_range(self, b: Interval) -> SwitchRange:
        """Forest nodes that end before ``b`` starts and whose parent ends after ``b``.

        Node ends and parent ends both grow along the scheduling order, so the
        set is one contiguous range found by two binary searches.
        """
        nodes = self.forest.actives()
        hi = self.forest.active_ends().bisect_right(b.start)
        lo, top = 0, hi
        while lo < top:
            mid = (lo + top) // 2
            self.counter.tick()
            if b.end < self._lc_decr_end(nodes[mid]):
                top = mid
            else:
                lo = mid + 1
        return SwitchRange(b, lo, hi)

    def refresh_buffer_info(self) -> None:
        """Rebuild the switch windows and the per-buffer results, latest end first."""
        nodes = self.forest.actives()
        windows: list[tuple[int, int, int]] = []
        for b in self.buffer:
            rng = self.direct_switch_range(b)
            k = rng.lo
            while k < rng.hi:
                depth = self.forest.depth(nodes[k].id)
                # Depth never grows along the scheduling order: find the layer's last position.
                lo, top = k + 1, rng.hi
                while lo < top:
                    mid = (lo + top) // 2
                    self.counter.tick()
                    if self.forest.depth(nodes[mid].id) == depth:
                        lo = mid + 1
                    else:
                        top = mid
                first, last = nodes[k], nodes[lo - 1]
                windows.append(
                    (depth, self.forest.preorder(first.id), self.forest.subtree_window(last.id)[1])
                )
                k = lo
        self.switches = StabbingIndex(windows, self.counter)
        self.info: dict[int, BufferInfo] = {}
        for b in reversed(self.buffer):
            nxt = self.index.lc(b.end)
            if nxt is not None and nxt.id in self.info:
                after = self.info[nxt.id]
                self.info[b.id] = BufferInfo(after.count + 1, after.exit)
            elif nxt is not None and nxt.id in self.core_ids:
                count, exit = self.part_query_internal(nxt)
                self.info[b.id] = BufferInfo(count + 1, exit)
            else:
                self.info[b.id] = BufferInfo(1, b)

    def deepest_switch(self, interval: Interval) -> tuple[Interval, Interval] | None:
        """Deepest node on the path from ``interval`` that wants to switch, and its buffer target."""
        info = self.forest.node_info(interval.id)
        depth = self.switches.query(info.preorder, info.depth)
        if depth is None:
            return None
        node = self.forest.level_ancestor(interval.id, depth)
        target = self.index.lc(node.end)
        assert target is not None and target.id in self.info, f"{node} switches to a non-buffer interval"
        return node, target

    def part_query_internal(self, interval: Interval) -> tuple[int, Interval]:
        """Greedy count from ``interval`` while staying internal, and the last interval chosen.

        Raises:
            InactiveEntry: ``interval`` is neither buffered nor an active core interval.
        """
        buffered = self.info.get(interval.id)
        if buffered is not None:
            return buffered.count, buffered.exit
        if interval.id not in self.forest:
            raise InactiveEntry(f"{interval} is not active in its part")
        switch = self.deepest_switch(interval)
        if switch is None:
            stats = self.forest.path_stats(interval.id)
            return stats.count, stats.last_real
        node, target = switch
        walked = self.forest.depth(interval.id) - self.forest.depth(node.id) + 1
        after = self.info[target.id]
        return walked + after.count, after.exit


class CubeRootEngine(PartitionedEngine):
    name = "cuberoot"
    alpha = Fraction(2, 3)
    key_mode = KeyMode.BY_START

    def buffer_capacity(self) -> int:
        return ceil_power(self.partition.epoch_n, Fraction(1, 3))

    def _internals(self, j: int) -> list[Interval]:
        bound = self.partition.next_separator(j)
        return [interval for interval in self.members[j] if interval.end < bound]

    def _build_part(self, j: int) -> PartCore:
        return PartCore(self._internals(j), self.index, self.buffer_capacity(), self.counter)

    def _part_insert(self, j: int, interval: Interval) -> None:
        if interval.end < self.partition.next_separator(j):
            core: PartCore = self.payloads[j]
            before = core.core_rebuilds
            core.insert(interval)
            self._rebuilds += core.core_rebuilds - before

    def _part_delete(self, j: int, interval: Interval) -> None:
        if interval.end < self.partition.next_separator(j):
            self.payloads[j].delete(interval)

    def _query(self) -> int:
        count = 0
        cur = self.index.earliest_end()
        while cur is not None:
            core: PartCore = self.payloads[self.part_of(cur)]
            if core.is_internal(cur):
                walked, exit = core.part_query_internal(cur)
                count += walked
                cur = self.index.lc(exit.end)
            else:
                count += 1
                cur = self.index.lc(cur.end)
        return count

    def stats(self) -> dict[str, int]:
        stats = super().stats()
        cores: list[PartCore] = self.payloads
        stats.update(
            core_rebuilds=sum(core.core_rebuilds for core in cores),
            buffered=sum(len(core.buffer) for core in cores),
            buffer_peak=max((core.buffer_peak for core in cores), default=0),
            switch_windows=sum(core.switches.window_count for core in cores),
        )
        return stats


def layer_split(forest: GreedyForest, rng: SwitchRange) -> list[tuple[int, int, int]]:
    """``(depth, first, last)`` position runs of a switch range, one per forest layer (test support)."""
    nodes = forest.actives()
    runs: list[tuple[int, int, int]] = []
    for k in range(rng.lo, rng.hi):
        depth = forest.depth(nodes[k].id)
        if runs and runs[-1][0] == depth:
            runs[-1] = (depth, runs[-1][1], k)
        else:
            runs.append((depth, k, k))
    return runs

