"""Static stabbing index: deepest window containing a position.

Windows are ``(depth, lo, hi)`` over integer positions, ``lo..hi`` inclusive.
Boundaries are compressed, every window is stored at its canonical
segment-tree nodes, and each node keeps its depths as a sorted numpy array.
"""

from bisect import bisect_right
from collections.abc import Iterable

import numpy as np

from dynisched.core.counter import OpCounter
from dynisched.core.segment_tree import next_power_of_two


class StabbingIndex:
    def __init__(self, windows: Iterable[tuple[int, int, int]], counter: OpCounter | None = None) -> None:
        self.counter = counter or OpCounter()
        items = [(d, lo, hi) for d, lo, hi in windows if lo <= hi]
        self._bounds = sorted({lo for _, lo, _ in items} | {hi + 1 for _, _, hi in items})
        self._size = next_power_of_two(max(1, len(self._bounds)))
        buckets: list[list[int]] = [[] for _ in range(2 * self._size)]
        for d, lo, hi in items:
            self._add(buckets, d, bisect_right(self._bounds, lo) - 1, bisect_right(self._bounds, hi) - 1)
        self._depths = [np.sort(np.asarray(b, dtype=np.int64)) if b else None for b in buckets]
        self.window_count = len(items)

    def _add(self, buckets: list[list[int]], d: int, first: int, last: int) -> None:
        """Store ``d`` on the canonical nodes covering segments ``first..last``."""
        lo, hi = first + self._size, last + self._size + 1
        while lo < hi:
            self.counter.tick()
            if lo & 1:
                buckets[lo].append(d)
                lo += 1
            if hi & 1:
                hi -= 1
                buckets[hi].append(d)
            lo >>= 1
            hi >>= 1

    def query(self, position: int, max_depth: int) -> int | None:
        """Largest window depth ``<= max_depth`` among windows containing ``position``."""
        seg = bisect_right(self._bounds, position) - 1
        if seg < 0 or seg >= len(self._bounds) - 1:
            return None
        best: int | None = None
        node = seg + self._size
        while node >= 1:
            self.counter.tick()
            depths = self._depths[node]
            if depths is not None:
                at = int(np.searchsorted(depths, max_depth, side="right")) - 1
                if at >= 0 and (best is None or int(depths[at]) > best):
                    best = int(depths[at])
            node >>= 1
        return best
