"""Global leftmost-compatible index over all live intervals.

A treap keyed by start endpoint where every node caches the interval with the
minimum end in its subtree. ``lc(cutoff)`` walks one root-to-leaf path and
combines the suffix minima to the right of the search path.
"""

import logging
import random
from collections.abc import Iterator

from sortedcontainers import SortedKeyList

from dynisched.core.counter import OpCounter
from dynisched.core.errors import DuplicateId, UnknownId
from dynisched.models.intervals import Endpoint, Interval, end_key

logger = logging.getLogger(__name__)


class _Node:
    __slots__ = ("interval", "prio", "left", "right", "best")

    def __init__(self, interval: Interval, prio: float) -> None:
        self.interval = interval
        self.prio = prio
        self.left: _Node | None = None
        self.right: _Node | None = None
        self.best = interval


def _pull(node: _Node) -> None:
    best = node.interval
    for child in (node.left, node.right):
        if child is not None and child.best.end < best.end:
            best = child.best
    node.best = best


class GlobalIndex:
    """Ordered map of live intervals by start with suffix-minimum of end,
    plus a second ordering by end."""

    def __init__(self, counter: OpCounter | None = None, seed: int = 0x1DE7) -> None:
        self.counter = counter or OpCounter()
        self._rng = random.Random(seed)
        self._root: _Node | None = None
        self._by_id: dict[int, Interval] = {}
        self._by_end: SortedKeyList = SortedKeyList(key=end_key)

    def __len__(self) -> int:
        return len(self._by_id)

    def __contains__(self, id: object) -> bool:
        return id in self._by_id

    def __iter__(self) -> Iterator[Interval]:
        """Live intervals in start order."""
        stack: list[_Node] = []
        node = self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node.interval
            node = node.right

    def get(self, id: int) -> Interval:
        try:
            return self._by_id[id]
        except KeyError:
            raise UnknownId(id)

    def by_end(self) -> list[Interval]:
        return list(self._by_end)

    def earliest_end(self) -> Interval | None:
        return self._by_end[0] if self._by_end else None

    def insert(self, interval: Interval) -> None:
        if interval.id in self._by_id:
            raise DuplicateId(interval.id)
        self._by_id[interval.id] = interval
        self._by_end.add(interval)
        self._root = self._insert(self._root, _Node(interval, self._rng.random()))

    def delete(self, id: int) -> Interval:
        interval = self._by_id.pop(id, None)
        if interval is None:
            raise UnknownId(id)
        self._by_end.remove(interval)
        self._root = self._erase(self._root, interval.start)
        return interval

    def lc(self, cutoff: Endpoint) -> Interval | None:
        """The live interval with the minimum end among those starting at or after ``cutoff``."""
        best: Interval | None = None
        node = self._root
        while node is not None:
            self.counter.tick()
            if node.interval.start >= cutoff:
                for cand in (node.interval, node.right.best if node.right else None):
                    if cand is not None and (best is None or cand.end < best.end):
                        best = cand
                node = node.left
            else:
                node = node.right
        return best

    def _split(self, node: _Node | None, key: Endpoint) -> tuple[_Node | None, _Node | None]:
        """Split into keys ``< key`` and keys ``>= key``."""
        if node is None:
            return None, None
        self.counter.tick()
        if node.interval.start < key:
            node.right, right = self._split(node.right, key)
            _pull(node)
            return node, right
        left, node.left = self._split(node.left, key)
        _pull(node)
        return left, node

    def _merge(self, left: _Node | None, right: _Node | None) -> _Node | None:
        if left is None:
            return right
        if right is None:
            return left
        self.counter.tick()
        if left.prio > right.prio:
            left.right = self._merge(left.right, right)
            _pull(left)
            return left
        right.left = self._merge(left, right.left)
        _pull(right)
        return right

    def _insert(self, node: _Node | None, new: _Node) -> _Node:
        if node is None:
            return new
        self.counter.tick()
        if new.prio > node.prio:
            new.left, new.right = self._split(node, new.interval.start)
            _pull(new)
            return new
        if new.interval.start < node.interval.start:
            node.left = self._insert(node.left, new)
        else:
            node.right = self._insert(node.right, new)
        _pull(node)
        return node

    def _erase(self, node: _Node | None, key: Endpoint) -> _Node | None:
        if node is None:
            return None
        self.counter.tick()
        if node.interval.start == key:
            return self._merge(node.left, node.right)
        if key < node.interval.start:
            node.left = self._erase(node.left, key)
        else:
            node.right = self._erase(node.right, key)
        _pull(node)
        return node

    def check_invariants(self) -> None:
        """Recompute every cached minimum and compare (test support)."""

        def walk(node: _Node | None) -> Interval | None:
            if node is None:
                return None
            best = node.interval
            for child in (node.left, node.right):
                sub = walk(child)
                if sub is not None and sub.end < best.end:
                    best = sub
            assert node.best is best, f"stale suffix minimum at {node.interval}"
            return best

        walk(self._root)
        assert len(self._by_end) == len(self._by_id)
