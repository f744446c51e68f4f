"""Array-backed segment trees with range reduction and first-match descent."""

from collections.abc import Callable, Sequence
from typing import Any, Generic, TypeVar

from dynisched.core.counter import OpCounter

T = TypeVar("T")


def next_power_of_two(n: int) -> int:
    capacity = 1
    while capacity < n:
        capacity <<= 1
    return capacity


class SegmentTree(Generic[T]):
    """A fixed-capacity array with ``O(log capacity)`` point updates and range reduction.

    ``operation`` must be associative with ``neutral_element`` as identity
    (min, max, or a lexicographic tuple min all qualify).
    """

    def __init__(
        self,
        capacity: int,
        operation: Callable[[T, T], T],
        neutral_element: T,
        counter: OpCounter | None = None,
    ) -> None:
        assert capacity > 0 and capacity & (capacity - 1) == 0, "Capacity must be a power of 2"
        self.capacity = capacity
        self.operation = operation
        self.neutral_element = neutral_element
        self.value: list[T] = [neutral_element] * (2 * capacity)
        self.counter = counter or OpCounter()

    def _fill(self, values: Sequence[T]) -> None:
        cap = self.capacity
        self.value[cap : cap + len(values)] = values
        for idx in range(cap - 1, 0, -1):
            self.value[idx] = self.operation(self.value[2 * idx], self.value[2 * idx + 1])
        self.counter.tick(cap)

    def reduce(self, start: int = 0, end: int | None = None) -> T:
        """Combine the values in ``[start, end)``."""
        if end is None:
            end = self.capacity
        result = self.neutral_element
        start += self.capacity
        end += self.capacity
        while start < end:
            self.counter.tick()
            if start & 1:
                result = self.operation(result, self.value[start])
                start += 1
            if end & 1:
                end -= 1
                result = self.operation(result, self.value[end])
            start >>= 1
            end >>= 1
        return result

    def __setitem__(self, idx: int, val: T) -> None:
        assert 0 <= idx < self.capacity
        idx += self.capacity
        self.value[idx] = val
        idx >>= 1
        while idx >= 1:
            self.counter.tick()
            self.value[idx] = self.operation(self.value[2 * idx], self.value[2 * idx + 1])
            idx >>= 1

    def __getitem__(self, idx: int) -> T:
        assert 0 <= idx < self.capacity
        return self.value[idx + self.capacity]

    def __len__(self) -> int:
        return self.capacity


class MinSegmentTree(SegmentTree[Any]):
    """Range minimum over comparable leaves."""

    def __init__(self, capacity: int, neutral_element: Any, counter: OpCounter | None = None) -> None:
        super().__init__(capacity, min, neutral_element, counter)

    @classmethod
    def build(
        cls, values: Sequence[Any], neutral_element: Any, counter: OpCounter | None = None
    ) -> "MinSegmentTree":
        tree = cls(next_power_of_two(max(1, len(values))), neutral_element, counter)
        tree._fill(values)
        return tree

    def min(self, start: int = 0, end: int | None = None) -> Any:
        return self.reduce(start, end)


class MaxSegmentTree(SegmentTree[Any]):
    """Range maximum over comparable leaves, with a first-match descent."""

    def __init__(self, capacity: int, neutral_element: Any, counter: OpCounter | None = None) -> None:
        super().__init__(capacity, max, neutral_element, counter)

    @classmethod
    def build(
        cls, values: Sequence[Any], neutral_element: Any, counter: OpCounter | None = None
    ) -> "MaxSegmentTree":
        tree = cls(next_power_of_two(max(1, len(values))), neutral_element, counter)
        tree._fill(values)
        return tree

    def max(self, start: int = 0, end: int | None = None) -> Any:
        return self.reduce(start, end)

    def find_first(self, lo: int, threshold: Any) -> int:
        """Smallest index ``i >= lo`` whose value is ``>= threshold``, or -1."""
        if lo >= self.capacity:
            return -1
        return self._descend(1, 0, self.capacity, lo, threshold)

    def _descend(self, node: int, node_lo: int, node_hi: int, lo: int, threshold: Any) -> int:
        self.counter.tick()
        if node_hi <= lo or self.value[node] < threshold:
            return -1
        if node >= self.capacity:
            return node - self.capacity
        mid = (node_lo + node_hi) // 2
        found = self._descend(2 * node, node_lo, mid, lo, threshold)
        if found >= 0:
            return found
        return self._descend(2 * node + 1, mid, node_hi, lo, threshold)
