"""Static greedy tree of a part universe with numpy-backed ancestor queries.

Node 0 is the artificial root. Active intervals follow in scheduling order,
then one zero-length leaf per entry point (a part start coordinate, or +inf).
Every node hangs under the first active interval starting at or after its end.
"""

import math
from bisect import bisect_left
from collections.abc import Sequence

import numpy as np

from dynisched.core.counter import OpCounter
from dynisched.models.intervals import Endpoint, Interval

ROOT = 0


class StaticTree:
    __slots__ = (
        "counter",
        "actives",
        "points",
        "parent",
        "depth",
        "end_rank",
        "up",
        "_euler",
        "_tour_depth",
        "_first",
        "_sparse",
        "_log",
        "_point_node",
        "_active_node",
    )

    def __init__(
        self,
        actives: Sequence[Interval],
        points: Sequence[Endpoint],
        counter: OpCounter | None = None,
    ) -> None:
        self.counter = counter or OpCounter()
        self.actives = list(actives)
        self.points = list(points)
        a, p = len(self.actives), len(self.points)
        size = 1 + a + p
        starts = [interval.start for interval in self.actives]
        ends: list[Endpoint] = [interval.end for interval in self.actives] + self.points

        parent = np.zeros(size, dtype=np.int64)
        for node, end in enumerate(ends, start=1):
            k = bisect_left(starts, end)
            parent[node] = ROOT if k == a else k + 1
        self.parent = parent
        self._active_node = {interval.id: i for i, interval in enumerate(self.actives, start=1)}
        self._point_node = {point: 1 + a + i for i, point in enumerate(self.points)}

        # Parents of actives sit later in scheduling order.
        depth = np.zeros(size, dtype=np.int64)
        for node in range(a, 0, -1):
            depth[node] = depth[parent[node]] + 1
        for node in range(a + 1, size):
            depth[node] = depth[parent[node]] + 1
        self.depth = depth

        order = sorted(range(1, size), key=lambda node: ends[node - 1])
        end_rank = np.full(size, size - 1, dtype=np.int64)
        for rank, node in enumerate(order):
            end_rank[node] = rank
        self.end_rank = end_rank

        levels = max(1, math.ceil(math.log2(size)) + 1)
        up = np.empty((levels, size), dtype=np.int64)
        up[0] = parent
        for k in range(1, levels):
            up[k] = up[k - 1][up[k - 1]]
        self.up = up
        self._build_lca(size)

    def _build_lca(self, size: int) -> None:
        children: list[list[int]] = [[] for _ in range(size)]
        for node in range(1, size):
            children[int(self.parent[node])].append(node)
        euler: list[int] = []
        first = np.zeros(size, dtype=np.int64)
        stack = [(ROOT, 0)]
        while stack:
            node, i = stack.pop()
            if i == 0:
                first[node] = len(euler)
            euler.append(node)
            if i < len(children[node]):
                stack.append((node, i + 1))
                stack.append((children[node][i], 0))
        tour = np.asarray(euler, dtype=np.int64)
        depths = self.depth[tour]
        m = len(tour)
        k_max = max(1, math.floor(math.log2(m)) + 1)
        sparse = np.empty((k_max, m), dtype=np.int64)
        sparse[0] = np.arange(m)
        for k in range(1, k_max):
            half = 1 << (k - 1)
            prev = sparse[k - 1]
            left, right = prev[: m - 2 * half + 1], prev[half : m - half + 1]
            sparse[k, : m - 2 * half + 1] = np.where(depths[left] <= depths[right], left, right)
        self._euler = tour
        self._tour_depth = depths
        self._first = first
        self._sparse = sparse
        self._log = np.zeros(m + 1, dtype=np.int64)
        if m > 1:
            self._log[2:] = np.floor(np.log2(np.arange(2, m + 1))).astype(np.int64)

    def __len__(self) -> int:
        return len(self.parent)

    def node_of_active(self, interval: Interval) -> int | None:
        return self._active_node.get(interval.id)

    def node_of_point(self, point: Endpoint) -> int | None:
        return self._point_node.get(point)

    def interval(self, node: int) -> Interval | None:
        """The active interval at ``node``; None for the root and entry points."""
        return self.actives[node - 1] if 1 <= node <= len(self.actives) else None

    def is_point(self, node: int) -> bool:
        return node > len(self.actives)

    def lca(self, u: int, v: int) -> int:
        self.counter.tick()
        lo, hi = int(self._first[u]), int(self._first[v])
        if lo > hi:
            lo, hi = hi, lo
        j = int(self._log[hi - lo + 1])
        left = self._sparse[j, lo]
        right = self._sparse[j, hi - (1 << j) + 1]
        depths = self._tour_depth
        return int(self._euler[left] if depths[left] <= depths[right] else self._euler[right])

    def ancestor(self, v: int, steps: int) -> int:
        """The ancestor ``steps`` edges above ``v`` (the root if the path is shorter)."""
        k = 0
        while steps:
            if k >= len(self.up):
                return ROOT
            self.counter.tick()
            if steps & 1:
                v = int(self.up[k][v])
            steps >>= 1
            k += 1
        return v

    def last_before(self, v: int, bound_rank: int) -> int:
        """Highest ancestor of ``v`` (inclusive) whose end rank is below ``bound_rank``.

        Returns ``v`` itself when even ``v`` is not below the bound.
        """
        if self.end_rank[v] >= bound_rank:
            return v
        for k in range(len(self.up) - 1, -1, -1):
            self.counter.tick()
            jump = int(self.up[k][v])
            if self.end_rank[jump] < bound_rank:
                v = jump
        return v
