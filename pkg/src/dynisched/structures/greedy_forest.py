"""The greedy tree of an active interval set.

Nodes are the active intervals plus an artificial root; the parent of ``I``
is its leftmost compatible active interval, or the root when there is none.
Children are kept in scheduling order, so the depth-first tour lists every
node's children as one contiguous, ordered run.

The tour lives in an implicit treap (``euler_tour``). Internal treap nodes
play the part of weight-0 auxiliary ladder nodes: a contiguous run of
siblings is cut and spliced with a constant number of splits and merges, and
depth, preorder and level-ancestor queries are prefix-sum searches over the
tour.
"""

import logging
from bisect import bisect_left
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum

from sortedcontainers import SortedKeyList, SortedList

from dynisched.core.counter import OpCounter
from dynisched.core.errors import (
    DepthOutOfRange,
    InconsistentActivation,
    ModeViolation,
    NonContiguousRange,
    NotMonotonic,
    UnknownId,
)
from dynisched.models.intervals import Endpoint, Interval, contains, start_key
from dynisched.structures import euler_tour as tour
from dynisched.structures.euler_tour import Token, TokenFactory

logger = logging.getLogger(__name__)


class ForestMode(StrEnum):
    DELETE_ONLY = "delete-only"
    INSERT_ONLY = "insert-only"


@dataclass(frozen=True, slots=True)
class PathStats:
    """Real nodes on the path from a node to the root, and the last of them."""

    count: int
    last_real: Interval


@dataclass(frozen=True, slots=True)
class NodeInfo:
    depth: int
    preorder: int
    window: tuple[int, int]


def _real(token: Token) -> Interval:
    assert token.owner is not None, "root token has no interval"
    return token.owner


class GreedyForest:
    """Greedy tree over a monotonic interval set with polylog path queries."""

    def __init__(self, counter: OpCounter | None = None, seed: int = 0x6F72) -> None:
        self.counter = counter or OpCounter()
        self.mode: ForestMode | None = None
        self._tokens = TokenFactory(seed)
        self._open: dict[int, Token] = {}
        self._close: dict[int, Token] = {}
        self._order: SortedKeyList = SortedKeyList(key=start_key)
        self._ends: SortedList = SortedList()
        self._root_open = self._tokens.make(None, True)
        self._root_close = self._tokens.make(None, False)
        self._tour: Token | None = tour.merge(self._root_open, self._root_close, self.counter)
        self.reparent_calls = 0

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def build(
        cls, intervals: Iterable[Interval], counter: OpCounter | None = None
    ) -> "GreedyForest":
        """Build from a monotonic set in ``O(n log n)``.

        Raises:
            NotMonotonic: Start order and end order disagree.
        """
        forest = cls(counter)
        ordered = sorted(intervals, key=start_key)
        for prev, cur in zip(ordered, ordered[1:], strict=False):
            if not prev.end < cur.end:
                raise NotMonotonic(f"{prev} and {cur} are nested")
        n = len(ordered)
        starts = [interval.start for interval in ordered]
        children: list[list[int]] = [[] for _ in range(n + 1)]
        for i, interval in enumerate(ordered):
            forest.counter.tick()
            children[bisect_left(starts, interval.end)].append(i)

        forest._order.update(ordered)
        forest._ends.update(interval.end for interval in ordered)
        for interval in ordered:
            forest._open[interval.id] = forest._tokens.make(interval, True)
            forest._close[interval.id] = forest._tokens.make(interval, False)

        def open_of(i: int) -> Token:
            return forest._root_open if i == n else forest._open[ordered[i].id]

        def close_of(i: int) -> Token:
            return forest._root_close if i == n else forest._close[ordered[i].id]

        sequence = [open_of(n)]
        stack = [(n, 0)]
        while stack:
            node, next_child = stack[-1]
            if next_child < len(children[node]):
                stack[-1] = (node, next_child + 1)
                child = children[node][next_child]
                sequence.append(open_of(child))
                stack.append((child, 0))
            else:
                stack.pop()
                sequence.append(close_of(node))
        for token in sequence:
            token.left = token.right = token.parent = None
            tour.pull(token)
        forest._tour = tour.concat(sequence, forest.counter)
        return forest

    # ------------------------------------------------------------------
    # queries

    def __len__(self) -> int:
        return len(self._order)

    def __contains__(self, id: object) -> bool:
        return id in self._open

    def actives(self) -> list[Interval]:
        """Nodes in scheduling order."""
        return list(self._order)

    def active_ends(self) -> SortedList:
        return self._ends

    def interval(self, id: int) -> Interval:
        return _real(self._token(id))

    def _token(self, id: int) -> Token:
        token = self._open.get(id)
        if token is None:
            raise UnknownId(id)
        return token

    def lc(self, cutoff: Endpoint) -> Interval | None:
        """First node starting at or after ``cutoff``."""
        self.counter.tick()
        pos = self._order.bisect_key_left(cutoff)
        return self._order[pos] if pos < len(self._order) else None

    def depth(self, id: int) -> int:
        return tour.prefix_totals(self._token(id), self.counter)[0]

    def preorder(self, id: int) -> int:
        """Preorder number among real nodes, starting at 1 (the root is 0)."""
        return tour.prefix_totals(self._token(id), self.counter)[1]

    def subtree_window(self, id: int) -> tuple[int, int]:
        lo = tour.prefix_totals(self._token(id), self.counter)[1]
        hi = tour.prefix_totals(self._close[id], self.counter)[1]
        return lo, hi

    def node_info(self, id: int) -> NodeInfo:
        depth, pre, _ = tour.prefix_totals(self._token(id), self.counter)
        hi = tour.prefix_totals(self._close[id], self.counter)[1]
        return NodeInfo(depth=depth, preorder=pre, window=(pre, hi))

    def level_ancestor(self, id: int, d: int) -> Interval:
        """The ancestor of ``id`` at depth ``d`` (``0 < d <= depth``)."""
        token = self._token(id)
        depth = tour.prefix_totals(token, self.counter)[0]
        if not 0 < d <= depth:
            raise DepthOutOfRange(f"depth {d} outside 1..{depth} for interval {id}")
        if d == depth:
            return _real(token)
        pos = tour.rank(token, self.counter)
        left, right = tour.split(self._tour, pos, self.counter)
        # The last prefix at depth d-1 before the node sits right before the
        # opening bracket of its depth-d ancestor.
        q = tour.last_prefix_at_most(left, d - 1, False, self.counter)
        self._tour = tour.merge(left, right, self.counter)
        return _real(tour.kth(self._tour, q + 1, self.counter))

    def parent(self, id: int) -> Interval | None:
        depth = self.depth(id)
        return None if depth == 1 else self.level_ancestor(id, depth - 1)

    def path_stats(self, id: int) -> PathStats:
        depth = self.depth(id)
        return PathStats(count=depth, last_real=self.level_ancestor(id, 1))

    def parent_map(self) -> dict[int, int | None]:
        """Parent id per node, read off the tour in one pass (test support)."""
        parents: dict[int, int | None] = {}
        stack: list[int | None] = []
        for token in tour.iter_tokens(self._tour):
            if token.owner is None:
                continue
            if token.opening:
                parents[token.owner.id] = stack[-1] if stack else None
                stack.append(token.owner.id)
            else:
                stack.pop()
        return parents

    def preorder_sequence(self) -> list[Interval]:
        return [t.owner for t in tour.iter_tokens(self._tour) if t.owner is not None and t.opening]

    def children(self, id: int | None) -> list[Interval]:
        parents = self.parent_map()
        return [self.interval(c) for c, p in parents.items() if p == id]

    # ------------------------------------------------------------------
    # marks

    def mark(self, id: int, flag: bool = True) -> None:
        opening, closing = self._token(id), self._close[id]
        opening.mval, closing.mval = (1, -1) if flag else (0, 0)
        tour.refresh_path(opening, self.counter)
        tour.refresh_path(closing, self.counter)

    def nearest_marked_ancestor(self, id: int) -> Interval | None:
        """Closest marked node on the path from ``id`` to the root, itself included."""
        token = self._token(id)
        marked = tour.prefix_totals(token, self.counter)[2]
        if marked == 0:
            return None
        if token.mval == 1:
            return token.owner
        pos = tour.rank(token, self.counter)
        left, right = tour.split(self._tour, pos, self.counter)
        q = tour.last_prefix_at_most(left, marked - 1, True, self.counter)
        self._tour = tour.merge(left, right, self.counter)
        return tour.kth(self._tour, q + 1, self.counter).owner

    # ------------------------------------------------------------------
    # tour surgery

    def _cut(self, first: Token, last: Token) -> Token | None:
        """Remove the tour segment from ``first`` to ``last`` inclusive."""
        lo = tour.rank(first, self.counter)
        hi = tour.rank(last, self.counter)
        left, rest = tour.split(self._tour, lo, self.counter)
        segment, right = tour.split(rest, hi - lo + 1, self.counter)
        self._tour = tour.merge(left, right, self.counter)
        return segment

    def _insert_at(self, pos: int, segment: Token | None) -> None:
        if segment is None:
            return
        left, right = tour.split(self._tour, pos, self.counter)
        self._tour = tour.concat((left, segment, right), self.counter)

    def _insert_after(self, anchor: Token, segment: Token | None) -> None:
        self._insert_at(tour.rank(anchor, self.counter) + 1, segment)

    def _insert_before(self, anchor: Token, segment: Token | None) -> None:
        self._insert_at(tour.rank(anchor, self.counter), segment)

    def _strip(self, segment: Token | None) -> Token | None:
        """Drop the outer brackets of a node's subtree segment."""
        _, inner = tour.split(segment, 1, self.counter)
        inner, _ = tour.split(inner, tour.size(inner) - 1, self.counter)
        return inner

    def _cut_run(self, run: tuple[Interval, Interval] | None) -> Token | None:
        if run is None:
            return None
        first, last = run
        return self._cut(self._open[first.id], self._close[last.id])

    def _new_node(self, interval: Interval) -> tuple[Token, Token]:
        opening = self._tokens.make(interval, True)
        closing = self._tokens.make(interval, False)
        self._open[interval.id] = opening
        self._close[interval.id] = closing
        return opening, closing

    def _drop_node(self, interval: Interval) -> None:
        del self._open[interval.id]
        del self._close[interval.id]
        self._order.remove(interval)
        self._ends.remove(interval.end)

    def _add_node(self, interval: Interval) -> None:
        self._order.add(interval)
        self._ends.add(interval.end)

    def _run_between(self, floor: Endpoint | None, ceiling: Endpoint) -> tuple[Interval, Interval] | None:
        """First and last node ending in ``(floor, ceiling]``, or None."""
        lo = self._ends.bisect_right(floor) if floor is not None else 0
        hi = self._ends.bisect_right(ceiling)
        return (self._order[lo], self._order[hi - 1]) if lo < hi else None

    def _place(self, interval: Interval, segment: Token | None) -> None:
        """Splice an ordered node's subtree under its leftmost compatible node.

        The node goes right before its order successor when that successor is
        a sibling, otherwise it becomes the last child. The successor must
        already sit in its final place.
        """
        parent = self.lc(interval.end)
        rank = self._order.index(interval)
        nxt = self._order[rank + 1] if rank + 1 < len(self._order) else None
        if nxt is not None and self.lc(nxt.end) == parent:
            anchor = self._open[nxt.id]
        else:
            anchor = self._close[parent.id] if parent is not None else self._root_close
        self._insert_before(anchor, segment)
        self.reparent_calls += 1

    def _enter(self, mode: ForestMode) -> None:
        if self.mode is None:
            self.mode = mode
        elif self.mode is not mode:
            raise ModeViolation(f"forest is {self.mode}; cannot switch to {mode}")

    def reparent_range(self, children: Sequence[int], new_parent: int | None) -> None:
        """Move consecutive siblings, with their subtrees, under ``new_parent``.

        The run is attached as the first or the last children of the new
        parent, whichever keeps the child sequence ordered.

        Raises:
            NonContiguousRange: ``children`` are not consecutive siblings.
            ValueError: ``new_parent`` does not end after the moved run.
        """
        if not children:
            return
        ids = list(children)
        first = self._token(ids[0])
        if ids[-1] not in self._close:
            raise UnknownId(ids[-1])
        last = self._close[ids[-1]]
        for a, b in zip(ids, ids[1:], strict=False):
            after = tour.kth(self._tour, tour.rank(self._close[a], self.counter) + 1, self.counter)
            if after is not self._open.get(b):
                raise NonContiguousRange(f"{a} and {b} are not adjacent siblings")
        moved = [self.interval(i) for i in ids]
        if new_parent is None:
            target_open, target_close = self._root_open, self._root_close
        else:
            target = self.interval(new_parent)
            if any(not child.end < target.end for child in moved):
                raise ValueError(f"{target} must end after every moved child")
            target_open, target_close = self._open[new_parent], self._close[new_parent]
            lo, hi = tour.rank(first, self.counter), tour.rank(last, self.counter)
            if lo <= tour.rank(target_open, self.counter) <= hi:
                raise ValueError(f"{target} lies inside the moved range")
        segment = self._cut(first, last)
        after_open = tour.kth(self._tour, tour.rank(target_open, self.counter) + 1, self.counter)
        if after_open.owner is not None and after_open.opening and moved[-1].end < after_open.owner.end:
            self._insert_after(target_open, segment)
        else:
            self._insert_before(target_close, segment)
        self.reparent_calls += 1

    def on_delete(self, interval: Interval, activated: Sequence[Interval]) -> None:
        """Remove a deleted node and attach the intervals its deletion activated.

        The deleted node's children first move to its order successor, where
        they lead the child sequence. The activated intervals then take
        consecutive runs off the front of that sequence, the first run going
        to the first activated interval.

        Raises:
            InconsistentActivation: ``activated`` cannot be the activation set.
            ModeViolation: The forest already received inserts.
        """
        self._enter(ForestMode.DELETE_ONLY)
        if interval.id not in self._open:
            if activated:
                raise InconsistentActivation(f"inactive {interval} cannot activate intervals")
            return
        for prev, cur in zip(activated, activated[1:], strict=False):
            if not prev.end < cur.end:
                raise InconsistentActivation("activated intervals must be in scheduling order")
        for new in activated:
            if new.id in self._open or new.id == interval.id or not contains(new, interval):
                raise InconsistentActivation(f"{new} cannot be activated by deleting {interval}")

        rank = self._order.index(interval)
        pred = self._order[rank - 1] if rank > 0 else None
        succ = self._order[rank + 1] if rank + 1 < len(self._order) else None
        inner = self._strip(self._cut(self._open[interval.id], self._close[interval.id]))
        self._drop_node(interval)
        self._insert_after(self._open[succ.id] if succ else self._root_open, inner)
        self.reparent_calls += 1

        runs = []
        floor = pred.start if pred is not None else None
        for new in activated:
            runs.append(self._run_between(floor, new.start))
            floor = new.start
        for new in activated:
            self._add_node(new)
        # Back to front, so every order successor is already in place.
        for new, run in zip(reversed(activated), reversed(runs), strict=True):
            adopted = self._cut_run(run)
            opening, closing = self._new_node(new)
            self._place(new, tour.concat((opening, adopted, closing), self.counter))

    def on_insert(self, interval: Interval, deactivated: Sequence[Interval]) -> None:
        """Attach an inserted interval if it is active, retiring the nodes it deactivates.

        Raises:
            InconsistentActivation: ``deactivated`` disagrees with the node set.
            ModeViolation: The forest already received deletes.
        """
        self._enter(ForestMode.INSERT_ONLY)
        if interval.id in self._open:
            raise InconsistentActivation(f"{interval} is already a node")
        right = self._order.bisect_key_left(interval.start)
        if right < len(self._order) and self._order[right].end < interval.end:
            if deactivated:
                raise InconsistentActivation(f"inactive {interval} cannot deactivate intervals")
            return
        left = self._ends.bisect_right(interval.end)
        retired = list(self._order[left:right])
        if [d.id for d in retired] != [d.id for d in deactivated]:
            raise InconsistentActivation(f"deactivation set for {interval} disagrees")

        inners: list[Token | None] = []
        for old in retired:
            inners.append(self._strip(self._cut(self._open[old.id], self._close[old.id])))
            self._drop_node(old)

        self._add_node(interval)
        rank = self._order.index(interval)
        pred = self._order[rank - 1] if rank > 0 else None
        # Children of the retired nodes all end before the last retired start;
        # nodes ending between that start and the new start lead the child
        # sequence of the new node's successor.
        if retired:
            floor: Endpoint | None = retired[-1].start
        else:
            floor = pred.start if pred is not None else None
        adopted = self._cut_run(self._run_between(floor, interval.start))
        opening, closing = self._new_node(interval)
        self._place(interval, tour.concat((opening, *inners, adopted, closing), self.counter))

    def check_against_rebuild(self) -> None:
        """Assert the tour matches a from-scratch build (test support)."""
        fresh = GreedyForest.build(self.actives())
        assert self.parent_map() == fresh.parent_map(), "parent map drifted"
        assert [i.id for i in self.preorder_sequence()] == [
            i.id for i in fresh.preorder_sequence()
        ], "preorder drifted"
