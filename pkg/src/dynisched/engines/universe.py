"""One end-keyed part seen by the multi-machine greedy.

A part universe holds the part's real intervals plus one zero-length entry
point per distinct start (and +inf). Entry states are rounded onto those
points, so a ``Barred`` component is always a member of the universe and
hangs in the static greedy tree like an active leaf.

``run_part_query`` advances a greedy state through the part. It reads
memoised results for states a table knows how to key, jumps along greedy
tree paths when the state allows it, and otherwise steps one accepted
interval at a time.
"""

import logging
from bisect import bisect_left, bisect_right
from collections import defaultdict
from collections.abc import Callable, Hashable, Iterable
from itertools import combinations
from typing import Protocol

from dynisched.core.counter import OpCounter
from dynisched.core.errors import NotAllActive, OracleMismatch
from dynisched.core.segment_tree import MaxSegmentTree
from dynisched.models.intervals import NEG_INF, POS_INF, Endpoint, Interval, end_key
from dynisched.models.state import Barred, Component, GreedyState, Real
from dynisched.structures import ROOT, DominanceFront, StaticTree

logger = logging.getLogger(__name__)

StepObserver = Callable[[GreedyState, GreedyState, Interval], None]


class PartUniverse:
    """Intervals of one part with leftmost-compatible, tree and escape queries."""

    def __init__(
        self, intervals: Iterable[Interval], counter: OpCounter | None = None, *, debug: bool = False
    ) -> None:
        self.counter = counter or OpCounter()
        self.debug = debug
        self.reals = sorted(intervals, key=end_key)
        self.ends = [interval.end for interval in self.reals]
        self._rank = {interval.id: k for k, interval in enumerate(self.reals)}
        self.starts = sorted(interval.start for interval in self.reals)
        self.points = [*self.starts, POS_INF]
        self.front = DominanceFront.build(self.reals, self.counter)
        self.actives = self.front.actives()
        self._active_rank = {interval.id: k for k, interval in enumerate(self.actives)}
        self._active_ends = [interval.end for interval in self.actives]
        self.tree = StaticTree(self.actives, self.points, self.counter)
        self._starts_by_end = MaxSegmentTree.build(
            [interval.start for interval in self.reals], NEG_INF, self.counter
        )
        self.members: list[Component] = sorted(
            [*(Real(i) for i in self.reals), *(Barred(p) for p in self.points)],
            key=lambda c: (c.busy, isinstance(c, Real)),
        )
        self._member_rank = {c: k for k, c in enumerate(self.members)}
        self._escape = self._build_escape()

    def __len__(self) -> int:
        return len(self.reals)

    # ------------------------------------------------------------------
    # membership

    def is_active(self, interval: Interval) -> bool:
        return interval.id in self._active_rank

    def component_active(self, component: Component) -> bool:
        return isinstance(component, Barred) or self.is_active(component.interval)

    def index_sum(self, state: GreedyState) -> int:
        return sum(self._member_rank[c] for c in state.components)

    def node(self, component: Component) -> int | None:
        """Static tree node of an active member, None for inactive intervals."""
        if isinstance(component, Barred):
            return self.tree.node_of_point(component.busy_until)
        return self.tree.node_of_active(component.interval)

    def component_at(self, node: int) -> Component:
        interval = self.tree.interval(node)
        if interval is not None:
            return Real(interval)
        return Barred(self.tree.points[node - 1 - len(self.actives)])

    def parent(self, component: Component) -> Interval | None:
        node = self.node(component)
        if node is None:
            return None
        return self.tree.interval(int(self.tree.parent[node]))

    def succ_active(self, interval: Interval) -> Interval | None:
        k = self._active_rank[interval.id] + 1
        return self.actives[k] if k < len(self.actives) else None

    def latest_active_inside(self, interval: Interval) -> Interval | None:
        """The latest-ending active interval nested in ``interval``, itself excluded."""
        self.counter.tick()
        k = bisect_right(self._active_ends, interval.end) - 1
        if k >= 0 and self.actives[k].id == interval.id:
            k -= 1
        if k >= 0 and self.actives[k].start >= interval.start:
            return self.actives[k]
        return None

    # ------------------------------------------------------------------
    # greedy steps

    def round(self, busy: Endpoint) -> Endpoint:
        """First part start at or after ``busy``, +inf when there is none."""
        k = bisect_left(self.starts, busy)
        return self.starts[k] if k < len(self.starts) else POS_INF

    def lc_after(self, busy: Endpoint, horizon: Endpoint) -> Interval | None:
        """Earliest-ending interval that ends after ``horizon`` and starts at or after ``busy``."""
        k = self._starts_by_end.find_first(bisect_right(self.ends, horizon), busy)
        return self.reals[k] if 0 <= k < len(self.reals) else None

    def next_state(self, state: GreedyState) -> tuple[GreedyState, Interval | None]:
        """The state after the next accepted interval, or ``(state, None)`` when the part is exhausted."""
        accepted = self.lc_after(state.min_busy, state.horizon)
        if accepted is None:
            return state, None
        pos = state.latest_compatible(accepted.start)
        assert pos is not None
        return state.replace_at(pos, Real(accepted)), accepted

    def skip_common_ancestor(self, state: GreedyState) -> tuple[int, GreedyState]:
        """Jump every component up its greedy tree path to just below the first shared ancestor.

        Returns the number of intervals accepted on the way and the state
        reached; ``(0, state)`` when components coincide, a rounded entry point
        lies past a real component, or the earliest component's parent is
        already decided.

        Raises:
            NotAllActive: A component is an inactive interval.
        """
        found = [self.node(c) for c in state.components]
        nodes = [node for node in found if node is not None]
        if len(nodes) < len(found):
            raise NotAllActive(f"state {state} has inactive components")
        if not state.ordered:
            return 0, state
        tree = self.tree
        if len(set(nodes)) < len(nodes):
            return 0, state
        first_parent = self.tree.interval(int(tree.parent[nodes[0]]))
        if first_parent is not None and first_parent.end <= state.horizon:
            return 0, state
        common = ROOT
        for u, v in combinations(nodes, 2):
            lca = tree.lca(u, v)
            if tree.end_rank[lca] < tree.end_rank[common]:
                common = lca
        bound = int(tree.end_rank[common])
        hops = 0
        moved: list[Component] = []
        for component, node in zip(state.components, nodes, strict=True):
            top = tree.last_before(node, bound)
            hops += int(tree.depth[node] - tree.depth[top])
            moved.append(component if top == node else self.component_at(top))
        return hops, GreedyState.of(moved)

    def _build_escape(self) -> dict[int, tuple[Interval | None, int]]:
        """Per active interval: the first later interval off its tree path, and how many
        path intervals (itself included) end before it."""
        escape: dict[int, tuple[Interval | None, int]] = {}
        for interval in reversed(self.actives):
            self.counter.tick()
            k = self._rank[interval.id] + 1
            nxt = self.reals[k] if k < len(self.reals) else None
            parent = self.parent(Real(interval))
            if nxt is not None and parent is not None and nxt.id == parent.id:
                target, count = escape[parent.id]
                escape[interval.id] = (target, count + 1)
            else:
                escape[interval.id] = (nxt, 1)
        return escape

    def escape(self, interval: Interval) -> tuple[Interval | None, int]:
        return self._escape[interval.id]

    def escape_leap(self, state: GreedyState) -> tuple[int, GreedyState]:
        """Accept the whole run of tree ancestors of the latest component at once.

        Applies when the latest component is an active interval: every
        following interval in end order is its next ancestor, up to the escape.
        """
        top = state.components[-1]
        if not isinstance(top, Real) or not self.is_active(top.interval):
            return 0, state
        _, count = self._escape[top.interval.id]
        if count <= 1:
            return 0, state
        start = self.tree.node_of_active(top.interval)
        assert start is not None
        node = self.tree.ancestor(start, count - 1)
        return count - 1, state.replace_at(state.m - 1, self.component_at(node))

    def leap(self, state: GreedyState) -> tuple[int, GreedyState]:
        """Escape leap, else common-ancestor skip; ``(0, state)`` when neither moves."""
        hops, after = self.escape_leap(state)
        if not hops and all(self.node(c) is not None for c in state.components):
            hops, after = self.skip_common_ancestor(state)
        if hops and self.debug:
            self._check_leap(state, hops, after)
        return hops, after

    def _check_leap(self, state: GreedyState, hops: int, expected: GreedyState) -> None:
        for _ in range(hops):
            state, accepted = self.next_state(state)
            if accepted is None:
                raise OracleMismatch(f"leap of {hops} ran past the end of the part")
        if state != expected:
            raise OracleMismatch(f"leap reached {expected}, stepping reaches {state}")

    # ------------------------------------------------------------------
    # rounding

    def round_state(
        self, state: GreedyState
    ) -> tuple[GreedyState | None, dict[Endpoint, list[Component]]]:
        """Entry state on this part's points, and the originals behind each point.

        Returns ``None`` for the state when no machine can take a part interval.
        """
        originals: dict[Endpoint, list[Component]] = defaultdict(list)
        for component in state.components:
            originals[self.round(component.busy)].append(component)
        if set(originals) == {POS_INF}:
            return None, originals
        return GreedyState.of(Barred(p) for p, group in originals.items() for _ in group), originals

    @staticmethod
    def unround(exit_state: GreedyState, originals: dict[Endpoint, list[Component]]) -> GreedyState:
        """Put back the original components of machines that took nothing in the part.

        Among machines rounded to the same point the latest-busy ones took the
        part's intervals, so the earliest ones survive.
        """
        kept: list[Component] = []
        survivors: dict[Endpoint, int] = defaultdict(int)
        for component in exit_state.components:
            if isinstance(component, Barred):
                survivors[component.busy_until] += 1
            else:
                kept.append(component)
        for point, n in survivors.items():
            kept.extend(originals[point][:n])
        return GreedyState.of(kept)


class PartTables(Protocol):
    """Memoised part-query results for the states a table can key."""

    entries: dict[Hashable, tuple[int, GreedyState]]

    def key(self, state: GreedyState) -> Hashable | None: ...


def run_part_query(
    universe: PartUniverse,
    state: GreedyState,
    tables: PartTables | None = None,
    observer: StepObserver | None = None,
) -> tuple[int, GreedyState]:
    """Accepted count and exit state of the greedy resumed from ``state`` over one part.

    Every keyable state passed on the way is recorded in ``tables``.
    """
    count = 0
    pending: list[tuple[Hashable, int]] = []
    while True:
        if tables is not None and (key := tables.key(state)) is not None:
            hit = tables.entries.get(key)
            if hit is not None:
                count += hit[0]
                state = hit[1]
                break
            pending.append((key, count))
        hops, leaped = universe.leap(state)
        if hops:
            count += hops
            state = leaped
            continue
        after, accepted = universe.next_state(state)
        if accepted is None:
            break
        if observer is not None:
            observer(state, after, accepted)
        count += 1
        state = after
    if tables is not None:
        for key, before in pending:
            tables.entries[key] = (count - before, state)
    return count, state
