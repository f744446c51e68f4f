"""Tests for segment trees, the stabbing index and the static greedy tree."""

from dynisched.core.counter import OpCounter
from dynisched.core.segment_tree import MaxSegmentTree, MinSegmentTree, next_power_of_two
from dynisched.models.intervals import POS_INF, Interval
from dynisched.structures import ROOT, StabbingIndex, StaticTree


class TestSegmentTrees:
    """Tests for the array-backed segment trees."""

    def test_next_power_of_two(self) -> None:
        assert [next_power_of_two(n) for n in (1, 2, 3, 5, 8)] == [1, 2, 4, 8, 8]

    def test_min_range_and_update(self) -> None:
        tree = MinSegmentTree.build([5, 3, 8, 1, 9], 10**9)
        assert tree.min() == 1
        assert tree.min(0, 3) == 3
        assert tree.min(4, 5) == 9
        tree[3] = 7
        assert tree.min() == 3
        assert tree[3] == 7

    def test_find_first(self) -> None:
        tree = MaxSegmentTree.build([1, 5, 2, 7], 0)
        assert tree.find_first(0, 5) == 1
        assert tree.find_first(2, 5) == 3
        assert tree.find_first(0, 8) == -1
        assert tree.find_first(9, 0) == -1
        assert tree.max(0, 3) == 5

    def test_counts_ticks(self) -> None:
        counter = OpCounter()
        tree = MinSegmentTree.build([4, 2], 99, counter)
        before = counter.ticks
        tree.min(0, 2)
        assert counter.ticks > before


class TestStabbingIndex:
    """Tests for deepest-window stabbing queries."""

    def test_deepest_window(self) -> None:
        index = StabbingIndex([(1, 0, 10), (2, 3, 5), (3, 4, 4)])
        assert index.query(4, 3) == 3
        assert index.query(4, 2) == 2
        assert index.query(5, 3) == 2
        assert index.query(6, 3) == 1
        assert index.window_count == 3

    def test_outside_every_window(self) -> None:
        index = StabbingIndex([(1, 0, 10), (2, 3, 5)])
        assert index.query(11, 5) is None
        assert index.query(-1, 5) is None
        assert index.query(4, 0) is None

    def test_empty_windows_are_dropped(self) -> None:
        index = StabbingIndex([(1, 5, 4)])
        assert index.window_count == 0
        assert index.query(5, 9) is None


class TestStaticTree:
    """Tests for the static greedy tree with entry points."""

    def test_parents_and_depths(self, fix1: dict[str, Interval]) -> None:
        actives = [fix1[n] for n in "ACBD"]
        tree = StaticTree(actives, [])
        a, c, b, d = (tree.node_of_active(i) for i in actives)
        assert (a, c, b, d) == (1, 2, 3, 4)
        assert [int(tree.parent[n]) for n in (a, c, b, d)] == [b, d, d, ROOT]
        assert [int(tree.depth[n]) for n in (a, c, b, d)] == [3, 2, 2, 1]

    def test_ancestor_and_lca(self, fix1: dict[str, Interval]) -> None:
        actives = [fix1[n] for n in "ACBD"]
        tree = StaticTree(actives, [])
        assert tree.ancestor(1, 1) == 3
        assert tree.ancestor(1, 2) == 4
        assert tree.ancestor(1, 10) == ROOT
        assert tree.lca(1, 2) == 4
        assert tree.lca(1, 3) == 3
        assert tree.interval(4) == fix1["D"]
        assert tree.interval(ROOT) is None

    def test_entry_points_hang_like_leaves(self, fix1: dict[str, Interval]) -> None:
        actives = [fix1[n] for n in "ACBD"]
        points = [fix1["B"].start, POS_INF]
        tree = StaticTree(actives, points)
        at_b = tree.node_of_point(fix1["B"].start)
        at_inf = tree.node_of_point(POS_INF)
        assert at_b is not None and tree.is_point(at_b)
        assert int(tree.parent[at_b]) == tree.node_of_active(fix1["B"])
        assert at_inf is not None and int(tree.parent[at_inf]) == ROOT

    def test_last_before(self, fix1: dict[str, Interval]) -> None:
        actives = [fix1[n] for n in "ACBD"]
        tree = StaticTree(actives, [])
        # End ranks follow scheduling order: A, C, B, D.
        assert tree.last_before(1, int(tree.end_rank[4])) == 3
        assert tree.last_before(1, int(tree.end_rank[1])) == 1
