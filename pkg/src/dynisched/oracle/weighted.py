"""Weighted interval scheduling by predecessor dynamic programming."""

from bisect import bisect_right
from collections.abc import Iterable

from dynisched.models.intervals import Interval, end_key


def static_wis(intervals: Iterable[Interval]) -> int:
    """Maximum total weight of a pairwise compatible subset.

    Intervals are sorted by end; ``best[i]`` is the optimum over the first
    ``i`` of them and the predecessor of interval ``i`` is found by binary
    search over the sorted ends.
    """
    ordered = sorted(intervals, key=end_key)
    ends = [interval.end for interval in ordered]
    best = [0] * (len(ordered) + 1)
    for i, interval in enumerate(ordered):
        if interval.weight < 0:
            raise ValueError(f"interval {interval.id} has negative weight")
        before = bisect_right(ends, interval.start, 0, i)
        best[i + 1] = max(best[i], best[before] + interval.weight)
    return best[-1]
