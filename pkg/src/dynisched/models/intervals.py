"""Perturbed endpoints, intervals and the pairwise relations between them.

Every stored endpoint is a ``(coord, tie)`` pair ordered lexicographically.
Start endpoints take the insertion sequence number as tie, end endpoints take
the sequence number shifted below every start tie. At equal coordinates all
ends therefore sort before all starts, so half-open intervals that touch are
compatible, and two intervals with identical coordinates cross: the later
insertion starts later and ends later.
"""

from dataclasses import dataclass

# Ties of end endpoints live in [1 - TIE_SPAN, 0), ties of starts in [1, TIE_SPAN).
TIE_SPAN = 1 << 62

# Input coordinates must stay strictly inside the sentinel range.
COORD_LIMIT = 1 << 61


@dataclass(frozen=True, order=True, slots=True)
class Endpoint:
    """A point on the time axis with a unique tie-breaking sequence id."""

    coord: int
    tie: int

    def __str__(self) -> str:
        if self == NEG_INF:
            return "-inf"
        if self == POS_INF:
            return "+inf"
        return str(self.coord)


NEG_INF = Endpoint(-(1 << 62), 0)
POS_INF = Endpoint(1 << 62, 0)


def start_point(coord: int, seq: int) -> Endpoint:
    """Endpoint for the start of the ``seq``-th inserted interval."""
    return Endpoint(coord, seq)


def end_point(coord: int, seq: int) -> Endpoint:
    """Endpoint for the end of the ``seq``-th inserted interval."""
    return Endpoint(coord, seq - TIE_SPAN)


@dataclass(frozen=True, slots=True)
class Interval:
    """A job: an identified half-open time segment with an integer weight."""

    id: int
    start: Endpoint
    end: Endpoint
    weight: int = 1

    def __post_init__(self) -> None:
        if not self.start < self.end:
            raise ValueError(f"interval {self.id} must start before it ends")
        if self.weight < 0:
            raise ValueError(f"interval {self.id} has negative weight {self.weight}")

    @classmethod
    def make(cls, id: int, s: int, f: int, seq: int, weight: int = 1) -> "Interval":
        """Build an interval from raw coordinates and its insertion sequence number.

        Args:
            id: Caller-chosen handle, never reused within a trace.
            s: Start coordinate.
            f: End coordinate, strictly greater than ``s``.
            seq: Insertion sequence number (>= 1), unique per interval.
            weight: Nonnegative weight, 1 for unweighted engines.
        """
        if seq < 1 or seq >= TIE_SPAN:
            raise ValueError(f"sequence number {seq} out of range")
        for coord in (s, f):
            if not -COORD_LIMIT < coord < COORD_LIMIT:
                raise ValueError(f"coordinate {coord} out of range")
        if s >= f:
            raise ValueError(f"interval {id} must satisfy start < end, got [{s}, {f})")
        return cls(id, start_point(s, seq), end_point(f, seq), weight)

    @property
    def s(self) -> int:
        return self.start.coord

    @property
    def f(self) -> int:
        return self.end.coord

    def __str__(self) -> str:
        return f"#{self.id}[{self.s},{self.f})"


def compatible(a: Interval, b: Interval) -> bool:
    """True iff the two intervals are disjoint and may share a machine."""
    return a.end <= b.start or b.end <= a.start


def contains(outer: Interval, inner: Interval) -> bool:
    """True iff ``inner`` is nested inside ``outer`` (reflexive)."""
    return outer.start <= inner.start and inner.end <= outer.end


def precedes(a: Interval, b: Interval) -> bool:
    """The scheduling order: ``a`` ends strictly before ``b``."""
    return a.end < b.end


def start_key(interval: Interval) -> Endpoint:
    return interval.start


def end_key(interval: Interval) -> Endpoint:
    return interval.end


class IntervalStamper:
    """Hands out insertion sequence numbers so ties agree across engines."""

    def __init__(self) -> None:
        self._seq = 0

    @property
    def issued(self) -> int:
        return self._seq

    def stamp(self, id: int, s: int, f: int, weight: int = 1) -> Interval:
        self._seq += 1
        return Interval.make(id, s, f, self._seq, weight)
