"""Greedy states: one busy-until witness per machine."""

from collections.abc import Iterable
from dataclasses import dataclass

from dynisched.models.intervals import NEG_INF, Endpoint, Interval


@dataclass(frozen=True, slots=True)
class Real:
    """A machine whose last accepted interval is known."""

    interval: Interval

    @property
    def busy(self) -> Endpoint:
        return self.interval.end

    @property
    def start(self) -> Endpoint:
        return self.interval.start

    def __str__(self) -> str:
        return str(self.interval)


@dataclass(frozen=True, slots=True)
class Barred:
    """A machine busy up to ``busy_until`` without a named interval.

    Inside a part it behaves as the zero-length pseudo-interval
    ``(busy_until, busy_until)``: active, containing nothing, never accepted.
    """

    busy_until: Endpoint

    @property
    def busy(self) -> Endpoint:
        return self.busy_until

    @property
    def start(self) -> Endpoint:
        return self.busy_until

    def __str__(self) -> str:
        return f"|{self.busy_until}"


Component = Real | Barred


def rank_key(component: Component) -> tuple[bool, Endpoint]:
    """Barred components rank below every Real, then by busy-until."""
    return isinstance(component, Real), component.busy


@dataclass(frozen=True, slots=True)
class GreedyState:
    """Canonically ordered multiset of ``m`` machine components.

    A ``Barred`` component stands for a machine entering a part that has not
    accepted any of the part's intervals yet. Its true busy-until precedes
    every end in the part even when rounding lifted it past some of them, so
    it ranks below every ``Real`` component.
    """

    components: tuple[Component, ...]

    @classmethod
    def of(cls, components: Iterable[Component]) -> "GreedyState":
        return cls(tuple(sorted(components, key=rank_key)))

    @classmethod
    def initial(cls, m: int) -> "GreedyState":
        """``m`` machines that were busy before anything started."""
        if m < 1:
            raise ValueError(f"machine count must be positive, got {m}")
        return cls((Barred(NEG_INF),) * m)

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def horizon(self) -> Endpoint:
        """Latest end among the real components; intervals up to it were decided."""
        ends = [c.busy for c in self.components if isinstance(c, Real)]
        return max(ends) if ends else NEG_INF

    @property
    def min_busy(self) -> Endpoint:
        """Earliest start any machine can take."""
        return min(c.busy for c in self.components)

    @property
    def ordered(self) -> bool:
        """True when no rounded entry point lies past a real component's end."""
        busy = [c.busy for c in self.components]
        return all(a <= b for a, b in zip(busy, busy[1:]))

    @property
    def reals(self) -> list[Interval]:
        return [c.interval for c in self.components if isinstance(c, Real)]

    def latest_compatible(self, start: Endpoint) -> int | None:
        """Position of the highest-ranked component with busy-until <= ``start``."""
        pick = None
        for pos, component in enumerate(self.components):
            if component.busy <= start:
                pick = pos
        return pick

    def replace_at(self, pos: int, component: Component) -> "GreedyState":
        rest = self.components[:pos] + self.components[pos + 1 :]
        return GreedyState.of((*rest, component))

    def __str__(self) -> str:
        return "{" + ", ".join(str(c) for c in self.components) + "}"
