"""Weighted interval instances encoding minimum-weight cycles.

Node ``u`` of layer ``p`` sits at coordinate ``(p - 1) * n + u``. An edge
becomes an interval spanning from its tail coordinate to its head coordinate,
edges out of the last layer close back onto the guessed start node ``s`` of
layer 1, and a guess interval ``[-1, s)`` pins the cycle's start. Weights
reward covered length first, so an optimum covers ``[-1, k * n)`` without gap
whenever some cycle passes through ``s``, and among full covers it prefers
the lightest cycle.
"""

import logging
from dataclasses import dataclass

from pydantic import BaseModel, Field

from dynisched.engines.naive import NaiveEngine
from dynisched.models.trace import DeleteOp, InsertOp, QueryOp
from dynisched.reduction.graph import CircleLayeredGraph

logger = logging.getLogger(__name__)

Edge = tuple[int, int, int, int]


class NodeOutOfRange(ValueError):
    """The guessed start node is not a node of layer 1."""


class ReductionInstance(BaseModel):
    """The weighted intervals for one guessed start node."""

    ell: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    max_weight: int = Field(..., ge=1, description="W, the largest edge weight")
    guess: int = Field(..., ge=0, description="Start node s in layer 1")
    ops: list[InsertOp] = Field(default_factory=list)
    sources: dict[int, Edge | None] = Field(
        default_factory=dict, description="Interval id to its edge; None for the guess"
    )

    @property
    def k(self) -> int:
        return 2 * self.ell + 1

    @property
    def unit(self) -> int:
        """Weight of one unit of covered length, ``(2l + 1)(W + 1)``."""
        return self.k * (self.max_weight + 1)

    @property
    def total_span(self) -> int:
        return self.k * self.n + 1

    @property
    def full_span_value(self) -> int:
        return self.total_span * self.unit

    def decode(self, value: int) -> int | None:
        """Cycle weight behind an optimum value, None when it does not cover the full span."""
        if value < self.full_span_value:
            return None
        return self.k * self.max_weight - (value - self.full_span_value)

    def switch_ops(self, previous: "ReductionInstance | None") -> list[InsertOp | DeleteOp]:
        """Deletes of intervals only ``previous`` has, then inserts of intervals only this one has."""
        before = {op.id for op in previous.ops} if previous is not None else set()
        now = {op.id for op in self.ops}
        deletes: list[InsertOp | DeleteOp] = [DeleteOp(id=i) for i in sorted(before - now)]
        return deletes + [op for op in self.ops if op.id not in before]


def build_instance(g: CircleLayeredGraph, s: int) -> ReductionInstance:
    """Weighted intervals of ``g`` with ``s`` guessed as the cycle's layer-1 node.

    Interval ids are edge positions in ``g.edges()``; the guess takes id
    ``len(g) + s`` so instances for different guesses share their edge ids.

    Raises:
        NodeOutOfRange: ``s`` is not in ``0..n-1``.
    """
    if not 0 <= s < g.n:
        raise NodeOutOfRange(f"guess {s} is not a node of layer 1 (n={g.n})")
    instance = ReductionInstance(ell=g.ell, n=g.n, max_weight=g.max_weight, guess=s)
    unit, n, big_w = instance.unit, g.n, instance.max_weight
    edges = g.edges()
    for id, (p, u, v, w) in enumerate(edges):
        start = (p - 1) * n + u
        if p < g.k:
            end = p * n + v
        elif v == s:
            end = g.k * n
        else:
            continue
        instance.ops.append(InsertOp(id=id, s=start, f=end, weight=(end - start) * unit + big_w - w))
        instance.sources[id] = (p, u, v, w)
    guess_id = len(edges) + s
    instance.ops.append(InsertOp(id=guess_id, s=-1, f=s, weight=(s + 1) * unit))
    instance.sources[guess_id] = None
    return instance


@dataclass(frozen=True, slots=True)
class SolveResult:
    """Minimum cycle weight over all guesses, the guess achieving it and its optimum value."""

    weight: int | None
    witness: int | None
    value: int | None


def solve(g: CircleLayeredGraph) -> SolveResult:
    """Minimum-weight cycle through all layers, by weighted interval scheduling.

    One naive weighted engine is kept across guesses; moving to the next
    guess deletes the previous guess and closing intervals before inserting
    the new ones.
    """
    engine = NaiveEngine(weighted=True)
    previous: ReductionInstance | None = None
    best = SolveResult(None, None, None)
    for s in range(g.n):
        instance = build_instance(g, s)
        for op in instance.switch_ops(previous):
            engine.apply(op)
        previous = instance
        value = engine.apply(QueryOp())
        assert value is not None
        weight = instance.decode(value)
        logger.debug("Guess %d: optimum %d, cycle weight %s", s, value, weight)
        if weight is not None and (best.weight is None or weight < best.weight):
            best = SolveResult(weight, s, value)
    return best
