"""Random trace generation.

Every model draws from one ``random.Random(seed)`` so a seed always
reproduces the same trace. Deletes only name live ids; a delete drawn while
nothing is live becomes an insert.
"""

import logging
import random
from enum import StrEnum
from typing import NamedTuple

from pydantic import BaseModel, Field, field_validator

from dynisched.models.trace import DeleteOp, InsertOp, QueryOp

logger = logging.getLogger(__name__)

Op = InsertOp | DeleteOp | QueryOp

# Share of sliding-window deletes that take the oldest live interval.
SLIDING_OLDEST_BIAS = 0.8

# Nested inserts that wrap an existing interval rather than start fresh.
NESTED_WRAP_SHARE = 0.7


class BadMix(ValueError):
    """An ``i:d:q`` operation mix that is malformed or does not sum to 1."""


class WorkloadModel(StrEnum):
    UNIFORM = "uniform"
    NESTED = "nested"
    SLIDING = "sliding"
    PARTCHURN = "partchurn"


class Mix(NamedTuple):
    insert: float
    delete: float
    query: float


def parse_mix(text: str) -> Mix:
    """Parse ``"i:d:q"`` shares, e.g. ``"0.5:0.3:0.2"``.

    Raises:
        BadMix: Not three non-negative numbers summing to 1.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise BadMix(f"mix {text!r} must have the form i:d:q")
    try:
        shares = [float(p) for p in parts]
    except ValueError:
        raise BadMix(f"mix {text!r} has a non-numeric share")
    if any(share < 0 for share in shares):
        raise BadMix(f"mix {text!r} has a negative share")
    if abs(sum(shares) - 1.0) > 1e-6:
        raise BadMix(f"mix {text!r} sums to {sum(shares):g}, not 1")
    return Mix(*shares)


class WorkloadParams(BaseModel):
    """Parameters of one generated trace."""

    model: WorkloadModel = Field(default=WorkloadModel.UNIFORM)
    ops: int = Field(default=1000, ge=0, description="Number of operations")
    mix: str = Field(default="0.5:0.3:0.2", description="Insert:delete:query shares")
    coord_range: int = Field(default=10_000, ge=2, description="Coordinates are drawn from [0, coord_range)")
    max_length: int = Field(default=100, ge=1, description="Longest generated interval")
    seed: int = Field(default=0)

    @field_validator("mix")
    @classmethod
    def check_mix(cls, value: str) -> str:
        parse_mix(value)
        return value

    def header(self) -> dict[str, str]:
        return {"model": str(self.model), "seed": str(self.seed), "ops": str(self.ops)}


class WorkloadGenerator:
    """Draws one trace for a ``WorkloadParams``."""

    def __init__(self, params: WorkloadParams) -> None:
        self.params = params
        self.mix = parse_mix(params.mix)
        self.rng = random.Random(params.seed)
        self._next_id = 0
        # Live ids in insertion order with their coordinates.
        self._live: dict[int, tuple[int, int]] = {}
        self._clock = 0

    def generate(self) -> list[Op]:
        ops: list[Op] = []
        for _ in range(self.params.ops):
            ops.append(self._draw())
        logger.debug(
            "Generated %d %s operations (seed %d), %d live at end",
            len(ops),
            self.params.model,
            self.params.seed,
            len(self._live),
        )
        return ops

    def _draw(self) -> Op:
        roll = self.rng.random()
        if roll < self.mix.insert or (roll < self.mix.insert + self.mix.delete and not self._live):
            return self._insert()
        if roll < self.mix.insert + self.mix.delete:
            return self._delete()
        return QueryOp()

    def _insert(self) -> InsertOp:
        s, f = self._coordinates()
        op = InsertOp(id=self._next_id, s=s, f=f)
        self._live[op.id] = (s, f)
        self._next_id += 1
        return op

    def _delete(self) -> DeleteOp:
        ids = list(self._live)
        match self.params.model:
            case WorkloadModel.SLIDING if self.rng.random() < SLIDING_OLDEST_BIAS:
                victim = ids[0]
            case WorkloadModel.PARTCHURN:
                victim = ids[-1]
            case _:
                victim = self.rng.choice(ids)
        del self._live[victim]
        return DeleteOp(id=victim)

    def _coordinates(self) -> tuple[int, int]:
        p = self.params
        rng = self.rng
        match p.model:
            case WorkloadModel.NESTED if self._live and rng.random() < NESTED_WRAP_SHARE:
                s, f = self._live[rng.choice(list(self._live))]
                return s - rng.randint(1, p.max_length), f + rng.randint(1, p.max_length)
            case WorkloadModel.SLIDING:
                self._clock += rng.randint(0, max(1, p.max_length // 4))
                s = self._clock
            case WorkloadModel.PARTCHURN:
                width = max(2, p.coord_range // 100)
                s = p.coord_range // 2 + rng.randrange(width)
            case _:
                s = rng.randrange(p.coord_range)
        return s, s + rng.randint(1, p.max_length)


def generate(params: WorkloadParams) -> list[Op]:
    """Deterministic trace for ``params``."""
    return WorkloadGenerator(params).generate()
