"""Shared plumbing for every scheduling engine.

``EngineBase`` owns the live-id bookkeeping, endpoint stamping and the debug
shadow check; subclasses only implement ``_insert``, ``_delete`` and
``_query`` over already stamped intervals.
"""

import logging
from abc import ABC, abstractmethod
from typing import ClassVar

from dynisched.core.counter import OpCounter
from dynisched.core.errors import DuplicateId, OracleMismatch, UnknownId, UnsupportedMachineCount
from dynisched.models.intervals import Interval, IntervalStamper
from dynisched.models.trace import DeleteOp, InsertOp, QueryOp
from dynisched.oracle import static_is, static_multi, static_wis

logger = logging.getLogger(__name__)


class EngineBase(ABC):
    """Base class for engines consuming trace operations.

    Attributes:
        name: Engine name as accepted by ``--engine``.
        min_machines: Smallest supported machine count.
        max_machines: Largest supported machine count, None for unbounded.
    """

    name: ClassVar[str]
    min_machines: ClassVar[int] = 1
    max_machines: ClassVar[int | None] = 1

    def __init__(self, machines: int = 1, *, debug_assert: bool = False) -> None:
        hi = self.max_machines
        if machines < self.min_machines or (hi is not None and machines > hi):
            bounds = f"{self.min_machines}..{hi}" if hi is not None else f">= {self.min_machines}"
            raise UnsupportedMachineCount(
                f"engine '{self.name}' supports {bounds} machines, got {machines}"
            )
        self.machines = machines
        self.debug_assert = debug_assert
        self.weighted = False
        self.counter = OpCounter()
        self._live: dict[int, Interval] = {}
        self._issued: set[int] = set()
        self._stamper = IntervalStamper()
        self._rebuilds = 0
        self.queries = 0

    def __len__(self) -> int:
        return len(self._live)

    @property
    def elementary_ops(self) -> int:
        return self.counter.ticks

    @property
    def rebuild_count(self) -> int:
        return self._rebuilds

    def live(self) -> list[Interval]:
        return list(self._live.values())

    def apply(self, op: InsertOp | DeleteOp | QueryOp) -> int | None:
        """Apply one trace operation; queries return the optimum, mutations None.

        Raises:
            DuplicateId: An insert reuses an id issued earlier, live or deleted.
            UnknownId: A delete names an id that is not live.
            OracleMismatch: Debug shadow checking found a wrong answer.
        """
        match op:
            case InsertOp(id=id, s=s, f=f, weight=weight):
                if id in self._issued:
                    raise DuplicateId(id)
                interval = self._stamper.stamp(id, s, f, weight)
                self._insert(interval)
                self._live[id] = interval
                self._issued.add(id)
                return None
            case DeleteOp(id=id):
                interval = self._live.get(id)
                if interval is None:
                    raise UnknownId(id)
                self._delete(interval)
                del self._live[id]
                return None
            case QueryOp():
                self.queries += 1
                answer = self._query()
                if self.debug_assert:
                    expected = self.oracle_answer()
                    if answer != expected:
                        raise OracleMismatch(
                            f"{self.name}: query {self.queries} answered {answer}, oracle says {expected}"
                        )
                return answer
        raise TypeError(f"not a trace operation: {op!r}")

    def oracle_answer(self) -> int:
        """The brute-force answer for the current live set."""
        if self.weighted:
            return static_wis(self._live.values())
        if self.machines == 1:
            return static_is(self._live.values())
        return static_multi(self._live.values(), self.machines).count

    def stats(self) -> dict[str, int]:
        return {
            "live": len(self._live),
            "queries": self.queries,
            "elementary_ops": self.elementary_ops,
            "rebuild_count": self.rebuild_count,
        }

    @abstractmethod
    def _insert(self, interval: Interval) -> None: ...

    @abstractmethod
    def _delete(self, interval: Interval) -> None: ...

    @abstractmethod
    def _query(self) -> int: ...
