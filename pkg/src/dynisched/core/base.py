"""The engine-facing scheduler contract."""

from typing import Protocol, runtime_checkable

from dynisched.models.trace import DeleteOp, InsertOp, QueryOp


@runtime_checkable
class SchedulerProtocol(Protocol):
    """Every engine consumes trace operations one at a time.

    ``apply`` returns the optimum (size, or weight for weighted engines) for a
    query and None for mutations. Engines never expose the schedule itself.
    """

    name: str
    machines: int

    def apply(self, op: InsertOp | DeleteOp | QueryOp) -> int | None:
        """Apply one operation."""
        ...

    @property
    def elementary_ops(self) -> int:
        """Comparisons and tree-node visits performed so far."""
        ...

    @property
    def rebuild_count(self) -> int:
        """Structural rebuilds performed so far."""
        ...

    def stats(self) -> dict[str, int]:
        """Engine-specific counters for reporting."""
        ...
