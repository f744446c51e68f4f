"""Errors shared by the scheduling structures and engines."""


class SchedulingError(Exception):
    """Base class for dynisched structure and engine errors."""


class UnknownId(SchedulingError, KeyError):
    """An operation referenced an interval id that is not live."""

    def __init__(self, id: int) -> None:
        self.id = id
        super().__init__(f"unknown interval id {id}")

    def __str__(self) -> str:
        return f"unknown interval id {self.id}"


class DuplicateId(SchedulingError):
    """An insert reused an id already issued in this trace."""

    def __init__(self, id: int) -> None:
        self.id = id
        super().__init__(f"interval id {id} was already inserted")


class ModeViolation(SchedulingError):
    """A single-mode structure received a mutation of the other kind."""


class NotMonotonic(SchedulingError):
    """Start order and end order of an interval set disagree."""


class DepthOutOfRange(SchedulingError):
    """A level-ancestor query asked for a depth outside the node's path."""


class NonContiguousRange(SchedulingError):
    """Children to reparent are not a contiguous run of siblings."""


class InconsistentActivation(SchedulingError):
    """A forest update disagrees with the active-set ground truth."""


class InactiveEntry(SchedulingError):
    """A part was entered at an interval that is neither active nor buffered."""


class UnclassifiableState(SchedulingError):
    """A two-machine state matches none of the three reachable forms."""


class NotAllActive(SchedulingError):
    """A greedy-tree skip was requested for a state with inactive components."""


class UnsupportedMachineCount(SchedulingError, ValueError):
    """The engine does not support the requested number of machines."""


class OracleMismatch(SchedulingError, AssertionError):
    """A debug shadow check found an engine answer that differs from the oracle."""
