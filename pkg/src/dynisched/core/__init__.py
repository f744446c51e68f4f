"""Core structures shared by every engine."""

from .base import SchedulerProtocol
from .counter import OpCounter
from .errors import (
    DuplicateId,
    ModeViolation,
    SchedulingError,
    UnknownId,
)
from .index import GlobalIndex

__all__ = [
    "DuplicateId",
    "GlobalIndex",
    "ModeViolation",
    "OpCounter",
    "SchedulerProtocol",
    "SchedulingError",
    "UnknownId",
]
