"""Domain models for dynisched."""

from .intervals import (
    NEG_INF,
    POS_INF,
    Endpoint,
    Interval,
    IntervalStamper,
    compatible,
    contains,
    end_key,
    precedes,
    start_key,
)
from .state import Barred, Component, GreedyState, Real
from .trace import DeleteOp, InsertOp, ParseError, QueryOp, TraceOp

__all__ = [
    "NEG_INF",
    "POS_INF",
    "Barred",
    "Component",
    "DeleteOp",
    "Endpoint",
    "GreedyState",
    "InsertOp",
    "Interval",
    "IntervalStamper",
    "ParseError",
    "QueryOp",
    "Real",
    "TraceOp",
    "compatible",
    "contains",
    "end_key",
    "precedes",
    "start_key",
]
