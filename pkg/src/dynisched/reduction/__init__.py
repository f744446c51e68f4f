"""Minimum-weight cycle to weighted interval scheduling reduction."""

from .graph import BRUTE_LIMIT, CircleLayeredGraph, TooLarge, brute_cycle, gen_graph
from .instance import NodeOutOfRange, ReductionInstance, SolveResult, build_instance, solve

__all__ = [
    "BRUTE_LIMIT",
    "CircleLayeredGraph",
    "NodeOutOfRange",
    "ReductionInstance",
    "SolveResult",
    "TooLarge",
    "brute_cycle",
    "build_instance",
    "gen_graph",
    "solve",
]
