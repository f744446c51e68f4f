"""Brute-force reference algorithms."""

from .greedy import (
    MachineAssignment,
    active_subset,
    brute_lc,
    greedy_chain,
    is_active,
    latest_inside,
    part_sim,
    part_sim_accepted,
    state_trace,
    static_is,
    static_multi,
)
from .weighted import static_wis

__all__ = [
    "MachineAssignment",
    "active_subset",
    "brute_lc",
    "greedy_chain",
    "is_active",
    "latest_inside",
    "part_sim",
    "part_sim_accepted",
    "state_trace",
    "static_is",
    "static_multi",
    "static_wis",
]
