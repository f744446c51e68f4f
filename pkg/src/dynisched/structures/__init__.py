"""Data structures behind the engines."""

from .active_set import DominanceFront, FrontMode
from .greedy_forest import ForestMode, GreedyForest, NodeInfo, PathStats
from .partition import EpochRebuild, KeyMode, Merge, Partition, Signal, Split, ceil_power
from .stabbing import StabbingIndex
from .static_tree import ROOT, StaticTree

__all__ = [
    "ROOT",
    "DominanceFront",
    "EpochRebuild",
    "ForestMode",
    "FrontMode",
    "GreedyForest",
    "KeyMode",
    "Merge",
    "NodeInfo",
    "Partition",
    "PathStats",
    "Signal",
    "Split",
    "StabbingIndex",
    "StaticTree",
    "ceil_power",
]
