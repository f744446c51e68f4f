"""Scheduling engines and the engine factory."""

from .base import EngineBase
from .cuberoot import BufferInfo, CubeRootEngine, PartCore, SwitchRange
from .factory import ENGINES, EngineMachineMismatch, create_engine, engine_names, machine_range
from .mode import DeleteOnlyEngine, InsertOnlyEngine
from .multi import (
    CompressibleTables,
    FmrTable,
    MultiMachineEngine,
    TypeA,
    TypeB,
    TypeC,
    classify_compressible,
    decompress,
)
from .naive import NaiveEngine
from .partitioned import EndKeyedEngine, EndPart, PartitionedEngine
from .sqrt import PartChains, SqrtEngine
from .two import StateForm, TwoMachineEngine, TwoTables, classify_form
from .universe import PartUniverse, run_part_query

__all__ = [
    "ENGINES",
    "BufferInfo",
    "CompressibleTables",
    "CubeRootEngine",
    "DeleteOnlyEngine",
    "EndKeyedEngine",
    "EndPart",
    "EngineBase",
    "EngineMachineMismatch",
    "FmrTable",
    "InsertOnlyEngine",
    "MultiMachineEngine",
    "NaiveEngine",
    "PartChains",
    "PartCore",
    "PartUniverse",
    "PartitionedEngine",
    "SqrtEngine",
    "StateForm",
    "SwitchRange",
    "TwoMachineEngine",
    "TwoTables",
    "TypeA",
    "TypeB",
    "TypeC",
    "classify_compressible",
    "classify_form",
    "create_engine",
    "decompress",
    "engine_names",
    "machine_range",
    "run_part_query",
]
