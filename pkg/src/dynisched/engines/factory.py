"""Factory for creating engines by name.

Centralizes engine selection so the run, verify and bench commands build
engines the same way and reject machine counts an engine cannot serve.
"""

from dynisched.engines.base import EngineBase
from dynisched.engines.cuberoot import CubeRootEngine
from dynisched.engines.mode import DeleteOnlyEngine, InsertOnlyEngine
from dynisched.engines.multi import MultiMachineEngine
from dynisched.engines.naive import NaiveEngine
from dynisched.engines.sqrt import SqrtEngine
from dynisched.engines.two import TwoMachineEngine

ENGINES: dict[str, type[EngineBase]] = {
    engine.name: engine
    for engine in (
        NaiveEngine,
        SqrtEngine,
        CubeRootEngine,
        TwoMachineEngine,
        MultiMachineEngine,
        DeleteOnlyEngine,
        InsertOnlyEngine,
    )
}


class EngineMachineMismatch(ValueError):
    """The engine cannot run with the requested number of machines."""


def engine_names() -> list[str]:
    return list(ENGINES)


def machine_range(name: str) -> str:
    engine = ENGINES[name]
    if engine.max_machines is None:
        return f">= {engine.min_machines}"
    if engine.max_machines == engine.min_machines:
        return str(engine.min_machines)
    return f"{engine.min_machines}..{engine.max_machines}"


def create_engine(
    name: str,
    machines: int = 1,
    *,
    debug_assert: bool = False,
    eager_tables: bool = True,
    weighted: bool = False,
) -> EngineBase:
    """Create an engine.

    Args:
        name: One of ``engine_names()``.
        machines: Machine count.
        debug_assert: Shadow every query with the brute-force oracle.
        eager_tables: Fill compressible tables on every part rebuild (multi only).
        weighted: Answer with maximum weight instead of size (naive only).

    Returns:
        A fresh engine.

    Raises:
        ValueError: Unknown engine name, or ``weighted`` for an engine other than naive.
        EngineMachineMismatch: ``machines`` is outside the engine's range.
        UnsupportedMachineCount: More machines than the multi-machine tables support.
    """
    engine = ENGINES.get(name)
    if engine is None:
        raise ValueError(f"Unknown engine '{name}'. Use one of: {', '.join(ENGINES)}")
    if weighted and engine is not NaiveEngine:
        raise ValueError(f"engine '{name}' does not support weighted scheduling")
    too_many = engine.max_machines is not None and machines > engine.max_machines
    if machines < engine.min_machines or (too_many and engine is not MultiMachineEngine):
        raise EngineMachineMismatch(
            f"engine '{name}' runs on {machine_range(name)} machines, not {machines}"
        )
    if engine is NaiveEngine:
        return NaiveEngine(machines, debug_assert=debug_assert, weighted=weighted)
    if engine is MultiMachineEngine:
        return MultiMachineEngine(machines, debug_assert=debug_assert, eager_tables=eager_tables)
    return engine(machines, debug_assert=debug_assert)
