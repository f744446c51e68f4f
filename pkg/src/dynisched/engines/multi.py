"""Engine for 3 to 6 machines: end-keyed parts with compressible-state tables.

A state is compressible when one of its components is implied by the
others: (a) the latest component is an inactive interval and the latest
active interval nested in it is also a component; (b) the latest component
is active and is the tree parent of another component; (c) the latest
component is the first-machine replacement of the earliest and the
second-latest components. Compressed keys drop the implied component.
"""

import logging
from collections.abc import Hashable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from dynisched.core.errors import OracleMismatch
from dynisched.engines.partitioned import EndKeyedEngine, EndPart
from dynisched.engines.universe import PartUniverse, run_part_query
from dynisched.models.intervals import Interval
from dynisched.models.state import Component, GreedyState, Real, rank_key

logger = logging.getLogger(__name__)


class FmrTable:
    """First-machine replacement over pairs of part members.

    For a pair ``(a, b)`` with ``a`` ranked no higher than ``b``, the two-machine
    greedy resumed from ``{a, b}`` eventually accepts an interval onto
    ``a``'s machine; that interval and the number of intervals accepted up to
    and including it are stored. Results are memoised along each simulated
    path.
    """

    def __init__(self, universe: PartUniverse) -> None:
        self.universe = universe
        self._memo: dict[tuple[Component, Component], tuple[Interval | None, int]] = {}

    def __len__(self) -> int:
        return len(self._memo)

    def lookup(self, first: Component, second: Component) -> tuple[Interval | None, int]:
        if rank_key(second) < rank_key(first):
            first, second = second, first
        universe = self.universe
        path: list[tuple[tuple[Component, Component], int]] = []
        pair = (first, second)
        hops = 0
        while True:
            known = self._memo.get(pair)
            if known is not None:
                replacement, total = known[0], hops + known[1]
                break
            path.append((pair, hops))
            a, b = pair
            accepted = universe.lc_after(min(a.busy, b.busy), GreedyState.of(pair).horizon)
            if accepted is None:
                replacement, total = None, hops
                break
            if accepted.start < b.busy:
                replacement, total = accepted, hops + 1
                break
            hops += 1
            pair = (a, Real(accepted))
        for visited, before in path:
            self._memo[visited] = (replacement, total - before)
        return replacement, total

    def fmr(self, first: Component, second: Component) -> Interval | None:
        return self.lookup(first, second)[0]

    def build(self) -> None:
        """Fill all member pairs, latest pairs first."""
        members = self.universe.members
        for total in range(2 * len(members) - 3, -1, -1):
            for i in range(max(0, total - len(members) + 1), (total + 1) // 2):
                self.lookup(members[i], members[total - i])


@dataclass(frozen=True, slots=True)
class TypeA:
    """Latest component inactive; the latest active interval inside it is implied."""

    rest: tuple[Component, ...]


@dataclass(frozen=True, slots=True)
class TypeB:
    """Latest component active; it is implied as the tree parent of ``edge``."""

    rest: tuple[Component, ...]
    edge: Component


@dataclass(frozen=True, slots=True)
class TypeC:
    """Latest component implied as the replacement of the first and last of ``rest``."""

    rest: tuple[Component, ...]


CompressedKey = TypeA | TypeB | TypeC


def _without(components: tuple[Component, ...], drop: Component) -> tuple[Component, ...]:
    k = components.index(drop)
    return components[:k] + components[k + 1 :]


def classify_compressible(
    state: GreedyState, universe: PartUniverse, fmr: FmrTable
) -> CompressedKey | None:
    """Compressed key of ``state``, trying the clauses in order a, b, c."""
    comps = state.components
    top = comps[-1]
    if isinstance(top, Real) and not universe.is_active(top.interval):
        inside = universe.latest_active_inside(top.interval)
        if inside is not None and Real(inside) in comps:
            return TypeA(_without(comps, Real(inside)))
    elif isinstance(top, Real):
        for component in comps[:-1]:
            parent = universe.parent(component)
            if parent is not None and parent.id == top.interval.id:
                return TypeB(_without(comps[:-1], component), component)
    if len(comps) >= 3 and isinstance(top, Real):
        replacement = fmr.fmr(comps[0], comps[-2])
        if replacement is not None and replacement.id == top.interval.id:
            return TypeC(comps[:-1])
    return None


def decompress(key: CompressedKey, universe: PartUniverse, fmr: FmrTable) -> GreedyState | None:
    """The state a key stands for; None when the implied component does not exist."""
    match key:
        case TypeA(rest=rest):
            top = rest[-1]
            inside = universe.latest_active_inside(top.interval) if isinstance(top, Real) else None
            return GreedyState.of((*rest, Real(inside))) if inside is not None else None
        case TypeB(rest=rest, edge=edge):
            parent = universe.parent(edge)
            return GreedyState.of((*rest, edge, Real(parent))) if parent is not None else None
        case TypeC(rest=rest):
            replacement = fmr.fmr(rest[0], rest[-1])
            return GreedyState.of((*rest, Real(replacement))) if replacement is not None else None
    return None


@dataclass
class CompressibleTables:
    """Part-query results keyed by compressed state."""

    universe: PartUniverse
    fmr: FmrTable
    machines: int
    entries: dict[Hashable, tuple[int, GreedyState]] = field(default_factory=dict)

    def key(self, state: GreedyState) -> Hashable | None:
        return classify_compressible(state, self.universe, self.fmr)

    def candidate_states(self) -> list[GreedyState]:
        """Compressible states built from every choice of ``m - 1`` members."""
        universe = self.universe
        members = universe.members
        found: set[GreedyState] = set()
        for picks in combinations_with_replacement(range(len(members)), self.machines - 1):
            rest = [members[k] for k in picks]
            reals = [c for c in rest if isinstance(c, Real)]
            if len(set(reals)) < len(reals):
                continue
            base = GreedyState.of(rest)
            extras: list[Component] = []
            replacement = self.fmr.fmr(base.components[0], base.components[-1])
            if replacement is not None:
                extras.append(Real(replacement))
            top = base.components[-1]
            if isinstance(top, Real) and not universe.is_active(top.interval):
                inside = universe.latest_active_inside(top.interval)
                if inside is not None:
                    extras.append(Real(inside))
            for component in base.components:
                parent = universe.parent(component)
                if parent is not None:
                    extras.append(Real(parent))
            for extra in extras:
                if extra not in rest:
                    found.add(GreedyState.of((*rest, extra)))
        return sorted(found, key=universe.index_sum, reverse=True)

    def fill(self) -> None:
        """Fill every compressible state, larger index sums first."""
        for state in self.candidate_states():
            if self.key(state) is not None:
                run_part_query(self.universe, state, self)


class MultiMachineEngine(EndKeyedEngine):
    """Engine for ``3 <= m <= 6``; parts hold about ``N**(1/m)`` intervals.

    Besides the answer, every single greedy step taken inside a part is
    classified for the step counters: states whose latest component is
    inactive, states whose latest components are active but not all of
    them, and all-active states, with the middle group split further by
    what the accepted interval does.
    """

    name = "multi"
    min_machines = 3
    max_machines = 6

    def __init__(self, machines: int = 3, *, debug_assert: bool = False, eager_tables: bool = True) -> None:
        self.alpha = Fraction(1, max(machines, 1))
        self.eager_tables = eager_tables
        self.subcases = {1: 0, 2: 0, 3: 0, 4: 0}
        self.step_forms = {"inactive-top": 0, "mixed": 0, "all-active": 0}
        self.replace_run = 0
        self.max_replace_run = 0
        super().__init__(machines, debug_assert=debug_assert)

    def _build_tables(self, universe: PartUniverse) -> CompressibleTables:
        fmr = FmrTable(universe)
        fmr.build()
        tables = CompressibleTables(universe, fmr, self.machines)
        if self.eager_tables:
            tables.fill()
            logger.debug("Filled %d compressible entries over %d intervals", len(tables.entries), len(universe))
        return tables

    def fmr_build(self, j: int) -> FmrTable:
        return self.payloads[j].tables.fmr

    def part_tables(self, j: int) -> CompressibleTables:
        return self.payloads[j].tables

    def part_query(self, part: EndPart, state: GreedyState) -> tuple[int, GreedyState]:
        universe = part.universe

        def observe(before: GreedyState, after: GreedyState, accepted: Interval) -> None:
            self._observe(universe, before, after, accepted)

        self.replace_run = 0
        return run_part_query(universe, state, part.tables, observe)

    def _observe(
        self, universe: PartUniverse, before: GreedyState, after: GreedyState, accepted: Interval
    ) -> None:
        comps = before.components
        if not universe.component_active(comps[-1]):
            self.step_forms["inactive-top"] += 1
            self.replace_run = 0
            return
        if all(universe.component_active(c) for c in comps):
            self.step_forms["all-active"] += 1
            self.replace_run = 0
            return
        self.step_forms["mixed"] += 1
        if not universe.is_active(accepted):
            subcase = 1
        elif accepted.start < comps[-1].busy:
            subcase = 2 if comps[0] in after.components else 3
        else:
            subcase = 4
        self.subcases[subcase] += 1
        self.replace_run = self.replace_run + 1 if subcase == 3 else 0
        self.max_replace_run = max(self.max_replace_run, self.replace_run)
        if self.debug_assert and self.replace_run > self.machines:
            raise OracleMismatch(f"{self.replace_run} consecutive earliest-machine replacements")

    def stats(self) -> dict[str, int]:
        stats = super().stats()
        stats["fmr_pairs"] = sum(len(part.tables.fmr) for part in self.payloads)
        stats["table_entries"] = sum(len(part.tables.entries) for part in self.payloads)
        for subcase, n in self.subcases.items():
            stats[f"subcase_{subcase}"] = n
        for form, n in self.step_forms.items():
            stats[f"steps_{form}"] = n
        stats["max_replace_run"] = self.max_replace_run
        return stats
