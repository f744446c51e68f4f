"""Tests for the brute-force greedy and weighted references."""

import pytest

from dynisched.core.errors import UnknownId
from dynisched.models.intervals import Interval, IntervalStamper
from dynisched.models.state import Barred, GreedyState, Real
from dynisched.oracle import (
    active_subset,
    greedy_chain,
    is_active,
    latest_inside,
    part_sim,
    state_trace,
    static_is,
    static_multi,
    static_wis,
)


class TestStaticIs:
    """Tests for the single-machine greedy."""

    def test_examples(self, fix1: dict[str, Interval], fix2: dict[str, Interval]) -> None:
        assert static_is(fix1.values()) == 3
        assert static_is(fix2.values()) == 2
        assert static_is([]) == 0

    def test_touching_chain(self) -> None:
        stamper = IntervalStamper()
        assert static_is([stamper.stamp(k, k, k + 1) for k in range(5)]) == 5

    def test_greedy_chain(self, fix1: dict[str, Interval]) -> None:
        intervals = list(fix1.values())
        chain = greedy_chain(intervals, fix1["A"])
        assert chain == [fix1["A"], fix1["B"], fix1["D"]]
        assert greedy_chain(intervals, fix1["C"]) == [fix1["C"], fix1["D"]]

    def test_greedy_chain_unknown_start(self, fix1: dict[str, Interval]) -> None:
        stray = IntervalStamper().stamp(99, 0, 1)
        with pytest.raises(UnknownId):
            greedy_chain(list(fix1.values()), stray)


class TestStaticMulti:
    """Tests for the multi-machine greedy."""

    def test_examples(self, fix1: dict[str, Interval], fix3: dict[str, Interval]) -> None:
        assert static_multi(fix3.values(), 2).count == 4
        assert static_multi(fix1.values(), 2).count == 4
        assert static_multi(fix1.values(), 1).count == 3

    def test_assignment_lists(self, fix1: dict[str, Interval]) -> None:
        result = static_multi(fix1.values(), 2)
        assert sorted(sorted(ids) for ids in result.machines) == [
            sorted([fix1["A"].id, fix1["B"].id, fix1["D"].id]),
            [fix1["C"].id],
        ]

    def test_rejects_zero_machines(self) -> None:
        with pytest.raises(ValueError):
            static_multi([], 0)

    def test_state_trace_length(self, fix1: dict[str, Interval]) -> None:
        states = state_trace(fix1.values(), 2)
        assert len(states) == 5
        assert states[0] == GreedyState.initial(2)
        assert set(states[-1].reals) == {fix1["C"], fix1["D"]}


class TestActivity:
    """Tests for the brute-force containment scan."""

    def test_active_subset(self, fix2: dict[str, Interval]) -> None:
        intervals = list(fix2.values())
        assert active_subset(intervals) == [fix2["Q"], fix2["R"]]
        assert not is_active(fix2["P"], intervals)
        assert latest_inside(fix2["P"], intervals) == fix2["R"]
        assert latest_inside(fix2["Q"], intervals) is None


class TestPartSim:
    """Tests for resuming the greedy over one part."""

    def test_continue_from_two_reals(self, fix1: dict[str, Interval]) -> None:
        state = GreedyState.of([Real(fix1["A"]), Real(fix1["B"])])
        count, exit_state = part_sim(fix1.values(), state)
        assert count == 1
        assert exit_state == GreedyState.of([Real(fix1["A"]), Real(fix1["D"])])

    def test_barred_component_takes_interval(self, fix2: dict[str, Interval]) -> None:
        state = GreedyState.of([Barred(fix2["Q"].start), Barred(fix2["R"].start)])
        count, exit_state = part_sim(fix2.values(), state)
        assert count == 2
        assert exit_state == GreedyState.of([Barred(fix2["R"].start), Real(fix2["R"])])

    def test_real_outranks_rounded_entry_point(self, fix2: dict[str, Interval]) -> None:
        # the entry point was rounded past Q's end; R still goes onto Q's machine
        state = GreedyState.of([Real(fix2["Q"]), Barred(fix2["R"].start)])
        count, exit_state = part_sim(fix2.values(), state)
        assert count == 1
        assert exit_state == GreedyState.of([Barred(fix2["R"].start), Real(fix2["R"])])

    def test_initial_state_matches_static(self, fix1: dict[str, Interval]) -> None:
        count, _ = part_sim(fix1.values(), GreedyState.initial(2))
        assert count == static_multi(fix1.values(), 2).count


class TestStaticWis:
    """Tests for weighted interval scheduling."""

    def test_heavy_interval_beats_pair(self) -> None:
        stamper = IntervalStamper()
        intervals = [stamper.stamp(1, 0, 2, 2), stamper.stamp(2, 1, 4, 5), stamper.stamp(3, 3, 5, 2)]
        assert static_wis(intervals) == 5

    def test_pair_beats_heavy_interval(self) -> None:
        stamper = IntervalStamper()
        intervals = [stamper.stamp(1, 0, 2, 3), stamper.stamp(2, 1, 4, 5), stamper.stamp(3, 3, 5, 3)]
        assert static_wis(intervals) == 6

    def test_unit_weights_match_greedy(self, fix1: dict[str, Interval]) -> None:
        assert static_wis(fix1.values()) == static_is(fix1.values())

    def test_touching_weights_add(self) -> None:
        stamper = IntervalStamper()
        intervals = [
            stamper.stamp(0, -1, 0, 24),
            stamper.stamp(1, 0, 1, 24),
            stamper.stamp(2, 1, 2, 27),
            stamper.stamp(3, 2, 3, 28),
        ]
        assert static_wis(intervals) == 103

    def test_empty(self) -> None:
        assert static_wis([]) == 0
