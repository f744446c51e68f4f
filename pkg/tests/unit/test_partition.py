"""Tests for separators, epochs and part size signals."""

from fractions import Fraction

import pytest

from dynisched.models.intervals import Endpoint, start_point
from dynisched.structures import EpochRebuild, KeyMode, Merge, Partition, Split, ceil_power

HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)


def _keys(n: int) -> list[Endpoint]:
    return [start_point(k, k + 1) for k in range(n)]


class TestCeilPower:
    """Tests for exact rational powers."""

    @pytest.mark.parametrize(
        ("n", "alpha", "scale", "expected"),
        [
            (8, TWO_THIRDS, Fraction(1), 4),
            (27, Fraction(1, 3), Fraction(1), 3),
            (28, Fraction(1, 3), Fraction(1), 4),
            (9, HALF, Fraction(1), 3),
            (10, HALF, Fraction(1), 4),
            (9, HALF, Fraction(2), 6),
            (9, HALF, Fraction(1, 2), 2),
            (0, HALF, Fraction(1), 0),
        ],
    )
    def test_values(self, n: int, alpha: Fraction, scale: Fraction, expected: int) -> None:
        assert ceil_power(n, alpha, scale) == expected


class TestNewEpoch:
    """Tests for chunking an epoch."""

    def test_nine_keys_square_root(self) -> None:
        partition = Partition.new_epoch(_keys(9), HALF, KeyMode.BY_START)
        assert partition.sizes == [3, 3, 3]
        assert partition.separators == [_keys(9)[3], _keys(9)[6]]
        partition.check_invariants()

    def test_eight_keys_two_thirds(self) -> None:
        assert Partition.new_epoch(_keys(8), TWO_THIRDS, KeyMode.BY_START).sizes == [4, 4]

    def test_single_key(self) -> None:
        assert Partition.new_epoch(_keys(1), HALF, KeyMode.BY_END).sizes == [1]

    def test_empty(self) -> None:
        partition = Partition.new_epoch([], HALF, KeyMode.BY_START)
        assert len(partition) == 1
        assert partition.sizes == [0]

    def test_locate(self) -> None:
        keys = _keys(9)
        partition = Partition.new_epoch(keys, HALF, KeyMode.BY_START)
        assert partition.locate(keys[0]) == 0
        assert partition.locate(keys[2]) == 0
        assert partition.locate(keys[3]) == 1
        assert partition.locate(keys[8]) == 2
        assert partition.part_bounds(1) == (keys[3], keys[6])
        assert partition.next_separator(1) == keys[6]


class TestSignals:
    """Tests for split, merge and epoch signals."""

    def test_split_above_cap(self) -> None:
        partition = Partition.new_epoch(_keys(9), HALF, KeyMode.BY_START)
        assert partition.cap == 6
        for _ in range(3):
            assert partition.note_mutation(0, +1) is None
        assert partition.note_mutation(0, +1) == Split(0)

    def test_merge_then_epoch(self) -> None:
        partition = Partition.new_epoch(_keys(9), HALF, KeyMode.BY_START)
        assert partition.low == 2
        assert partition.note_mutation(0, -1) is None
        assert partition.note_mutation(0, -1) is None
        assert partition.note_mutation(1, -1) is None
        assert partition.note_mutation(1, -1) == Merge(0)
        partition.merge(0)
        assert partition.sizes == [2, 3]
        assert partition.note_mutation(1, -1) == EpochRebuild()

    def test_epoch_when_live_doubles(self) -> None:
        partition = Partition.new_epoch(_keys(2), HALF, KeyMode.BY_START)
        signals = [partition.note_mutation(0, +1) for _ in range(3)]
        assert signals[-1] == EpochRebuild()

    def test_split_records_spacing(self) -> None:
        keys = _keys(9)
        partition = Partition.new_epoch(keys, HALF, KeyMode.BY_START)
        for _ in range(4):
            partition.note_mutation(0, +1)
        partition.split(0, start_point(1, 100), 3)
        assert partition.sizes == [3, 4, 3, 3]
        assert partition.split_spacing == [(4, 2)]
        assert partition.recheck() is None
