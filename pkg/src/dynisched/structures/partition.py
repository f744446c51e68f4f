"""Separators, epochs and part split/merge shared by the part-based engines.

An epoch starts with ``N`` live intervals whose keys are cut into runs of
``ceil(N**alpha)``. Parts then split above ``ceil(2 * N**alpha)`` members
and adjacent parts merge when both drop below ``ceil(N**alpha / 2)``. Once the
live count leaves ``[N/2, 2N]`` the epoch ends and everything is re-chunked.
"""

import logging
import math
from bisect import bisect_right
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

from dynisched.models.intervals import NEG_INF, POS_INF, Endpoint

logger = logging.getLogger(__name__)


class KeyMode(StrEnum):
    """Which endpoint decides an interval's part."""

    BY_START = "by-start"
    BY_END = "by-end"


@dataclass(frozen=True, slots=True)
class Split:
    part: int


@dataclass(frozen=True, slots=True)
class Merge:
    left: int


@dataclass(frozen=True, slots=True)
class EpochRebuild:
    pass


Signal = Split | Merge | EpochRebuild


def ceil_power(n: int, alpha: Fraction, scale: Fraction = Fraction(1)) -> int:
    """Exact ``ceil(scale * n**alpha)`` for a rational exponent."""
    if n <= 0:
        return 0
    p, q = alpha.numerator, alpha.denominator
    # x >= scale * n**(p/q)  <=>  (x * den)**q >= (num**q) * n**p
    num, den = scale.numerator, scale.denominator
    bound = num**q * n**p

    def enough(x: int) -> bool:
        return x >= 0 and (x * den) ** q >= bound

    x = max(0, math.ceil(float(scale) * n ** float(alpha)))
    while x > 0 and enough(x - 1):
        x -= 1
    while not enough(x):
        x += 1
    return x


@dataclass
class Partition:
    """Separator keys ``x_1 < ... < x_k`` splitting the key line into ``k + 1`` parts.

    Part ``j`` holds keys in ``[x_j, x_{j+1})`` with ``x_0 = -inf`` and
    ``x_{k+1} = +inf``.
    """

    alpha: Fraction
    key_mode: KeyMode
    epoch_n: int
    separators: list[Endpoint] = field(default_factory=list)
    sizes: list[int] = field(default_factory=lambda: [0])
    live: int = 0
    touches: list[int] = field(default_factory=lambda: [0])
    split_spacing: list[tuple[int, int]] = field(default_factory=list)
    epochs: int = 0

    @classmethod
    def new_epoch(
        cls, keys: Sequence[Endpoint], alpha: Fraction, key_mode: KeyMode
    ) -> "Partition":
        """Chunk sorted ``keys`` into runs of ``ceil(N**alpha)``."""
        n = len(keys)
        chunk = max(1, ceil_power(n, alpha))
        separators = list(keys[chunk::chunk])
        sizes = [min(chunk, n - i) for i in range(0, max(n, 1), chunk)]
        logger.debug("New %s epoch: %d keys, %d parts of <= %d", key_mode, n, len(sizes), chunk)
        return cls(
            alpha=alpha,
            key_mode=key_mode,
            epoch_n=n,
            separators=separators,
            sizes=sizes,
            live=n,
            touches=[0] * len(sizes),
        )

    @property
    def cap(self) -> int:
        return ceil_power(self.epoch_n, self.alpha, Fraction(2))

    @property
    def low(self) -> int:
        return ceil_power(self.epoch_n, self.alpha, Fraction(1, 2))

    def __len__(self) -> int:
        return len(self.sizes)

    def locate(self, key: Endpoint) -> int:
        return bisect_right(self.separators, key)

    def part_bounds(self, j: int) -> tuple[Endpoint, Endpoint]:
        lo = self.separators[j - 1] if j > 0 else NEG_INF
        hi = self.separators[j] if j < len(self.separators) else POS_INF
        return lo, hi

    def next_separator(self, j: int) -> Endpoint:
        return self.part_bounds(j)[1]

    def note_mutation(self, j: int, delta: int) -> Signal | None:
        """Record one insert (+1) or delete (-1) in part ``j``.

        Returns at most one signal; an epoch rebuild beats a split, which beats a merge.
        """
        self.sizes[j] += delta
        self.touches[j] += 1
        self.live += delta
        if 2 * self.live < self.epoch_n or self.live > 2 * self.epoch_n:
            return EpochRebuild()
        if self.sizes[j] > self.cap:
            return Split(j)
        return self._merge_near(j)

    def _merge_near(self, j: int) -> Merge | None:
        low = self.low
        for left in (j - 1, j):
            if 0 <= left and left + 1 < len(self.sizes):
                if self.sizes[left] < low and self.sizes[left + 1] < low:
                    return Merge(left)
        return None

    def recheck(self) -> Signal | None:
        """Any split or merge still owed after a structural change."""
        for j, size in enumerate(self.sizes):
            if size > self.cap:
                return Split(j)
        for j in range(len(self.sizes) - 1):
            signal = self._merge_near(j)
            if signal is not None:
                return signal
        return None

    def split(self, j: int, separator: Endpoint, left_size: int) -> None:
        """Cut part ``j`` at ``separator``; ``left_size`` members stay left."""
        self.split_spacing.append((self.touches[j], self.low))
        right_size = self.sizes[j] - left_size
        self.separators.insert(j, separator)
        self.sizes[j : j + 1] = [left_size, right_size]
        self.touches[j : j + 1] = [0, 0]

    def merge(self, left: int) -> None:
        """Join parts ``left`` and ``left + 1``."""
        del self.separators[left]
        self.sizes[left : left + 2] = [self.sizes[left] + self.sizes[left + 1]]
        self.touches[left : left + 2] = [0]

    def check_invariants(self) -> None:
        """Assert the size rules (test support)."""
        assert sum(self.sizes) == self.live, "part sizes out of sync with live count"
        assert len(self.separators) + 1 == len(self.sizes)
        assert all(a < b for a, b in zip(self.separators, self.separators[1:], strict=False))
        cap, low = self.cap, self.low
        assert all(size <= cap for size in self.sizes), f"part above cap {cap}: {self.sizes}"
        for a, b in zip(self.sizes, self.sizes[1:], strict=False):
            assert a >= low or b >= low, f"adjacent parts below {low}: {self.sizes}"
        if low > 0:
            assert len(self.sizes) <= 2 * math.ceil(self.live / low) + 1, "too many parts"
