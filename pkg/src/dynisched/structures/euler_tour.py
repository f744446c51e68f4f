"""Implicit treap over Euler-tour tokens.

A rooted forest is stored as the bracket sequence of its depth-first tour:
every node contributes an opening and a closing token. Each token carries a
depth delta (+1 / -1 for real nodes, 0 for the artificial root) and a mark
delta, and every treap node caches subtree size, sums, minimum prefix sums
and the number of real opening tokens. Prefix sums over the tour then give
depths, preorder numbers and subtree windows in ``O(log n)`` expected time.
"""

import random
from collections.abc import Iterable, Iterator

from dynisched.core.counter import OpCounter
from dynisched.models.intervals import Interval

_INF = 1 << 62


class Token:
    """One bracket of the tour; doubles as a treap node."""

    __slots__ = (
        "owner",
        "opening",
        "val",
        "mval",
        "prio",
        "left",
        "right",
        "parent",
        "size",
        "sum",
        "minpref",
        "opens",
        "msum",
        "mminpref",
    )

    def __init__(self, owner: Interval | None, opening: bool, prio: float) -> None:
        self.owner = owner
        self.opening = opening
        self.val = 0 if owner is None else (1 if opening else -1)
        self.mval = 0
        self.prio = prio
        self.left: Token | None = None
        self.right: Token | None = None
        self.parent: Token | None = None
        self.size = 1
        self.sum = self.val
        self.minpref = self.val
        self.opens = 1 if owner is not None and opening else 0
        self.msum = 0
        self.mminpref = 0

    def __repr__(self) -> str:
        bracket = "(" if self.opening else ")"
        return f"{bracket}{self.owner.id if self.owner else 'root'}"


def pull(t: Token) -> None:
    left, right = t.left, t.right
    lsum = left.sum if left else 0
    lmsum = left.msum if left else 0
    t.size = 1 + (left.size if left else 0) + (right.size if right else 0)
    t.opens = (1 if t.owner is not None and t.opening else 0) + (left.opens if left else 0) + (
        right.opens if right else 0
    )
    mid = lsum + t.val
    t.sum = mid + (right.sum if right else 0)
    t.minpref = min(left.minpref if left else _INF, mid, mid + right.minpref if right else _INF)
    mmid = lmsum + t.mval
    t.msum = mmid + (right.msum if right else 0)
    t.mminpref = min(
        left.mminpref if left else _INF, mmid, mmid + right.mminpref if right else _INF
    )


def size(t: Token | None) -> int:
    return t.size if t else 0


def merge(a: Token | None, b: Token | None, counter: OpCounter) -> Token | None:
    """Concatenate two sequences."""
    if a is None:
        return b
    if b is None:
        return a
    counter.tick()
    if a.prio > b.prio:
        a.right = merge(a.right, b, counter)
        if a.right is not None:
            a.right.parent = a
        pull(a)
        a.parent = None
        return a
    b.left = merge(a, b.left, counter)
    if b.left is not None:
        b.left.parent = b
    pull(b)
    b.parent = None
    return b


def split(t: Token | None, k: int, counter: OpCounter) -> tuple[Token | None, Token | None]:
    """Split off the first ``k`` tokens."""
    if t is None:
        return None, None
    counter.tick()
    if k <= size(t.left):
        left, t.left = split(t.left, k, counter)
        if t.left is not None:
            t.left.parent = t
        pull(t)
        t.parent = None
        if left is not None:
            left.parent = None
        return left, t
    t.right, right = split(t.right, k - size(t.left) - 1, counter)
    if t.right is not None:
        t.right.parent = t
    pull(t)
    t.parent = None
    if right is not None:
        right.parent = None
    return t, right


def concat(parts: Iterable[Token | None], counter: OpCounter) -> Token | None:
    root: Token | None = None
    for part in parts:
        root = merge(root, part, counter)
    return root


def rank(t: Token, counter: OpCounter) -> int:
    """Zero-based position of ``t`` in its sequence."""
    r = size(t.left)
    cur = t
    while cur.parent is not None:
        counter.tick()
        parent = cur.parent
        if cur is parent.right:
            r += size(parent.left) + 1
        cur = parent
    return r


def prefix_totals(t: Token, counter: OpCounter) -> tuple[int, int, int]:
    """``(depth sum, real opens, mark sum)`` over positions up to and including ``t``."""
    left = t.left
    total = (left.sum if left else 0) + t.val
    opens = (left.opens if left else 0) + (1 if t.owner is not None and t.opening else 0)
    marks = (left.msum if left else 0) + t.mval
    cur = t
    while cur.parent is not None:
        counter.tick()
        parent = cur.parent
        if cur is parent.right:
            pl = parent.left
            total += (pl.sum if pl else 0) + parent.val
            opens += (pl.opens if pl else 0) + (
                1 if parent.owner is not None and parent.opening else 0
            )
            marks += (pl.msum if pl else 0) + parent.mval
        cur = parent
    return total, opens, marks


def kth(t: Token | None, k: int, counter: OpCounter) -> Token:
    """Token at zero-based position ``k``."""
    while t is not None:
        counter.tick()
        lsize = size(t.left)
        if k < lsize:
            t = t.left
        elif k == lsize:
            return t
        else:
            k -= lsize + 1
            t = t.right
    raise IndexError("tour position out of range")


def last_prefix_at_most(t: Token | None, limit: int, marks: bool, counter: OpCounter) -> int:
    """Last position ``q`` whose inclusive prefix sum is ``<= limit``, or -1.

    ``marks`` selects the mark channel instead of the depth channel.
    """

    def go(node: Token | None, before: int, offset: int) -> int:
        if node is None:
            return -1
        counter.tick()
        minpref = node.mminpref if marks else node.minpref
        if before + minpref > limit:
            return -1
        left = node.left
        if marks:
            here = before + (left.msum if left else 0) + node.mval
        else:
            here = before + (left.sum if left else 0) + node.val
        pos = offset + size(left)
        found = go(node.right, here, pos + 1)
        if found >= 0:
            return found
        if here <= limit:
            return pos
        return go(left, before, offset)

    return go(t, 0, 0)


def refresh_path(t: Token, counter: OpCounter) -> None:
    """Recompute aggregates from ``t`` up to its root after a value change."""
    cur: Token | None = t
    while cur is not None:
        counter.tick()
        pull(cur)
        cur = cur.parent


def iter_tokens(t: Token | None) -> Iterator[Token]:
    stack: list[Token] = []
    node = t
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        yield node
        node = node.right


class TokenFactory:
    """Creates tokens with reproducible treap priorities."""

    def __init__(self, seed: int) -> None:
        self._rng = random.Random(seed)

    def make(self, owner: Interval | None, opening: bool) -> Token:
        return Token(owner, opening, self._rng.random())
