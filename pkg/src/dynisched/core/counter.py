"""Elementary-operation accounting shared by every structure of an engine."""


class OpCounter:
    """Counts comparisons and tree-node visits.

    One instance is threaded through all structures owned by an engine so the
    engine can report a single machine-independent cost figure.
    """

    __slots__ = ("ticks",)

    def __init__(self) -> None:
        self.ticks = 0

    def tick(self, n: int = 1) -> None:
        self.ticks += n

    def __repr__(self) -> str:
        return f"OpCounter(ticks={self.ticks})"
