"""Circle-layered digraphs and an exhaustive minimum-weight cycle oracle.

A graph with parameter ``ell`` has ``k = 2 * ell + 1`` layers of ``n`` nodes.
Edges only run from layer ``p`` to layer ``p % k + 1``, so every cycle that
uses each layer once has exactly ``k`` edges.
"""

import logging
import random
from collections.abc import Iterable

import networkx as nx

logger = logging.getLogger(__name__)

# Largest number of candidate cycles brute_cycle will enumerate.
BRUTE_LIMIT = 10**6

Node = tuple[int, int]


class TooLarge(ValueError):
    """The exhaustive cycle search would enumerate too many candidates."""


class CircleLayeredGraph:
    """Layers ``1..k`` of nodes ``0..n-1`` with weighted forward edges.

    Nodes of the underlying ``networkx.DiGraph`` are ``(layer, node)`` pairs
    and every edge carries an integer ``weight``.
    """

    def __init__(self, ell: int, n: int) -> None:
        if ell < 1 or n < 1:
            raise ValueError(f"need ell >= 1 and n >= 1, got ell={ell}, n={n}")
        self.ell = ell
        self.n = n
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from((p, u) for p in range(1, self.k + 1) for u in range(n))

    @property
    def k(self) -> int:
        return 2 * self.ell + 1

    def next_layer(self, p: int) -> int:
        return p % self.k + 1

    def add_edge(self, p: int, u: int, v: int, weight: int) -> None:
        """Add the edge from node ``u`` of layer ``p`` to node ``v`` of the next layer."""
        if not 1 <= p <= self.k or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge {p}:{u}->{v} outside the layers")
        if weight < 1:
            raise ValueError(f"edge weights start at 1, got {weight}")
        self.graph.add_edge((p, u), (self.next_layer(p), v), weight=weight)

    @classmethod
    def from_edges(cls, ell: int, n: int, edges: Iterable[tuple[int, int, int, int]]) -> "CircleLayeredGraph":
        """Build from ``(layer, u, v, weight)`` tuples."""
        g = cls(ell, n)
        for p, u, v, weight in edges:
            g.add_edge(p, u, v, weight)
        return g

    def edges(self) -> list[tuple[int, int, int, int]]:
        """``(layer, u, v, weight)`` for every edge, sorted."""
        return sorted((p, u, v, w) for (p, u), (_, v), w in self.graph.edges(data="weight"))

    def edge_weight(self, p: int, u: int, v: int) -> int | None:
        data = self.graph.get_edge_data((p, u), (self.next_layer(p), v))
        return None if data is None else int(data["weight"])

    @property
    def max_weight(self) -> int:
        """Largest edge weight present, 1 for an edgeless graph."""
        return max((w for *_, w in self.edges()), default=1)

    def __len__(self) -> int:
        return int(self.graph.number_of_edges())


def gen_graph(ell: int, n: int, max_w: int, seed: int, density: float = 1.0) -> CircleLayeredGraph:
    """Random circle-layered graph; each possible edge is kept with probability ``density``."""
    if not 0 < density <= 1:
        raise ValueError(f"density must lie in (0, 1], got {density}")
    if max_w < 1:
        raise ValueError(f"max_w must be at least 1, got {max_w}")
    rng = random.Random(seed)
    g = CircleLayeredGraph(ell, n)
    for p in range(1, g.k + 1):
        for u in range(n):
            for v in range(n):
                keep = rng.random() < density
                weight = rng.randint(1, max_w)
                if keep:
                    g.add_edge(p, u, v, weight)
    logger.debug("Generated circle-layered graph ell=%d n=%d with %d edges", ell, n, len(g))
    return g


def brute_cycle(g: CircleLayeredGraph) -> int | None:
    """Minimum weight of a cycle through all layers, by enumeration.

    Raises:
        TooLarge: ``n ** k`` exceeds ``BRUTE_LIMIT``.
    """
    if g.n**g.k > BRUTE_LIMIT:
        raise TooLarge(f"{g.n}**{g.k} candidate cycles exceed {BRUTE_LIMIT}")
    best: int | None = None
    for s in range(g.n):
        # Depth-first over layers 1..k, closing back to s.
        stack: list[tuple[int, int, int]] = [(1, s, 0)]
        while stack:
            p, u, total = stack.pop()
            if best is not None and total >= best:
                continue
            if p == g.k:
                w = g.edge_weight(p, u, s)
                if w is not None and (best is None or total + w < best):
                    best = total + w
                continue
            for _, (_, v), w in g.graph.out_edges((p, u), data="weight"):
                stack.append((p + 1, v, total + int(w)))
    return best
