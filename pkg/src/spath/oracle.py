"""Brute-force ground truth by enumerating every simple path.

With strictly positive weights a walk that repeats a vertex contains a
cycle of positive weight; cutting the cycle out gives a cheaper walk
between the same endpoints.  So some minimal-cost path is always simple,
and the minimum over simple paths is the exact answer.  Enumeration is
exponential and only meant for desk-sized graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graph import (
    DIRECTED,
    MODES,
    UNDIRECTED,
    GraphError,
    Path,
    VertexId,
    VertexRef,
    WeightedDigraph,
    build_graph,
)

DEFAULT_BOUND = 12


class GraphTooLarge(GraphError):
    def __init__(self, n: int, bound: int):
        super().__init__(f"oracle refuses graphs with {n} > {bound} vertices")
        self.n, self.bound = n, bound


class BadWeightRange(GraphError):
    pass


@dataclass(frozen=True)
class OracleAnswer:
    min_weight: Optional[float]
    witness: Optional[Path]
    path_count: int

    @property
    def reachable(self) -> bool:
        return self.min_weight is not None


def _check_size(g: WeightedDigraph, bound: int) -> None:
    if g.n > bound:
        raise GraphTooLarge(g.n, bound)


def enumerate_from(g: WeightedDigraph, source: VertexRef, bound: int = DEFAULT_BOUND) -> list[OracleAnswer]:
    """Oracle answers from ``source`` to every vertex, indexed by ordinal.

    A single depth-first walk over all simple paths starting at ``source``.
    The entry for ``source`` itself counts no paths (a path has >= 1 edge).
    Among equally cheap paths the first one found is kept as the witness.
    """
    _check_size(g, bound)
    s = g.vertex(source).index
    n = g.n
    adjacency = g.adjacency
    best: list[Optional[float]] = [None] * n
    best_path: list[Optional[tuple[int, ...]]] = [None] * n
    count = [0] * n
    on_path = [False] * n
    on_path[s] = True
    stack = [s]

    def extend(u: int, weight: float) -> None:
        for v, w in adjacency[u]:
            if on_path[v]:
                continue
            total = weight + w
            stack.append(v)
            count[v] += 1
            if best[v] is None or total < best[v]:
                best[v] = total
                best_path[v] = tuple(stack)
            on_path[v] = True
            extend(v, total)
            on_path[v] = False
            stack.pop()

    extend(s, 0.0)
    names = g.names
    return [
        OracleAnswer(
            min_weight=best[v],
            witness=None if best_path[v] is None else Path(tuple(VertexId(i, names[i]) for i in best_path[v])),
            path_count=count[v],
        )
        for v in range(n)
    ]


def enumerate_min(
    g: WeightedDigraph, source: VertexRef, target: VertexRef, bound: int = DEFAULT_BOUND
) -> OracleAnswer:
    """Exact minimum weight over all simple ``source``-``target`` paths."""
    _check_size(g, bound)
    s, t = g.vertex(source), g.vertex(target)
    if s == t:
        raise ValueError("source and target must differ")
    return enumerate_from(g, s, bound)[t.index]


def all_simple_paths(g: WeightedDigraph, source: VertexRef, target: VertexRef, bound: int = DEFAULT_BOUND):
    """Yield every simple path from ``source`` to ``target`` as a Path."""
    _check_size(g, bound)
    s, t = g.vertex(source).index, g.vertex(target).index
    names = g.names
    stack = [s]

    def walk(u):
        for v, _ in g.adjacency[u]:
            if v in stack:
                continue
            stack.append(v)
            if v == t:
                yield Path(tuple(VertexId(i, names[i]) for i in stack))
            else:
                yield from walk(v)
            stack.pop()

    if s != t:
        yield from walk(s)


def random_graph(
    n: int,
    edge_probability: float,
    weight_range: tuple[float, float] = (0.25, 10.0),
    mode: str = DIRECTED,
    seed: Optional[int] = None,
    grid: Optional[float] = 0.25,
) -> WeightedDigraph:
    """Seeded Erdos-Renyi style graph on vertices ``v0 .. v{n-1}``.

    Each ordered pair (unordered in undirected mode) gets an edge with
    probability ``edge_probability``.  Weights are uniform over the multiples
    of ``grid`` inside ``weight_range``, or uniform over the real interval
    when ``grid`` is None.  Grid weights keep sums exact in binary floating
    point, so oracle and engine results compare with ``==``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge_probability must lie in [0, 1]")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    low, high = weight_range
    if not (0 < low <= high < float("inf")):
        raise BadWeightRange(f"need 0 < low <= high < inf, got {weight_range!r}")
    if grid is not None:
        k_lo, k_hi = -int(-low // grid), int(high // grid)
        if k_lo > k_hi:
            raise BadWeightRange(f"no multiple of {grid} inside {weight_range!r}")

    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    triples = []
    for i in range(n):
        for j in range(i + 1 if mode == UNDIRECTED else 0, n):
            if i == j or rng.random() >= edge_probability:
                continue
            w = rng.randint(k_lo, k_hi) * grid if grid is not None else rng.uniform(low, high)
            triples.append((names[i], names[j], w))
    return build_graph(triples, mode=mode, vertices=names)
