"""Seeded random-graph corpus used by the acceptance suite and scripts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .graph import DIRECTED, UNDIRECTED, WeightedDigraph
from .oracle import random_graph

SIZES = tuple(range(2, 11))
PROBABILITIES = (0.2, 0.5, 0.9)
MODES = (DIRECTED, UNDIRECTED)


@dataclass(frozen=True)
class CorpusConfig:
    seeds_per_cell: int = 10
    weight_range: tuple[float, float] = (0.25, 10.0)
    grid: float = 0.25
    base_seed: int = 20240601
    # (n, p) cells whose simple-path count makes enumeration dominate the budget
    capped_cells: tuple[tuple[int, float, int], ...] = ((10, 0.9, 4),)

    def seeds_for(self, n: int, p: float) -> int:
        for cn, cp, seeds in self.capped_cells:
            if (cn, cp) == (n, p):
                return min(seeds, self.seeds_per_cell)
        return self.seeds_per_cell


@dataclass(frozen=True)
class CorpusItem:
    n: int
    edge_probability: float
    mode: str
    seed: int
    graph: WeightedDigraph


def corpus(config: CorpusConfig = CorpusConfig()) -> Iterator[CorpusItem]:
    """Every (n, p, mode) cell of the grid, ``seeds_per_cell`` graphs each (fewer in capped cells)."""
    cells = itertools.product(SIZES, PROBABILITIES, MODES)
    for k, (n, p, mode) in enumerate(cells):
        for r in range(config.seeds_for(n, p)):
            seed = config.base_seed + 1000 * k + r
            g = random_graph(n, p, config.weight_range, mode, seed, config.grid)
            yield CorpusItem(n, p, mode, seed, g)
