"""Finite weighted digraphs with strictly positive edge weights.

Vertices are interned in first-mention order and that ordinal is the
tie-breaking order used by every algorithm in the package.  Undirected
graphs are stored as symmetric digraphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

DIRECTED = "directed"
UNDIRECTED = "undirected"
MODES = (DIRECTED, UNDIRECTED)


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class SelfLoop(GraphError):
    def __init__(self, name: str):
        super().__init__(f"self-loop on vertex {name!r}")
        self.name = name


class DuplicateEdge(GraphError):
    def __init__(self, u: str, v: str):
        super().__init__(f"duplicate edge {u!r} -> {v!r}")
        self.u, self.v = u, v


class BadWeight(GraphError):
    def __init__(self, weight):
        super().__init__(f"edge weight must be finite and > 0, got {weight!r}")
        self.weight = weight


class MissingEdge(GraphError):
    def __init__(self, u: str, v: str):
        super().__init__(f"no edge {u!r} -> {v!r}")
        self.u, self.v = u, v


class UnknownVertex(GraphError, KeyError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex

    __str__ = ValueError.__str__


@dataclass(frozen=True, order=True)
class VertexId:
    index: int
    name: str = field(compare=False)

    def __str__(self) -> str:
        return self.name


VertexRef = Union[VertexId, str, int]


def check_weight(weight) -> float:
    """Return ``weight`` as a float, raising BadWeight unless finite and positive."""
    try:
        value = float(weight)
    except (TypeError, ValueError):
        raise BadWeight(weight) from None
    if isinstance(weight, bool) or not math.isfinite(value) or value <= 0:
        raise BadWeight(weight)
    return value


@dataclass(frozen=True)
class WeightedDigraph:
    """Immutable vertex/edge store.

    ``adjacency[i]`` holds ``(j, weight)`` pairs sorted by neighbor ordinal.
    Build instances with :func:`build_graph` or :class:`GraphBuilder`.
    """

    names: tuple[str, ...]
    adjacency: tuple[tuple[tuple[int, float], ...], ...]
    mode: str = DIRECTED
    _index: Mapping[str, int] = field(default=None, repr=False, compare=False)  # type: ignore[assignment]

    def __post_init__(self):
        if self._index is None:
            object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.names)})

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(VertexId(i, name) for i, name in enumerate(self.names))

    @property
    def edges(self) -> dict[tuple[VertexId, VertexId], float]:
        return {(self.vertex(u), self.vertex(v)): w for u, v, w in self.edge_list()}

    def edge_list(self) -> list[tuple[int, int, float]]:
        """All ordered edges as ``(u, v, w)`` ordinals, sorted by ``(u, v)``."""
        return [(u, v, w) for u, adj in enumerate(self.adjacency) for v, w in adj]

    def __len__(self) -> int:
        return self.n

    def __contains__(self, vertex) -> bool:
        try:
            self.vertex(vertex)
        except UnknownVertex:
            return False
        return True

    def vertex(self, ref: VertexRef) -> VertexId:
        """Resolve a name, ordinal or VertexId belonging to this graph."""
        if isinstance(ref, VertexId):
            if 0 <= ref.index < self.n and self.names[ref.index] == ref.name:
                return ref
        elif isinstance(ref, str):
            if ref in self._index:
                return VertexId(self._index[ref], ref)
        elif isinstance(ref, int) and not isinstance(ref, bool):
            if 0 <= ref < self.n:
                return VertexId(ref, self.names[ref])
        raise UnknownVertex(ref)

    def neighbors(self, u: VertexRef) -> list[tuple[VertexId, float]]:
        i = self.vertex(u).index
        return [(VertexId(j, self.names[j]), w) for j, w in self.adjacency[i]]

    def weight(self, u: VertexRef, v: VertexRef) -> float:
        a, b = self.vertex(u), self.vertex(v)
        for j, w in self.adjacency[a.index]:
            if j == b.index:
                return w
        raise MissingEdge(a.name, b.name)

    def has_edge(self, u: VertexRef, v: VertexRef) -> bool:
        try:
            self.weight(u, v)
        except MissingEdge:
            return False
        return True

    def path(self, *refs: VertexRef) -> "Path":
        """Build a Path from vertex references, checking every hop is an edge."""
        p = Path(tuple(self.vertex(r) for r in refs))
        for u, v in zip(p.vertices, p.vertices[1:]):
            if not self.has_edge(u, v):
                raise MissingEdge(u.name, v.name)
        return p


@dataclass(frozen=True)
class Path:
    vertices: tuple[VertexId, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least one edge")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> VertexId:
        return self.vertices[0]

    @property
    def end(self) -> VertexId:
        return self.vertices[-1]

    @property
    def names(self) -> list[str]:
        return [v.name for v in self.vertices]

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __add__(self, other: "Path") -> "Path":
        if other.start != self.end:
            raise ValueError(f"cannot join path ending at {self.end} to one starting at {other.start}")
        return Path(self.vertices + other.vertices[1:])

    def __str__(self) -> str:
        return " ".join(self.names)


class GraphBuilder:
    """Incremental construction; errors surface at the offending call."""

    def __init__(self, mode: str = DIRECTED):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        self.mode = mode
        self._index: dict[str, int] = {}
        self._edges: dict[tuple[int, int], float] = {}

    def add_vertex(self, name: str) -> int:
        if not isinstance(name, str) or not name:
            raise GraphError(f"vertex name must be a non-empty string, got {name!r}")
        return self._index.setdefault(name, len(self._index))

    def add_edge(self, u: str, v: str, weight) -> None:
        if u == v:
            raise SelfLoop(u)
        w = check_weight(weight)
        pairs = [(u, v), (v, u)] if self.mode == UNDIRECTED else [(u, v)]
        for a, b in pairs:
            if a in self._index and b in self._index and (self._index[a], self._index[b]) in self._edges:
                raise DuplicateEdge(a, b)
        i, j = self.add_vertex(u), self.add_vertex(v)
        self._edges[i, j] = w
        if self.mode == UNDIRECTED:
            self._edges[j, i] = w

    def build(self) -> WeightedDigraph:
        names = tuple(sorted(self._index, key=self._index.__getitem__))
        adjacency: list[list[tuple[int, float]]] = [[] for _ in names]
        for (i, j), w in sorted(self._edges.items()):
            adjacency[i].append((j, w))
        return WeightedDigraph(
            names=names,
            adjacency=tuple(tuple(adj) for adj in adjacency),
            mode=self.mode,
        )


def build_graph(
    edge_triples: Iterable[tuple[str, str, float]],
    mode: str = DIRECTED,
    vertices: Iterable[str] = (),
) -> WeightedDigraph:
    """Build a graph from ``(u, v, weight)`` triples.

    ``vertices`` are interned before any edge endpoint, which is the only
    way to include vertices without edges.  In undirected mode each triple
    installs both directions with the same weight.
    """
    builder = GraphBuilder(mode)
    for name in vertices:
        builder.add_vertex(name)
    for u, v, w in edge_triples:
        builder.add_edge(u, v, w)
    return builder.build()


def path_weight(g: WeightedDigraph, p: Union[Path, Sequence[VertexRef]]) -> float:
    """Sum of edge weights along ``p``, accumulated left to right."""
    verts = p.vertices if isinstance(p, Path) else [g.vertex(r) for r in p]
    if len(verts) < 2:
        raise ValueError("a path needs at least one edge")
    total = 0.0
    for u, v in zip(verts, verts[1:]):
        total += g.weight(u, v)
    return total
