"""Set-based Dijkstra with predecessor labels and execution tracing.

:func:`run` follows the textbook formulation literally: a linear scan over
the unsettled vertices picks the first vertex (smallest ordinal) with the
least label, which then enters the settled set and relaxes its unsettled
out-neighbors.  :func:`run_heap` computes the same thing with a binary heap.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from functools import total_ordering
from typing import Optional

from .graph import GraphError, Path, VertexId, VertexRef, WeightedDigraph


class Mode(enum.Enum):
    TO_TARGET = "to_target"
    EXHAUSTIVE = "exhaustive"
    FULL = "full"


class StopReason(enum.Enum):
    TARGET_SETTLED = "target_settled"
    EXHAUSTED = "exhausted"
    ALL_SETTLED = "all_settled"


class SourceEqualsTarget(GraphError):
    def __init__(self, name: str):
        super().__init__(f"source and target are the same vertex {name!r}")
        self.name = name


@total_ordering
class Label:
    """Tentative cost: a finite number or the unreachable marker.

    Unreachable is a distinct state rather than a numeric infinity, so
    adding a weight to it is an error instead of a silent ``inf``.
    """

    __slots__ = ("cost",)

    def __init__(self, cost: Optional[float]):
        object.__setattr__(self, "cost", None if cost is None else float(cost))

    def __setattr__(self, name, value):
        raise AttributeError("Label is immutable")

    @property
    def finite(self) -> bool:
        return self.cost is not None

    def plus(self, weight: float) -> "Label":
        if self.cost is None:
            raise ValueError("cannot extend an unreachable label")
        return Label(self.cost + weight)

    def __eq__(self, other):
        if not isinstance(other, Label):
            return NotImplemented
        return self.cost == other.cost

    def __lt__(self, other):
        if not isinstance(other, Label):
            return NotImplemented
        if self.cost is None:
            return False
        return other.cost is None or self.cost < other.cost

    def __hash__(self):
        return hash(self.cost)

    def __repr__(self):
        return "Label(UNREACHABLE)" if self.cost is None else f"Label({self.cost!r})"


UNREACHABLE = Label(None)
ZERO = Label(0.0)


@dataclass(frozen=True)
class PredecessorLabel:
    cost: Label
    pred: Optional[VertexId] = None


@dataclass(frozen=True)
class Relaxation:
    neighbor: VertexId
    old: Label
    new: Label
    adopted: bool


@dataclass(frozen=True)
class TraceEvent:
    iteration: int
    entering: VertexId
    entering_cost: Label
    relaxations: tuple[Relaxation, ...]


@dataclass(frozen=True)
class RunResult:
    graph: WeightedDigraph
    source: VertexId
    target: Optional[VertexId]
    labels: tuple[PredecessorLabel, ...]
    settled: tuple[VertexId, ...]
    stop_reason: StopReason

    def label(self, v: VertexRef) -> PredecessorLabel:
        return self.labels[self.graph.vertex(v).index]

    def cost(self, v: VertexRef) -> Optional[float]:
        return self.label(v).cost.cost

    def is_settled(self, v: VertexRef) -> bool:
        return self.graph.vertex(v) in set(self.settled)


def _check_args(g, source, target, mode):
    mode = Mode(mode)
    s = g.vertex(source)
    t = None
    if mode is Mode.TO_TARGET:
        if target is None:
            raise ValueError("a target is required in to_target mode")
        t = g.vertex(target)
        if t == s:
            raise SourceEqualsTarget(s.name)
    elif target is not None:
        t = g.vertex(target)
    return s, t, mode


def _stop_reason(mode, n_settled, n, target_settled):
    if mode is Mode.TO_TARGET and target_settled:
        return StopReason.TARGET_SETTLED
    if n_settled == n:
        return StopReason.ALL_SETTLED
    return StopReason.EXHAUSTED


def run(
    g: WeightedDigraph,
    source: VertexRef,
    target: Optional[VertexRef] = None,
    mode: Mode | str = Mode.TO_TARGET,
    trace: bool = False,
) -> tuple[RunResult, Optional[list[TraceEvent]]]:
    """Run the label-setting loop from ``source``.

    In ``TO_TARGET`` mode the loop ends once ``target`` is settled; the
    other modes keep going until every vertex is settled.  All modes end
    early when every unsettled label is unreachable.  Returns the result
    and, when ``trace`` is set, one event per settled vertex.
    """
    s, t, mode = _check_args(g, source, target, mode)
    n = g.n
    names = g.names
    cost: list[Optional[float]] = [None] * n
    pred: list[Optional[int]] = [None] * n
    cost[s.index] = 0.0
    in_s = [False] * n
    order: list[int] = []
    events: Optional[list[TraceEvent]] = [] if trace else None

    while len(order) < n:
        if mode is Mode.TO_TARGET and in_s[t.index]:
            break
        u = -1
        for v in range(n):
            if in_s[v] or cost[v] is None:
                continue
            if u < 0 or cost[v] < cost[u]:
                u = v
        if u < 0:
            break
        in_s[u] = True
        order.append(u)
        relaxations = []
        for v, w in g.adjacency[u]:
            if in_s[v]:
                continue
            candidate = cost[u] + w
            old = cost[v]
            adopted = old is None or candidate < old
            if adopted:
                cost[v] = candidate
                pred[v] = u
            if trace:
                relaxations.append(
                    Relaxation(VertexId(v, names[v]), Label(old), Label(candidate), adopted)
                )
        if trace:
            events.append(
                TraceEvent(len(order), VertexId(u, names[u]), Label(cost[u]), tuple(relaxations))
            )

    result = _result(g, s, t, mode, cost, pred, order, in_s)
    return result, events


def run_heap(
    g: WeightedDigraph,
    source: VertexRef,
    target: Optional[VertexRef] = None,
    mode: Mode | str = Mode.TO_TARGET,
) -> RunResult:
    """Priority-queue twin of :func:`run`.

    Heap keys are ``(cost, ordinal)`` so ties resolve exactly as the linear
    scan does; stale entries are skipped on pop.
    """
    s, t, mode = _check_args(g, source, target, mode)
    n = g.n
    cost: list[Optional[float]] = [None] * n
    pred: list[Optional[int]] = [None] * n
    cost[s.index] = 0.0
    in_s = [False] * n
    order: list[int] = []
    heap = [(0.0, s.index)]

    while heap:
        if mode is Mode.TO_TARGET and in_s[t.index]:
            break
        d, u = heapq.heappop(heap)
        if in_s[u] or d != cost[u]:
            continue
        in_s[u] = True
        order.append(u)
        for v, w in g.adjacency[u]:
            if in_s[v]:
                continue
            candidate = d + w
            if cost[v] is None or candidate < cost[v]:
                cost[v] = candidate
                pred[v] = u
                heapq.heappush(heap, (candidate, v))

    return _result(g, s, t, mode, cost, pred, order, in_s)


def _result(g, s, t, mode, cost, pred, order, in_s) -> RunResult:
    names = g.names
    labels = tuple(
        PredecessorLabel(Label(c), None if p is None else VertexId(p, names[p]))
        for c, p in zip(cost, pred)
    )
    target_settled = t is not None and in_s[t.index]
    return RunResult(
        graph=g,
        source=s,
        target=t,
        labels=labels,
        settled=tuple(VertexId(u, names[u]) for u in order),
        stop_reason=_stop_reason(mode, len(order), g.n, target_settled),
    )


def shortest_path_weight(g: WeightedDigraph, source: VertexRef, target: VertexRef) -> Optional[float]:
    """Minimal path weight from ``source`` to ``target``, or None if there is no path."""
    result, _ = run(g, source, target, Mode.TO_TARGET)
    if result.stop_reason is not StopReason.TARGET_SETTLED:
        return None
    return result.cost(target)


def reconstruct_path(result: RunResult, target: VertexRef) -> Optional[Path]:
    """Walk predecessor links back from ``target`` to the source.

    Returns None when ``target`` was never settled, is unreachable, or is
    the source itself.
    """
    t = result.graph.vertex(target)
    label = result.labels[t.index]
    if t == result.source or not label.cost.finite or not result.is_settled(t):
        return None
    verts = [t]
    seen = {t}
    while verts[-1] != result.source:
        p = result.labels[verts[-1].index].pred
        if p is None or p in seen:
            raise RuntimeError(f"broken predecessor chain at {verts[-1]}")
        seen.add(p)
        verts.append(p)
    return Path(tuple(reversed(verts)))


def replay_trace(g: WeightedDigraph, source: VertexRef, events: list[TraceEvent]) -> list[Label]:
    """Rebuild the final label vector by applying adopted relaxations in order."""
    labels = [UNREACHABLE] * g.n
    labels[g.vertex(source).index] = ZERO
    for event in events:
        for r in event.relaxations:
            if r.adopted:
                labels[r.neighbor.index] = r.new
    return labels
