"""Graph file format and trace rendering.

Graph files are line oriented::

    # comment
    undirected
    a b 2
    c

The first non-blank, non-comment line is the mode (``directed`` or
``undirected``).  Each following line is either an edge ``u v w`` or a
lone vertex name, which declares a vertex that may have no edges.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Optional

from .engine import Label, TraceEvent
from .graph import MODES, GraphBuilder, GraphError, WeightedDigraph


class GraphFileError(ValueError):
    def __init__(self, line: int, reason: str, column: Optional[int] = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {reason}")
        self.line, self.column, self.reason = line, column, reason


def format_weight(x: Optional[float]) -> str:
    """Shortest decimal form; integral values drop the fractional part."""
    if x is None:
        return "inf"
    if math.isfinite(x) and x == int(x) and abs(x) < 2**53:
        return str(int(x))
    return repr(x)


def _column(raw: str, token_index: int) -> int:
    pos = 0
    for _ in range(token_index + 1):
        while raw[pos].isspace():
            pos += 1
        start = pos
        while pos < len(raw) and not raw[pos].isspace():
            pos += 1
    return start + 1


def parse_graph_file(text: str) -> WeightedDigraph:
    """Parse graph-file text; errors carry the 1-based line (and column)."""
    builder: Optional[GraphBuilder] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if builder is None:
            if len(tokens) != 1 or tokens[0] not in MODES:
                raise GraphFileError(lineno, f"expected mode line 'directed' or 'undirected', got {line!r}", 1)
            builder = GraphBuilder(tokens[0])
            continue
        if len(tokens) == 1 and tokens[0] in MODES:
            raise GraphFileError(lineno, "mode given more than once", _column(raw, 0))
        try:
            if len(tokens) == 1:
                builder.add_vertex(tokens[0])
            elif len(tokens) == 3:
                u, v, w = tokens
                try:
                    weight = float(w)
                except ValueError:
                    raise GraphFileError(lineno, f"weight {w!r} is not a number", _column(raw, 2)) from None
                builder.add_edge(u, v, weight)
            else:
                raise GraphFileError(lineno, f"expected 'u v weight' or a vertex name, got {len(tokens)} fields")
        except GraphError as err:
            raise GraphFileError(lineno, f"{type(err).__name__}: {err}") from err
    if builder is None:
        raise GraphFileError(1, "missing mode line")
    return builder.build()


def serialize_graph(g: WeightedDigraph) -> str:
    """Canonical text: mode, every vertex in ordinal order, then edges.

    Undirected edges are written once, from the lower ordinal end.
    """
    lines = [g.mode]
    lines.extend(g.names)
    for u, v, w in g.edge_list():
        if g.mode == "undirected" and v < u:
            continue
        lines.append(f"{g.names[u]} {g.names[v]} {format_weight(w)}")
    return "\n".join(lines) + "\n"


def _label(label: Label) -> str:
    return format_weight(label.cost)


def event_to_dict(event: TraceEvent) -> dict:
    return {
        "iteration": event.iteration,
        "settle": event.entering.name,
        "cost": event.entering_cost.cost,
        "relax": [
            {"vertex": r.neighbor.name, "old": r.old.cost, "new": r.new.cost, "adopted": r.adopted}
            for r in event.relaxations
        ],
    }


def render_trace(events: Iterable[TraceEvent], format: str = "text") -> str:
    """Render trace events as text blocks or JSON lines (one object per event)."""
    if format == "json":
        return "".join(json.dumps(event_to_dict(e)) + "\n" for e in events)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    out = []
    for e in events:
        out.append(f"[{e.iteration}] settle {e.entering.name} cost={_label(e.entering_cost)}\n")
        for r in e.relaxations:
            verdict = "adopted" if r.adopted else "kept"
            out.append(f"  relax {r.neighbor.name}: {_label(r.old)} -> {_label(r.new)} ({verdict})\n")
    return "".join(out)
