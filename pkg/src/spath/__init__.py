"""Set-based Dijkstra shortest paths with a brute-force oracle."""

from .engine import (
    UNREACHABLE,
    Label,
    Mode,
    PredecessorLabel,
    Relaxation,
    RunResult,
    SourceEqualsTarget,
    StopReason,
    TraceEvent,
    reconstruct_path,
    replay_trace,
    run,
    run_heap,
    shortest_path_weight,
)
from .graph import (
    DIRECTED,
    UNDIRECTED,
    BadWeight,
    DuplicateEdge,
    GraphBuilder,
    GraphError,
    MissingEdge,
    Path,
    SelfLoop,
    UnknownVertex,
    VertexId,
    WeightedDigraph,
    build_graph,
    path_weight,
)
from .oracle import BadWeightRange, GraphTooLarge, OracleAnswer, enumerate_from, enumerate_min, random_graph
from .textio import GraphFileError, format_weight, parse_graph_file, render_trace, serialize_graph

__version__ = "0.1.0"
