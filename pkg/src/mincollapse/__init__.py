"""Minimal collapsible sets of undirected graphs via close-minimal-separator absorption."""

from .collapse import (
    AbsorptionStep,
    CollapseResult,
    NotChordalError,
    cmsa,
    contains_required_separators,
    first_violation,
    is_collapsible,
    minimal_collapsible_bruteforce,
    sahr,
)
from .edgelist import (
    EdgeListParseError,
    dump_graph,
    load_graph,
    parse_edge_list,
    serialize_edge_list,
)
from .gen import (
    GenConfig,
    InvalidConfigError,
    expected_edges,
    gen_chordal,
    gen_tree_er,
    generate,
    pick_targets,
)
from .graph import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    SelfLoopError,
    UnknownVertexError,
    build_graph,
    is_chordal,
    perfect_elimination_ordering,
)
from .separators import (
    AdjacentPairError,
    OverlappingSetsError,
    SameVertexError,
    SeparatorSet,
    TooLargeError,
    close_separator,
    enumerate_minimal_separators,
    enumeration_cap,
    is_minimal_separator,
    is_separator,
)

__version__ = "0.1.0"

__all__ = [
    "AbsorptionStep",
    "AdjacentPairError",
    "CollapseResult",
    "DuplicateEdgeError",
    "EdgeListParseError",
    "GenConfig",
    "Graph",
    "GraphError",
    "InvalidConfigError",
    "NotChordalError",
    "OverlappingSetsError",
    "SameVertexError",
    "SelfLoopError",
    "SeparatorSet",
    "TooLargeError",
    "UnknownVertexError",
    "build_graph",
    "close_separator",
    "cmsa",
    "contains_required_separators",
    "dump_graph",
    "enumerate_minimal_separators",
    "enumeration_cap",
    "expected_edges",
    "first_violation",
    "gen_chordal",
    "gen_tree_er",
    "generate",
    "is_chordal",
    "is_collapsible",
    "is_minimal_separator",
    "is_separator",
    "load_graph",
    "minimal_collapsible_bruteforce",
    "parse_edge_list",
    "perfect_elimination_ordering",
    "pick_targets",
    "sahr",
    "serialize_edge_list",
]
