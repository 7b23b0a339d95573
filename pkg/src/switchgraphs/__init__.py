"""Degree sequences, 2-switch rewiring, split graphs, unswitchable graphs.

The package models simple undirected graphs on vertices ``0..n-1`` and
covers: graphicality testing and deterministic realization of degree
sequences, degree-preserving 2-switches (application, enumeration,
normalization, reachability), split-graph recognition and construction,
recognition/decomposition/generation of unswitchable graphs (those with no
induced P4, C4 or 2K2), and exhaustive small-instance oracles.
"""

from .generation import (
    GenConfig,
    P4Record,
    SplitMix64,
    add_min_edges,
    chord_frequencies,
    find_all_p4s,
    generate_unswitchable,
    random_split_graph,
)
from .graphs import (
    DegreeSequence,
    Graph,
    Quad,
    QuadKind,
    as_degree_sequence,
    classify_quad,
    degree_sequence,
    find_forbidden_quad,
    graph_from_edges,
)
from .realization import NonGraphicalError, is_graphical, realize, reduce_at, reduce_head
from .split import (
    NotSplitError,
    SaturationError,
    SplitInconsistencyError,
    SplitPartition,
    construct_split_graph,
    is_split_sequence,
    split_index,
    split_partition,
    split_sides,
)
from .switching import (
    InvalidSwitchError,
    SearchBudgetExceeded,
    TwoSwitch,
    apply_two_switch,
    enumerate_two_switches,
    normalize_max_vertex,
    two_switch_path,
)
from .unswitchable import (
    EggletonFamily,
    NotUnswitchableError,
    SwitchVerdict,
    eggleton_construct,
    eggleton_decompose,
    recognize,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeSequence",
    "EggletonFamily",
    "GenConfig",
    "Graph",
    "InvalidSwitchError",
    "NonGraphicalError",
    "NotSplitError",
    "NotUnswitchableError",
    "P4Record",
    "Quad",
    "QuadKind",
    "SaturationError",
    "SearchBudgetExceeded",
    "SplitInconsistencyError",
    "SplitMix64",
    "SplitPartition",
    "SwitchVerdict",
    "TwoSwitch",
    "add_min_edges",
    "apply_two_switch",
    "as_degree_sequence",
    "chord_frequencies",
    "classify_quad",
    "construct_split_graph",
    "degree_sequence",
    "eggleton_construct",
    "eggleton_decompose",
    "enumerate_two_switches",
    "find_all_p4s",
    "find_forbidden_quad",
    "generate_unswitchable",
    "graph_from_edges",
    "is_graphical",
    "is_split_sequence",
    "normalize_max_vertex",
    "random_split_graph",
    "realize",
    "recognize",
    "reduce_at",
    "reduce_head",
    "split_index",
    "split_partition",
    "split_sides",
    "two_switch_path",
]
