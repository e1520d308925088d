"""Projective rooted spanning trees of digraphs over a linear vertex order."""

from .conflict import ConflictGraph, build_conflict_graph, edge_index_K, edge_prefix, edges_conflict, lex_compare
from .digraph import (
    Arc,
    Digraph,
    GraphFormatError,
    Span,
    induced_subgraph,
    parse_adjacency_matrix,
    parse_arc_list,
    subgraph_with_arcs,
    to_arc_list,
    to_dot,
)
from .growth import (
    PreTree,
    build_extension_graph,
    enumerate_projective_arborescences,
    frontier_extensions,
    init_generation,
    is_extendable,
    next_generation,
)
from .laplacian import bareiss_determinant, count_arborescences, has_arborescence, in_degree_laplacian
from .mis import (
    LevelSets,
    LimitExceeded,
    compatible_prefix,
    enumerate_maximal_projective_subgraphs,
    extend_level,
    is_maximal_noncrossing,
)

__version__ = "0.1.0"
