"""Dulmage-Mendelsohn decomposition for bipartite b-matchings.

The heavy lifting lives in the compiled extension; this package re-exports
its public names.
"""

from bmdm._core import (
    BipartiteGraph,
    Decomposition,
    Error,
    FlexComponent,
    Matching,
    build_graph,
    canonical_verifying_sets,
    classify_edges,
    decompose,
    decomposition_document,
    dot_export,
    enumerate_verifying_sets,
    equivalence_check,
    graph_from_json,
    graph_to_json,
    ideal_to_verifying,
    is_b_matching,
    is_verifying,
    loose_attainable,
    loose_vertices,
    matching_from_edge_ids,
    max_b_matching,
    oracle_report,
    random_instance,
    restricted_capacity,
    verifying_cost,
    verifying_to_ideal,
)

__all__ = [
    "BipartiteGraph",
    "Decomposition",
    "Error",
    "FlexComponent",
    "Matching",
    "build_graph",
    "canonical_verifying_sets",
    "classify_edges",
    "decompose",
    "decomposition_document",
    "dot_export",
    "enumerate_verifying_sets",
    "equivalence_check",
    "graph_from_json",
    "graph_to_json",
    "ideal_to_verifying",
    "is_b_matching",
    "is_verifying",
    "loose_attainable",
    "loose_vertices",
    "matching_from_edge_ids",
    "max_b_matching",
    "oracle_report",
    "random_instance",
    "restricted_capacity",
    "verifying_cost",
    "verifying_to_ideal",
]
