from .base import BipartiteGraph, Edge, Graph, Matching, normalize_edge
from .generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    erdos_renyi,
    nonisomorphic_graphs,
    path_graph,
    random_bipartite,
    star_graph,
)
from .matching import deficiency_witness, konig_cover, matching_number, max_matching

__all__ = [
    "BipartiteGraph",
    "Edge",
    "Graph",
    "Matching",
    "normalize_edge",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "erdos_renyi",
    "nonisomorphic_graphs",
    "path_graph",
    "random_bipartite",
    "star_graph",
    "deficiency_witness",
    "konig_cover",
    "matching_number",
    "max_matching",
]
