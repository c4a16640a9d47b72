from .base import IndependenceOracle, MatroidModel
from .graphical import GraphicalModel, UnionFind, component_count, rank_graphical
from .intersection import edge_incidence_matroids, intersection_max_common, intersection_rank
from .partition import PartitionBlock, PartitionModel, rank_partition
from .transversal import TransversalModel, rank_transversal

__all__ = [
    "IndependenceOracle",
    "MatroidModel",
    "GraphicalModel",
    "UnionFind",
    "component_count",
    "rank_graphical",
    "edge_incidence_matroids",
    "intersection_max_common",
    "intersection_rank",
    "PartitionBlock",
    "PartitionModel",
    "rank_partition",
    "TransversalModel",
    "rank_transversal",
]
