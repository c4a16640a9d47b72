from .base import RankReductionInstance, Solution
from .enumeration import (
    brute_force_rankred,
    densest_k_exact,
    find_clique,
    matching_reduction_exact,
    min_kcut_exact,
    min_t_edge_exact,
    mvc_exact,
    t_edge_certificate,
    transversal_rankred_exact,
)
from .partition import solve_partition_rankred

__all__ = [
    "RankReductionInstance",
    "Solution",
    "brute_force_rankred",
    "densest_k_exact",
    "find_clique",
    "matching_reduction_exact",
    "min_kcut_exact",
    "min_t_edge_exact",
    "mvc_exact",
    "t_edge_certificate",
    "transversal_rankred_exact",
    "solve_partition_rankred",
]
