from itertools import combinations

import numpy as np
import pytest

from rankred.graphs import (
    BipartiteGraph,
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    erdos_renyi,
    path_graph,
    random_bipartite,
    star_graph,
)
from rankred.matroids import GraphicalModel, PartitionModel, TransversalModel, component_count
from rankred.solvers import (
    RankReductionInstance,
    Solution,
    brute_force_rankred,
    densest_k_exact,
    find_clique,
    matching_reduction_exact,
    min_kcut_exact,
    min_t_edge_exact,
    mvc_exact,
    solve_partition_rankred,
    t_edge_certificate,
    transversal_rankred_exact,
)
from rankred.solvers.partition import choose_blocks
from rankred.utils.exceptions import (
    CertificateError,
    EnumerationCapExceededError,
    InfeasibleInstanceError,
    InfeasibleSolutionError,
    InvalidParameterError,
)

from .oracles import induced_edges, max_matching_size, min_removal


@pytest.fixture
def partition():
    return PartitionModel.from_sizes(((3, 2), (2, 2), (4, 1)))


@pytest.mark.parametrize("k,size", [(1, 1), (2, 2), (3, 4), (4, 5), (5, 9)])
def test_partition_dp(partition, k, size):
    solution = solve_partition_rankred(partition, k)
    assert solution.size == size
    assert solution.verify(partition)
    assert solution.certified_rank_after <= partition.full_rank - k


def test_partition_dp_prefers_tight_blocks(partition):
    assert choose_blocks(partition, 2) == ([1], 0)
    assert choose_blocks(partition, 3) == ([0, 1], 1)


@pytest.mark.parametrize("seed", range(20))
def test_partition_dp_against_brute_force(seed):
    rng = np.random.default_rng(seed)
    sizes = [int(rng.integers(1, 4)) for _ in range(int(rng.integers(1, 4)))]
    model = PartitionModel.from_sizes([(s, int(rng.integers(1, s + 1))) for s in sizes])
    for k in range(1, model.full_rank + 1):
        assert solve_partition_rankred(model, k).size == min_removal(model.rank, model.ground_set, k)


def test_k_out_of_range(partition):
    with pytest.raises(InvalidParameterError):
        RankReductionInstance(partition, 0)
    with pytest.raises(InvalidParameterError):
        solve_partition_rankred(partition, 6)


def test_certify_rejects_weak_removal(partition):
    instance = RankReductionInstance(partition, 2)
    with pytest.raises(InfeasibleSolutionError):
        Solution.certify(instance, [0])
    with pytest.raises(CertificateError):
        Solution.certified_by_solver(instance, [0])
    assert Solution.certify(instance, [3, 4]).size == 2


@pytest.mark.parametrize("seed", range(8))
def test_transversal_exact_against_brute_force(seed):
    g = random_bipartite(6, 4, 0.45, np.random.default_rng(seed))
    m = TransversalModel(g)
    for k in range(1, m.full_rank + 1):
        assert transversal_rankred_exact(m, k).size == brute_force_rankred(m, k).size


def test_transversal_exact_with_deficiency():
    # b1 and b2 have no neighbours, so mu = |B| - 2
    g = BipartiteGraph.from_parts(3, 3, [(0, 0), (1, 0), (2, 0)])
    m = TransversalModel(g)
    assert m.full_rank == 1
    assert transversal_rankred_exact(m, 1).size == 3


def test_brute_force_on_graphical():
    triangle = GraphicalModel(complete_graph(3))
    assert brute_force_rankred(triangle, 1).size == 2
    assert brute_force_rankred(triangle, 2).size == 3


def test_brute_force_respects_cap():
    with pytest.raises(EnumerationCapExceededError):
        brute_force_rankred(GraphicalModel(complete_graph(7)), 1, cap=10)


@pytest.mark.parametrize("t,size", [(1, 2), (3, 3), (4, 4), (6, 4), (10, 5)])
def test_min_t_edge_on_complete_graph(t, size):
    g = complete_graph(5)
    vertices = min_t_edge_exact(g, t)
    assert len(vertices) == size
    assert len(t_edge_certificate(g, vertices, t)) == t


def test_min_t_edge_errors():
    with pytest.raises(InvalidParameterError):
        min_t_edge_exact(path_graph(3), 0)
    with pytest.raises(InfeasibleInstanceError):
        min_t_edge_exact(path_graph(3), 3)
    with pytest.raises(InvalidParameterError):
        t_edge_certificate(path_graph(3), frozenset({0, 1}), 2)


@pytest.mark.parametrize("seed", range(5))
def test_densest_against_enumeration(seed):
    g = erdos_renyi(7, 0.5, np.random.default_rng(seed))
    for k in range(g.order + 1):
        best = max(induced_edges(g.edges, c) for c in combinations(range(g.order), k))
        assert g.induced_edge_count(densest_k_exact(g, k)) == best


def test_mvc():
    cover, covered = mvc_exact(star_graph(6), 1)
    assert cover == frozenset({0}) and covered == 5
    assert mvc_exact(complete_graph(4), 2)[1] == 5
    assert mvc_exact(empty_graph(3), 2)[1] == 0
    with pytest.raises(InvalidParameterError):
        mvc_exact(path_graph(3), 4)


def test_kcut():
    assert len(min_kcut_exact(complete_graph(3), 1)) == 2
    two_triangles = complete_graph(3).disjoint_union(complete_graph(3))
    assert len(min_kcut_exact(two_triangles, 2)) == 3
    assert len(min_kcut_exact(path_graph(4), 3)) == 3
    with pytest.raises(InfeasibleInstanceError):
        min_kcut_exact(path_graph(4), 4)
    with pytest.raises(InvalidParameterError):
        min_kcut_exact(path_graph(4), 0)


def test_kcut_equals_graphical_rank_reduction():
    g = cycle_graph(5)
    model = GraphicalModel(g)
    for k in range(1, model.full_rank + 1):
        assert len(min_kcut_exact(g, k)) == brute_force_rankred(model, k).size


def test_matching_reduction():
    g = complete_bipartite(2, 2)
    assert len(matching_reduction_exact(g, 1)) == 2
    assert len(matching_reduction_exact(g, 2)) == 4
    assert matching_reduction_exact(g, 0) == frozenset()
    with pytest.raises(InvalidParameterError):
        matching_reduction_exact(g, 3)


@pytest.mark.parametrize("seed", range(5))
def test_matching_reduction_lowers_matching_number(seed):
    g = random_bipartite(4, 4, 0.5, np.random.default_rng(seed))
    mu = max_matching_size(g.edges)
    for t in range(1, mu + 1):
        removed = matching_reduction_exact(g, t)
        assert max_matching_size(g.edges - removed) <= mu - t


def test_find_clique():
    h = complete_graph(4).disjoint_union(path_graph(3))
    assert find_clique(h, 4) == frozenset({0, 1, 2, 3})
    assert find_clique(h, 5) is None
    assert find_clique(Graph(3), 0) == frozenset()
    with pytest.raises(EnumerationCapExceededError):
        find_clique(complete_graph(8), 3, cap=5)


@pytest.mark.parametrize("seed", range(10))
def test_kcut_is_monotone_in_k(seed):
    g = erdos_renyi(6, 0.5, np.random.default_rng(seed))
    sizes = [len(min_kcut_exact(g, k)) for k in range(1, g.order - component_count(g) + 1)]
    assert sizes == sorted(sizes)


@pytest.mark.parametrize("seed", range(10))
def test_densest_covers_min_t_edge(seed):
    g = erdos_renyi(7, 0.5, np.random.default_rng(seed))
    for t in range(1, g.size + 1):
        j = len(min_t_edge_exact(g, t))
        assert g.induced_edge_count(densest_k_exact(g, j)) >= t
