import numpy as np
import pytest

from rankred.graphs import BipartiteGraph, Matching, complete_bipartite, complete_graph, random_bipartite
from rankred.graphs.matching import matching_number
from rankred.matroids import (
    GraphicalModel,
    IndependenceOracle,
    PartitionModel,
    edge_incidence_matroids,
    intersection_max_common,
    intersection_rank,
)
from rankred.suites.intersection import max_common_exhaustive
from rankred.utils.exceptions import InvalidParameterError, MatroidOracleError


def test_edge_incidence_matroids():
    g = BipartiteGraph.from_parts(2, 2, [(0, 0), (0, 1), (1, 1)])
    m_a, m_b, edges = edge_incidence_matroids(g)
    assert edges == ((0, 2), (0, 3), (1, 3))
    assert [b.sorted_elements for b in m_a.blocks] == [(0, 1), (2,)]
    assert [b.sorted_elements for b in m_b.blocks] == [(0,), (1, 2)]


def test_complete_bipartite():
    m_a, m_b, edges = edge_incidence_matroids(complete_bipartite(3, 3))
    common = intersection_max_common(m_a, m_b)
    assert len(common) == 3
    assert Matching(frozenset(edges[i] for i in common)).size == 3


@pytest.mark.parametrize("seed", range(10))
def test_matches_matching_number(seed):
    g = random_bipartite(5, 5, 0.35, np.random.default_rng(seed))
    m_a, m_b, edges = edge_incidence_matroids(g)
    common = intersection_max_common(m_a, m_b)
    assert len(common) == matching_number(g)
    assert Matching(frozenset(edges[i] for i in common)).is_matching_of(g)


@pytest.mark.parametrize("seed", range(5))
def test_matches_exhaustive_search(seed):
    rng = np.random.default_rng(seed)
    p1 = PartitionModel([([0, 1, 2], int(rng.integers(0, 4))), ([3, 4, 5], int(rng.integers(0, 4)))])
    p2 = PartitionModel([([0, 3], 1), ([1, 4], 1), ([2, 5], int(rng.integers(0, 3)))])
    assert len(intersection_max_common(p1, p2)) == max_common_exhaustive(p1, p2)


def test_self_intersection_is_the_rank():
    m = GraphicalModel(complete_graph(4))
    assert len(intersection_max_common(m, m)) == 3


def test_intersection_rank_after_removal():
    g = complete_bipartite(2, 2)
    m_a, m_b, edges = edge_incidence_matroids(g)
    assert intersection_rank(m_a, m_b) == 2
    assert intersection_rank(m_a, m_b, [0]) == 2
    assert intersection_rank(m_a, m_b, [0, 1]) == 1


def test_ground_sets_must_agree():
    with pytest.raises(InvalidParameterError):
        intersection_max_common(PartitionModel([([0, 1], 1)]), PartitionModel([([0, 1, 2], 1)]))


def test_inconsistent_oracle():
    with pytest.raises(MatroidOracleError):
        intersection_max_common(IndependenceOracle(2, lambda s: False), IndependenceOracle(2, lambda s: True))
