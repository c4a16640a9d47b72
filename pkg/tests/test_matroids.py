from itertools import combinations

import numpy as np
import pytest

from rankred.graphs import BipartiteGraph, complete_graph, cycle_graph, erdos_renyi, path_graph, random_bipartite
from rankred.matroids import (
    GraphicalModel,
    IndependenceOracle,
    PartitionModel,
    TransversalModel,
    component_count,
    rank_graphical,
    rank_partition,
    rank_transversal,
)
from rankred.utils.exceptions import (
    ElementNotInGroundSetError,
    EnumerationCapExceededError,
    InputError,
    InvalidParameterError,
    MatroidOracleError,
)

from .oracles import components, max_matching_size


@pytest.fixture
def partition():
    return PartitionModel.from_sizes(((3, 2), (2, 2), (4, 1)))


def test_partition_rank(partition):
    assert partition.full_rank == 5
    assert rank_partition(partition, [0]) == 5
    assert rank_partition(partition, [0, 1]) == 4
    assert rank_partition(partition, [5, 6, 7, 8]) == 4
    assert partition.ground_set == tuple(range(9))
    assert [b.slack for b in partition.blocks] == [1, 0, 3]


def test_partition_validation():
    with pytest.raises(InvalidParameterError):
        PartitionModel([([0, 1], 3)])
    with pytest.raises(InputError):
        PartitionModel([([0, 1], 1), ([1, 2], 1)])


def test_partition_outside_ground_set(partition):
    with pytest.raises(ElementNotInGroundSetError):
        partition.rank([42])


def test_partition_to_transversal(partition):
    transversal = partition.to_transversal()
    assert transversal.ground_set == partition.ground_set
    for size in range(4):
        for removed in combinations(partition.ground_set, size):
            assert transversal.rank(removed) == partition.rank(removed)


def test_transversal_rank():
    # a0, a1 both only see b0; a2 sees b1
    model = BipartiteGraph.from_parts(3, 2, [(0, 0), (1, 0), (2, 1)])
    m = TransversalModel(model)
    assert m.full_rank == 2
    assert rank_transversal(m, [0]) == 2
    assert rank_transversal(m, [0, 1]) == 1
    assert m.is_independent([0, 2]) and not m.is_independent([0, 1])


@pytest.mark.parametrize("seed", range(5))
def test_transversal_matches_enumeration(seed):
    g = random_bipartite(5, 4, 0.4, np.random.default_rng(seed))
    m = TransversalModel(g)
    for removed in combinations(g.side_a, 2):
        kept = [e for e in g.edges if e[0] not in removed]
        assert m.rank(removed) == max_matching_size(kept)


def test_graphical_rank():
    triangle = GraphicalModel(complete_graph(3))
    assert triangle.full_rank == 2
    assert rank_graphical(triangle, [(1, 0)]) == 2
    assert rank_graphical(triangle, [(0, 1), (1, 2)]) == 1
    assert not triangle.is_independent([(0, 1), (0, 2), (1, 2)])
    with pytest.raises(ElementNotInGroundSetError):
        triangle.rank([(0, 5)])


@pytest.mark.parametrize("seed", range(5))
def test_component_count(seed):
    g = erdos_renyi(7, 0.3, np.random.default_rng(seed))
    assert component_count(g) == components(g.order, g.edges)
    assert GraphicalModel(g).full_rank == g.order - components(g.order, g.edges)


def test_as_oracle_uses_indices():
    model = GraphicalModel(cycle_graph(4))
    oracle = model.as_oracle()
    assert oracle.ground_size == 4
    assert oracle.rank_of(range(4)) == 3
    assert oracle.rank() == model.full_rank


def test_independence_oracle_greedy():
    uniform = IndependenceOracle(5, lambda s: len(s) <= 2, name="U25")
    assert uniform.full_rank == 2
    assert len(uniform.greedy_basis([1, 3, 4])) == 2
    assert uniform.rank([0, 1, 2, 3]) == 1
    assert uniform.restrict([0, 1, 2, 3]).full_rank == 1
    assert uniform.check_axioms()


def test_check_axioms_rejects_non_matroid():
    # {0, 1} and {2} are the bases: exchange fails
    family = {frozenset(), frozenset({0}), frozenset({1}), frozenset({2}), frozenset({0, 1})}
    oracle = IndependenceOracle(3, lambda s: s in family)
    with pytest.raises(MatroidOracleError):
        oracle.check_axioms()


def test_check_axioms_rejects_dependent_empty_set():
    with pytest.raises(MatroidOracleError):
        IndependenceOracle(2, lambda s: False).check_axioms()


def test_check_axioms_respects_cap():
    with pytest.raises(EnumerationCapExceededError):
        IndependenceOracle(10, lambda s: True).check_axioms(cap=4)


def test_graphical_oracle_is_a_matroid():
    assert GraphicalModel(path_graph(4)).as_oracle().check_axioms()


def _subsets(ground):
    return [frozenset(s) for size in range(len(ground) + 1) for s in combinations(ground, size)]


@pytest.mark.parametrize(
    "model",
    [
        PartitionModel.from_sizes(((3, 2), (3, 1))),
        TransversalModel(random_bipartite(6, 3, 0.5, np.random.default_rng(0))),
        GraphicalModel(complete_graph(4)),
    ],
    ids=["partition", "transversal", "graphical"],
)
def test_rank_is_monotone_and_submodular(model):
    subsets = _subsets(model.ground_set)
    rank = {s: model.rank_of(s) for s in subsets}
    for s in subsets:
        assert 0 <= rank[s] <= len(s)
        for t in subsets:
            if s <= t:
                assert rank[s] <= rank[t]
            assert rank[s | t] + rank[s & t] <= rank[s] + rank[t]
