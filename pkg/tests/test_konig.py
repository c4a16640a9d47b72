import numpy as np
import pytest

from rankred.graphs import BipartiteGraph, complete_bipartite, random_bipartite
from rankred.graphs.matching import matching_number
from rankred.reductions import cover_to_edges, coverage, edges_to_cover
from rankred.solvers import matching_reduction_exact, mvc_exact
from rankred.utils.exceptions import ElementNotInGroundSetError, InfeasibleSolutionError


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


def test_coverage(k33):
    assert coverage(k33, []) == 0
    assert coverage(k33, [0]) == 3
    assert coverage(k33, [0, 3]) == 5
    with pytest.raises(ElementNotInGroundSetError):
        coverage(k33, [6])


def test_cover_to_edges(k33):
    uncovered = cover_to_edges(k33, [0, 1])
    assert len(uncovered) == 3
    assert matching_number(k33.without_edges(uncovered)) <= 2


def test_edges_to_cover(k33):
    # removing a's star drops mu by one
    star = [(0, 3), (0, 4), (0, 5)]
    cover = edges_to_cover(k33, star, 1)
    assert len(cover) == 2
    assert coverage(k33, cover) >= k33.size - len(star)


def test_edges_to_cover_rejects_weak_removal(k33):
    with pytest.raises(InfeasibleSolutionError):
        edges_to_cover(k33, [(0, 3)], 1)


@pytest.mark.parametrize("seed", range(10))
def test_bridge(seed):
    rng = np.random.default_rng(seed)
    g = random_bipartite(int(rng.integers(1, 5)), int(rng.integers(1, 5)), 0.5, rng)
    mu = matching_number(g)
    for t in range(1, mu + 1):
        removed = matching_reduction_exact(g, t)
        _, covered = mvc_exact(g.as_graph(), mu - t)
        assert len(removed) == g.size - covered
        cover = edges_to_cover(g, removed, t)
        assert len(cover) <= mu - t
        assert matching_number(g.without_edges(cover_to_edges(g, cover))) <= len(cover)


def test_empty_cover_on_edgeless_graph():
    g = BipartiteGraph.from_parts(2, 2)
    assert cover_to_edges(g, []) == frozenset()
    assert edges_to_cover(g, [], 0) == frozenset()
