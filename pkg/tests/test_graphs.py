import numpy as np
import pytest

from rankred.graphs import (
    BipartiteGraph,
    Graph,
    Matching,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    erdos_renyi,
    nonisomorphic_graphs,
    path_graph,
    star_graph,
)
from rankred.utils.exceptions import ElementNotInGroundSetError, InputError, InvalidParameterError
from rankred.utils.package_utils import has_package


@pytest.fixture
def triangle():
    return complete_graph(3)


def test_edges_are_normalized():
    g = Graph(3, frozenset({(2, 0), (1, 2)}))
    assert g.sorted_edges == ((0, 2), (1, 2))
    assert g.has_edge(2, 0) and g.has_edge(0, 2)
    assert g.degree(2) == 2


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 0)],
        [(0, 3)],
        [(0, 1), (1, 0)],
    ],
)
def test_invalid_edges(edges):
    with pytest.raises(InputError):
        Graph(3, edges)


def test_negative_order():
    with pytest.raises(InvalidParameterError):
        Graph(-1)


@pytest.mark.parametrize(
    "graph,order,size",
    [
        (complete_graph(5), 5, 10),
        (path_graph(4), 4, 3),
        (cycle_graph(6), 6, 6),
        (star_graph(5), 5, 4),
        (empty_graph(3), 3, 0),
    ],
)
def test_generators(graph, order, size):
    assert graph.order == order
    assert graph.size == size


def test_induced_counts(triangle):
    g = triangle.disjoint_union(path_graph(2))
    assert g.order == 5 and g.size == 4
    assert g.induced_edge_count([0, 1, 2]) == 3
    assert g.induced_edge_count([2, 3, 4]) == 1
    assert g.induced_edges([0, 1, 3]) == frozenset({(0, 1)})
    assert g.is_clique([0, 1, 2]) and not g.is_clique([0, 3])
    assert g.vertices_of([(0, 1), (3, 4)]) == frozenset({0, 1, 3, 4})


def test_induced_subgraph_relabels():
    g = path_graph(5).induced_subgraph([1, 2, 4])
    assert g.order == 3
    assert g.edges == frozenset({(0, 1)})


def test_relabel():
    g = path_graph(3).relabel([2, 0, 1])
    assert g.edges == frozenset({(0, 2), (0, 1)})
    with pytest.raises(InvalidParameterError):
        path_graph(3).relabel([0, 0, 1])


def test_erdos_renyi_is_reproducible():
    a = erdos_renyi(8, 0.4, np.random.default_rng(7))
    b = erdos_renyi(8, 0.4, np.random.default_rng(7))
    assert a == b
    assert erdos_renyi(6, 1.0, np.random.default_rng(0)).size == 15
    assert erdos_renyi(6, 0.0, np.random.default_rng(0)).size == 0


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_nonisomorphic_graph_counts(n, classes):
    graphs = nonisomorphic_graphs(n)
    assert len(graphs) == classes
    assert graphs[0].size == 0
    assert graphs[-1] == complete_graph(n)


def test_nonisomorphic_graphs_limit():
    with pytest.raises(InvalidParameterError):
        nonisomorphic_graphs(6)


def test_bipartite_orientation():
    g = BipartiteGraph((0, 1), (2, 3), frozenset({(2, 0), (1, 3)}))
    assert g.edges == frozenset({(0, 2), (1, 3)})
    assert g.neighbourhood([2, 3]) == frozenset({0, 1})
    with pytest.raises(InputError):
        BipartiteGraph((0, 1), (2, 3), frozenset({(0, 1)}))
    with pytest.raises(InputError):
        BipartiteGraph((0, 1), (1, 2))


def test_bipartite_removals():
    g = complete_bipartite(2, 3)
    assert g.size == 6
    smaller = g.without_vertices([0, 4])
    assert smaller.side_a == (1,) and smaller.side_b == (2, 3)
    assert smaller.size == 2
    assert g.without_edges([(3, 1)]).size == 5
    with pytest.raises(ElementNotInGroundSetError):
        g.without_edges([(0, 1)])
    with pytest.raises(ElementNotInGroundSetError):
        g.check_vertices([9])


def test_bipartite_as_graph():
    g = complete_bipartite(2, 2).as_graph()
    assert g.order == 4 and g.size == 4
    with pytest.raises(InputError):
        BipartiteGraph((0,), (5,), frozenset({(0, 5)})).as_graph()


def test_matching_rejects_shared_endpoints():
    assert Matching(frozenset({(0, 2), (1, 3)})).mate[3] == 1
    with pytest.raises(InputError):
        Matching(frozenset({(0, 2), (0, 3)}))


@pytest.mark.skipif(not has_package("networkx"), reason="networkx is not installed")
def test_to_networkx():
    g = cycle_graph(5).to_networkx()
    assert g.number_of_nodes() == 5 and g.number_of_edges() == 5
    b = complete_bipartite(2, 3).to_networkx()
    assert b.number_of_edges() == 6
