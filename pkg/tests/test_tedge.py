import pytest

from rankred.graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph
from rankred.reductions import (
    build_t_edge_gadget,
    canonicalize,
    make_pair,
    pair_to_subgraph,
    subgraph_to_pair,
    verify_pair,
)
from rankred.solvers import brute_force_rankred, min_t_edge_exact, transversal_rankred_exact
from rankred.utils.exceptions import (
    ElementNotInGroundSetError,
    InfeasibleSolutionError,
    InvalidParameterError,
    NonCanonicalPairError,
)


@pytest.fixture
def triangle_gadget():
    return build_t_edge_gadget(complete_graph(3), 1)


def test_gadget_shape(triangle_gadget):
    gad = triangle_gadget
    assert len(gad.side_a) == 12
    assert len(gad.side_b) == 3
    assert gad.full_rank == 3
    assert gad.k == 1
    # vertex copies see two B-vertices, edge copies one
    assert len(gad.graph.adjacency[gad.vertex_copy(0, 2)]) == 2
    assert gad.graph.adjacency[gad.edge_copy(1)] == (gad.edge_element(1),)
    assert gad.decode[gad.vertex_copy(2, 1)].data == (2, 1)


def test_gadget_rejects_bad_t():
    with pytest.raises(InvalidParameterError):
        build_t_edge_gadget(path_graph(3), 0)
    with pytest.raises(InvalidParameterError):
        build_t_edge_gadget(path_graph(3), 3)


@pytest.mark.parametrize(
    "graph,t",
    [
        (complete_graph(3), 1),
        (complete_graph(3), 3),
        (path_graph(4), 2),
        (star_graph(4), 3),
        (cycle_graph(4), 4),
        (complete_graph(4), 3),
    ],
)
def test_optimum_identity(graph, t):
    gad = build_t_edge_gadget(graph, t)
    j_star = len(min_t_edge_exact(graph, t))
    assert transversal_rankred_exact(gad.host, t).size == graph.order * j_star + t


@pytest.mark.slow
def test_optimum_identity_by_brute_force_on_four_vertices():
    graph = Graph(4, frozenset({(0, 1)}))
    gad = build_t_edge_gadget(graph, 1)
    assert len(gad.side_a) == 17
    optimum = brute_force_rankred(gad.host, gad.k, cap=22)
    assert optimum.size == graph.order * len(min_t_edge_exact(graph, 1)) + 1 == 9
    assert transversal_rankred_exact(gad.host, gad.k).size == optimum.size


def test_triangle_optimum(triangle_gadget):
    assert transversal_rankred_exact(triangle_gadget.host, 1).size == 7


def test_subgraph_round_trip(triangle_gadget):
    pair = subgraph_to_pair(triangle_gadget, [(1, 0)])
    assert pair.size == 7
    assert verify_pair(triangle_gadget, pair.x, pair.y)
    assert pair_to_subgraph(pair) == frozenset({0, 1})


def test_subgraph_needs_t_edges(triangle_gadget):
    with pytest.raises(InvalidParameterError):
        subgraph_to_pair(triangle_gadget, [(0, 1), (1, 2)])
    with pytest.raises(ElementNotInGroundSetError):
        subgraph_to_pair(build_t_edge_gadget(path_graph(3), 1), [(0, 2)])


def test_verify_pair(triangle_gadget):
    gad = triangle_gadget
    pair = subgraph_to_pair(gad, [(0, 1)])
    assert not verify_pair(gad, set(pair.x) - {gad.vertex_copy(0, 0)}, pair.y)
    assert not verify_pair(gad, (), gad.side_b)
    with pytest.raises(ElementNotInGroundSetError):
        verify_pair(gad, [gad.side_b[0]], pair.y)


def test_make_pair_rejects_non_canonical(triangle_gadget):
    gad = triangle_gadget
    pair = subgraph_to_pair(gad, [(0, 1)])
    assert make_pair(gad, pair.x, pair.y) == pair
    with pytest.raises(NonCanonicalPairError):
        make_pair(gad, set(pair.x) | {gad.edge_copy(2)}, pair.y)
    with pytest.raises(NonCanonicalPairError):
        make_pair(gad, gad.neighbourhood(gad.side_b[:2]), gad.side_b[:2])


def test_canonicalize_never_grows(triangle_gadget):
    gad = triangle_gadget
    pair = canonicalize(gad, gad.side_a)
    assert pair.size == 7
    assert len(pair.y) == 1
    padded = set(subgraph_to_pair(gad, [(1, 2)]).x) | {gad.edge_copy(0)}
    assert canonicalize(gad, padded).size <= len(padded)


def test_canonicalize_rejects_infeasible(triangle_gadget):
    with pytest.raises(InfeasibleSolutionError):
        canonicalize(triangle_gadget, [0, 1, 2])


def test_canonicalize_shrinks_witness():
    # removing everything leaves a witness with all 4 edges, t = 2 keeps two of them
    g = Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
    gad = build_t_edge_gadget(g, 2)
    pair = canonicalize(gad, gad.side_a)
    assert len(pair.y) == 2
    assert pair.size == 4 * 3 + 2
