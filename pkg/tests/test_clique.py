import numpy as np
import pytest

from rankred.graphs import complete_graph, cycle_graph, path_graph
from rankred.reductions import (
    PreprocessStatus,
    build_clique_gadget,
    classify,
    clique_to_pvc,
    is_nice,
    nice_violations,
    nicify,
    preprocess_clique_instance,
    pvc_to_clique,
)
from rankred.reductions.ip_lemma import ip_lemma_enumerate
from rankred.reductions.konig import coverage
from rankred.utils.exceptions import GadgetAssumptionError, InputError, InvalidParameterError, NotNiceError


@pytest.fixture(scope="module")
def k6_gadget():
    h, status = preprocess_clique_instance(complete_graph(6), 6)
    assert status == PreprocessStatus.READY
    return build_clique_gadget(h, 6)


@pytest.fixture
def below_threshold(k6_gadget):
    # every vertex copy a_u plus the first 24 edge copies a_e
    gad = k6_gadget
    return frozenset(gad.a(u) for u in gad.vertex_elements) | frozenset(gad.a(e) for e in gad.edge_elements[:24])


def test_preprocess_pads_with_k4():
    h, status = preprocess_clique_instance(complete_graph(6), 6)
    assert status == PreprocessStatus.READY
    assert h.order == 18 and h.size == 33


def test_preprocess_prunes_low_degree():
    h, status = preprocess_clique_instance(path_graph(8), 6)
    assert status == PreprocessStatus.NO_CLIQUE
    assert h.order == 0


def test_preprocess_keeps_small_ell():
    h, status = preprocess_clique_instance(cycle_graph(5), 3)
    assert status == PreprocessStatus.SOLVE_DIRECTLY
    assert h == cycle_graph(5)
    with pytest.raises(InvalidParameterError):
        preprocess_clique_instance(cycle_graph(5), -1)


def test_gadget_shape(k6_gadget):
    gad = k6_gadget
    assert gad.g.vertex_count == 102
    assert gad.g.size == 183
    assert gad.k == 42
    assert gad.threshold == 168


@pytest.mark.parametrize(
    "graph,ell",
    [
        (complete_graph(10), 5),
        (complete_graph(6), 6),
        (complete_graph(7).disjoint_union(path_graph(2)), 6),
    ],
)
def test_gadget_assumptions(graph, ell):
    with pytest.raises(GadgetAssumptionError):
        build_clique_gadget(graph, ell)


def test_planted_clique_round_trip(k6_gadget):
    gad = k6_gadget
    x = clique_to_pvc(gad, range(6))
    assert len(x) == gad.k
    assert coverage(gad.g, x) == gad.threshold
    assert is_nice(gad, x)
    assert classify(gad, x).as_ip_tuple() == (15, 0, 0, 6)
    assert classify(gad, x).as_ip_tuple() in ip_lemma_enumerate(gad.ell)
    assert pvc_to_clique(gad, x) == frozenset(range(6))


def test_below_threshold(k6_gadget, below_threshold):
    gad = k6_gadget
    assert is_nice(gad, below_threshold)
    result = classify(gad, below_threshold)
    assert result.as_ip_tuple() == (0, 0, 9, 0)
    assert coverage(gad.g, below_threshold) == gad.g.size - result.uncovered == 156
    assert pvc_to_clique(gad, below_threshold) is None


@pytest.mark.parametrize("seed", range(10))
def test_nicify_on_random_sets(k6_gadget, seed):
    gad = k6_gadget
    rng = np.random.default_rng(seed)
    x = frozenset(int(v) for v in rng.choice(gad.g.vertex_count, size=gad.k, replace=False))
    nice = nicify(gad, x)
    assert len(nice) == gad.k
    assert is_nice(gad, nice)
    assert coverage(gad.g, nice) >= coverage(gad.g, x)
    assert coverage(gad.g, nice) <= gad.threshold


def test_nicify_rejects_wrong_size(k6_gadget):
    with pytest.raises(InvalidParameterError):
        nicify(k6_gadget, range(10))


def test_not_nice(k6_gadget):
    gad = k6_gadget
    # b-copies without their a-copies
    x = frozenset(gad.b(e) for e in range(gad.k))
    assert nice_violations(gad, x)
    with pytest.raises(NotNiceError):
        classify(gad, x)


@pytest.mark.parametrize("clique", [[0, 1, 2, 3, 4], [0, 1, 2, 3, 4, 6], [0, 1, 2, 3, 4, 99]])
def test_clique_to_pvc_errors(k6_gadget, clique):
    with pytest.raises(InputError):
        clique_to_pvc(k6_gadget, clique)


def test_nicify_keeps_nice_sets(k6_gadget, below_threshold):
    gad = k6_gadget
    planted = clique_to_pvc(gad, range(6))
    assert nicify(gad, planted) == planted
    assert nicify(gad, below_threshold) == below_threshold


def test_nicify_single_b_copy_becomes_a_copy(k6_gadget, below_threshold):
    gad = k6_gadget
    x = below_threshold - {gad.a(7)} | {gad.b(7)}
    assert not is_nice(gad, x)
    assert nicify(gad, x) == below_threshold


def test_nicify_bad_edge_takes_missing_endpoint(k6_gadget, below_threshold):
    gad = k6_gadget
    e = gad.edge_elements[0]
    u, v = gad.endpoints(e)
    x = (below_threshold - {gad.a(u)}) | {gad.b(e)}
    assert len(x) == gad.k
    nice = nicify(gad, x)
    assert gad.b(e) not in nice and gad.a(u) in nice
    assert nice == below_threshold


def test_nicify_bad_edge_takes_lowest_spare(k6_gadget):
    gad = k6_gadget
    e = gad.edge_elements[0]
    vertices = frozenset(gad.a(u) for u in gad.vertex_elements)
    x = vertices | {gad.b(e)} | frozenset(gad.a(f) for f in gad.edge_elements[:23])
    assert len(x) == gad.k
    # every a_u is taken, so the lowest free element is the edge copy after the first 23
    nice = nicify(gad, x)
    assert nice == vertices | frozenset(gad.a(f) for f in gad.edge_elements[:24])


def test_nicify_bad_vertex_takes_lowest_edge_copy(k6_gadget):
    gad = k6_gadget
    e = gad.edge_elements[0]
    u, v = gad.endpoints(e)
    others = frozenset(gad.a(w) for w in gad.vertex_elements if w not in (u, v))
    x = others | {gad.a(e), gad.b(e)} | frozenset(gad.a(f) for f in gad.edge_elements[1:25])
    assert len(x) == gad.k
    nice = nicify(gad, x)
    # b_e goes to the lower endpoint u, then a_e is traded for the still bad vertex v
    assert gad.a(u) in nice and gad.a(v) in nice
    assert gad.a(e) not in nice and gad.b(e) not in nice
    assert nice == others | {gad.a(u), gad.a(v)} | frozenset(gad.a(f) for f in gad.edge_elements[1:25])
    assert coverage(gad.g, nice) >= coverage(gad.g, x)
