"""
Reduction from Clique to maximum partial vertex cover on bipartite graphs.

Every vertex and edge x of the source graph H becomes two adjacent gadget vertices
a_x and b_x; each source edge uv adds a_uv b_u, b_uv a_u, a_uv b_v, b_uv a_v. With
k = |H| + ||H|| - C(ell, 2) + ell, H has an ell-clique iff some k gadget vertices cover
||G|| - C(ell, 2) edges.

Element numbering: source vertex u is element u, source edge j (sorted order) is
element |H| + j. a_x = x and b_x = N + x with N = |H| + ||H||.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from loguru import logger

from rankred.graphs.base import BipartiteGraph, Edge, Graph, normalize_edge
from rankred.graphs.generators import complete_graph
from rankred.reductions.base import DecodeEntry
from rankred.reductions.konig import coverage
from rankred.utils.constants import MIN_CLIQUE_GADGET_ELL, PADDING_CLIQUE_ORDER
from rankred.utils.exceptions import (
    CertificateError,
    GadgetAssumptionError,
    InputError,
    InvalidParameterError,
    NotNiceError,
)


class PreprocessStatus(str, Enum):
    READY = "ready"
    NO_CLIQUE = "no-clique"
    SOLVE_DIRECTLY = "solve-directly"


def preprocess_clique_instance(h: Graph, ell: int) -> Tuple[Graph, PreprocessStatus]:
    """
    Bring (h, ell) into the shape the gadget needs: minimum degree 2 and
    ||H|| >= |H| + C(ell, 2). Vertices of degree <= 1 are pruned repeatedly, then disjoint
    copies of K4 (each worth +2 on ||H|| - |H|) are added. Neither step changes whether
    an ell-clique exists for ell >= 6.

    Returns:
        (graph, status). status is SOLVE_DIRECTLY for ell < 6 (graph unchanged) and
        NO_CLIQUE when fewer than ell vertices survive the pruning.
    """
    if ell < 0:
        raise InvalidParameterError("ell", ell, "must be non-negative")
    if ell < MIN_CLIQUE_GADGET_ELL:
        return h, PreprocessStatus.SOLVE_DIRECTLY

    alive = set(h.vertices)
    while True:
        doomed = [v for v in sorted(alive) if len(h.adjacency[v] & alive) <= 1]
        if not doomed:
            break
        alive.difference_update(doomed)
    pruned = h.induced_subgraph(sorted(alive))
    if len(alive) < h.order:
        logger.debug(f"Pruned {h.order - len(alive)} vertices of degree <= 1")
    if pruned.order < ell:
        logger.warning(f"Only {pruned.order} vertices survive pruning, no {ell}-clique possible")
        return pruned, PreprocessStatus.NO_CLIQUE

    deficit = comb(ell, 2) - (pruned.size - pruned.order)
    if deficit > 0:
        padding = complete_graph(PADDING_CLIQUE_ORDER)
        gain = padding.size - padding.order
        copies = -(-deficit // gain)
        pruned = pruned.disjoint_union(*([padding] * copies))
        logger.debug(f"Added {copies} disjoint K{PADDING_CLIQUE_ORDER} components")
    return pruned, PreprocessStatus.READY


def check_clique_assumptions(h: Graph, ell: int):
    """Raise `GadgetAssumptionError` naming the first violated gadget assumption."""
    if ell < MIN_CLIQUE_GADGET_ELL:
        raise GadgetAssumptionError("ell >= 6", f"ell = {ell}")
    low = [v for v in h.vertices if h.degree(v) < 2]
    if low:
        raise GadgetAssumptionError("minimum degree >= 2", f"vertices {low[:10]} have degree < 2")
    if h.size < h.order + comb(ell, 2):
        raise GadgetAssumptionError(
            "||H|| >= |H| + C(ell, 2)", f"||H|| = {h.size} < {h.order} + {comb(ell, 2)}"
        )


@dataclass(frozen=True)
class CliqueGadget:
    g: BipartiteGraph = field(repr=False)
    k: int
    source: Graph
    ell: int
    decode: Mapping[int, DecodeEntry] = field(compare=False, repr=False)

    @property
    def element_count(self) -> int:
        """N = |H| + ||H||"""
        return self.source.order + self.source.size

    def a(self, element: int) -> int:
        return element

    def b(self, element: int) -> int:
        return self.element_count + element

    def edge_element(self, edge: Edge) -> int:
        return self.source.order + self.source.edge_index[normalize_edge(*edge)]

    @property
    def vertex_elements(self) -> range:
        return range(self.source.order)

    @property
    def edge_elements(self) -> range:
        return range(self.source.order, self.element_count)

    def endpoints(self, element: int) -> Edge:
        return self.source.sorted_edges[element - self.source.order]

    @property
    def threshold(self) -> int:
        """||G|| - C(ell, 2), the optimum exactly when H has an ell-clique."""
        return self.g.size - comb(self.ell, 2)

    @cached_property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(range(2 * self.element_count))


@dataclass(frozen=True)
class NiceClassification:
    """
    Counts of a nice partial vertex cover: s = |S(X)| and e_i = number of source edges
    of type i (a_e, b_e not in X, with 2, 1 or 0 endpoints in S(X)).
    """

    s: int
    e1: int
    e2: int
    e3: int
    bad_vertices: FrozenSet[int] = frozenset()
    bad_edges: FrozenSet[int] = frozenset()

    def as_ip_tuple(self) -> Tuple[int, int, int, int]:
        """(x, y, z, s) as in the integer program."""
        return (self.e1, self.e2, self.e3, self.s)

    @property
    def uncovered(self) -> int:
        return self.e1 + 2 * self.e2 + 3 * self.e3


def build_clique_gadget(h: Graph, ell: int) -> CliqueGadget:
    """
    Gadget (G, k) for a preprocessed instance. |V(G)| = 2(|H| + ||H||),
    ||G|| = |H| + 5||H|| and k = |H| + ||H|| - C(ell, 2) + ell.
    """
    check_clique_assumptions(h, ell)
    n, m = h.order, h.size
    total = n + m
    decode: Dict[int, DecodeEntry] = {}
    edges = []
    for u in range(n):
        decode[u] = DecodeEntry("a", "v", (u,))
        decode[total + u] = DecodeEntry("b", "v", (u,))
        edges.append((u, total + u))
    for j, (u, v) in enumerate(h.sorted_edges):
        e = n + j
        decode[e] = DecodeEntry("a", "e", (u, v))
        decode[total + e] = DecodeEntry("b", "e", (u, v))
        edges.append((e, total + e))
        for w in (u, v):
            edges.append((e, total + w))
            edges.append((w, total + e))
    g = BipartiteGraph(tuple(range(total)), tuple(range(total, 2 * total)), frozenset(edges))
    k = n + m - comb(ell, 2) + ell
    if g.vertex_count != 2 * total or g.size != n + 5 * m:
        raise CertificateError(f"Clique gadget has {g.vertex_count} vertices and {g.size} edges")
    logger.info(f"Built clique gadget: |V(G)|={g.vertex_count}, ||G||={g.size}, k={k}, ell={ell}")
    return CliqueGadget(g, k, h, ell, decode)


def _check_size(gad: CliqueGadget, x: FrozenSet[int]):
    if len(x) != gad.k:
        raise InvalidParameterError("|X|", len(x), f"a partial vertex cover has exactly k = {gad.k} vertices")


def nice_violations(gad: CliqueGadget, x: Iterable[int]) -> List[str]:
    """Reasons why X is not nice (empty when it is)."""
    x = gad.g.check_vertices(x)
    reasons = []
    if len(x) != gad.k:
        reasons.append(f"|X| = {len(x)} != k = {gad.k}")
    missing_a = [e for e in range(gad.element_count) if gad.b(e) in x and gad.a(e) not in x]
    if missing_a:
        reasons.append(f"a-property fails for elements {missing_a[:10]}")
    bad_vertices = [u for u in gad.vertex_elements if gad.a(u) not in x and gad.b(u) not in x]
    if bad_vertices:
        reasons.append(f"bad vertices {bad_vertices[:10]}")
    bad_edges = [e for e in gad.edge_elements if gad.a(e) in x and gad.b(e) in x]
    if bad_edges:
        reasons.append(f"bad edges {bad_edges[:10]}")
    return reasons


def is_nice(gad: CliqueGadget, x: Iterable[int]) -> bool:
    return not nice_violations(gad, x)


def _tilde(gad: CliqueGadget, x: FrozenSet[int]) -> Set[int]:
    # both copies stay, a single copy becomes a_x
    result = set()
    for e in range(gad.element_count):
        has_a, has_b = gad.a(e) in x, gad.b(e) in x
        if has_a and has_b:
            result.update((gad.a(e), gad.b(e)))
        elif has_a or has_b:
            result.add(gad.a(e))
    return result


def _remove_bad_edges(gad: CliqueGadget, current: Set[int]):
    for e in gad.edge_elements:
        if gad.a(e) not in current or gad.b(e) not in current:
            continue
        bad_endpoints = [u for u in gad.endpoints(e) if gad.a(u) not in current]
        current.discard(gad.b(e))
        if bad_endpoints:
            current.add(gad.a(bad_endpoints[0]))
            logger.trace(f"bad edge {e}: b_e traded for a_{bad_endpoints[0]}")
        else:
            spare = next(y for y in range(gad.element_count) if gad.a(y) not in current)
            current.add(gad.a(spare))
            logger.trace(f"bad edge {e}: b_e traded for a_{spare}")


def _remove_bad_vertices(gad: CliqueGadget, current: Set[int]):
    for u in gad.vertex_elements:
        if gad.a(u) in current:
            continue
        donor = next((e for e in gad.edge_elements if gad.a(e) in current and gad.b(e) not in current), None)
        if donor is None:
            raise CertificateError(f"No edge copy a_e can be traded for the bad vertex {u}")
        current.discard(gad.a(donor))
        current.add(gad.a(u))
        logger.trace(f"bad vertex {u}: a_{donor} traded for a_u")


def nicify(gad: CliqueGadget, x: Iterable[int]) -> FrozenSet[int]:
    """
    Nice partial vertex cover covering at least as many edges as X.

    Three rewrites in order: single copies become a-copies, bad edges (both copies taken)
    give up b_e, then bad vertices (no copy taken) take the place of an edge copy a_e'.
    """
    x = gad.g.check_vertices(x)
    _check_size(gad, x)
    current = _tilde(gad, x)
    _remove_bad_edges(gad, current)
    _remove_bad_vertices(gad, current)
    result = frozenset(current)
    before, after = coverage(gad.g, x), coverage(gad.g, result)
    if after < before or len(result) != gad.k:
        raise CertificateError(f"nicify lowered coverage from {before} to {after}")
    violations = nice_violations(gad, result)
    if violations:
        raise CertificateError(f"nicify produced a set that is not nice: {'; '.join(violations)}")
    return result


def classify(gad: CliqueGadget, x: Iterable[int]) -> NiceClassification:
    """
    (s, e1, e2, e3) of a nice X. Asserts c(X) = ||G|| - e1 - 2 e2 - 3 e3 and
    e1 + e2 + e3 - s = C(ell, 2) - ell.

    Raises:
        NotNiceError: X is not nice
    """
    x = gad.g.check_vertices(x)
    violations = nice_violations(gad, x)
    if violations:
        raise NotNiceError("; ".join(violations))
    chosen = frozenset(u for u in gad.vertex_elements if gad.b(u) in x)
    counts = [0, 0, 0]
    for e in gad.edge_elements:
        if gad.a(e) in x:
            continue
        inside = sum(1 for u in gad.endpoints(e) if u in chosen)
        counts[2 - inside] += 1
    result = NiceClassification(len(chosen), *counts)
    covered = coverage(gad.g, x)
    if covered != gad.g.size - result.uncovered:
        raise CertificateError(f"coverage {covered} != ||G|| - e1 - 2e2 - 3e3 = {gad.g.size - result.uncovered}")
    if result.e1 + result.e2 + result.e3 - result.s != comb(gad.ell, 2) - gad.ell:
        raise CertificateError(f"budget identity fails for {result.as_ip_tuple()}")
    return result


def clique_to_pvc(gad: CliqueGadget, clique: Iterable[int]) -> FrozenSet[int]:
    """
    Partial vertex cover of an ell-clique K: a_u, b_u for u in K, a_u for the other
    vertices and a_e for the edges outside K. It covers exactly ||G|| - C(ell, 2) edges.
    """
    clique = sorted(set(int(u) for u in clique))
    if len(clique) != gad.ell:
        raise InvalidParameterError("clique", clique, f"must have exactly ell = {gad.ell} vertices")
    for u in clique:
        if not 0 <= u < gad.source.order:
            raise InputError(f"Vertex {u} is not a vertex of the source graph")
    for i, u in enumerate(clique):
        for v in clique[i + 1 :]:
            if not gad.source.has_edge(u, v):
                raise InputError(f"Vertices {u} and {v} of the proposed clique are not adjacent")
    members = set(clique)
    x = set(gad.a(u) for u in gad.vertex_elements)
    x.update(gad.b(u) for u in clique)
    x.update(gad.a(e) for e in gad.edge_elements if not set(gad.endpoints(e)) <= members)
    result = frozenset(x)
    covered = coverage(gad.g, result)
    if len(result) != gad.k or covered != gad.threshold:
        raise CertificateError(f"Clique cover has size {len(result)} and coverage {covered}")
    return result


def pvc_to_clique(gad: CliqueGadget, x: Iterable[int]) -> Optional[FrozenSet[int]]:
    """
    Read an ell-clique off a partial vertex cover reaching ||G|| - C(ell, 2) after nicify,
    or None when X stays below that threshold. Only checks the certificate, never searches.
    """
    nice = nicify(gad, x)
    covered = coverage(gad.g, nice)
    if covered > gad.threshold:
        raise CertificateError(f"Nice cover with {covered} > {gad.threshold} covered edges")
    if covered < gad.threshold:
        return None
    clique = frozenset(u for u in gad.vertex_elements if gad.b(u) in nice)
    if len(clique) != gad.ell or not gad.source.is_clique(clique):
        raise CertificateError(f"Threshold cover does not encode an {gad.ell}-clique: {sorted(clique)}")
    return clique
