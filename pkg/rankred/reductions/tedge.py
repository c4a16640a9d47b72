"""
Gadget between min t-edge subgraph and rank reduction on transversal matroids.

For a graph G with n vertices and m edges the host bipartite graph H has
A = n copies V_0..V_{n-1} of V(G) plus one copy E' of E(G), and B = E(G).
A vertex copy is adjacent to the edges it is an endpoint of, an edge copy only to
its own edge. Optimal removal sets and minimum t-edge subgraphs then satisfy
x* = n * j* + t.

Index layout: copy c of vertex v is c*n + v, the E' copy of edge j is n*n + j and the
B-vertex of edge j is n*n + m + j, edges numbered in sorted order.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping

from loguru import logger

from rankred.graphs.base import BipartiteGraph, Edge, Graph, normalize_edge
from rankred.graphs.matching import deficiency_witness
from rankred.matroids.transversal import TransversalModel
from rankred.reductions.base import DecodeEntry
from rankred.utils.exceptions import (
    CertificateError,
    ElementNotInGroundSetError,
    InfeasibleSolutionError,
    InvalidParameterError,
    NonCanonicalPairError,
)


@dataclass(frozen=True)
class TEdgeGadget:
    host: TransversalModel = field(repr=False)
    source: Graph
    t: int
    decode: Mapping[int, DecodeEntry] = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.source.order

    @property
    def m(self) -> int:
        return self.source.size

    @property
    def k(self) -> int:
        """Rank reduction target, equal to t."""
        return self.t

    @property
    def graph(self) -> BipartiteGraph:
        return self.host.model

    @property
    def side_a(self):
        return self.graph.side_a

    @property
    def side_b(self):
        return self.graph.side_b

    def vertex_copy(self, vertex: int, copy: int) -> int:
        return copy * self.n + vertex

    def edge_copy(self, j: int) -> int:
        return self.n * self.n + j

    def edge_element(self, j: int) -> int:
        return self.n * self.n + self.m + j

    def b_of(self, edge: Edge) -> int:
        e = normalize_edge(*edge)
        if e not in self.source.edge_index:
            raise ElementNotInGroundSetError([e], repr(self.source))
        return self.edge_element(self.source.edge_index[e])

    @cached_property
    def full_rank(self) -> int:
        return self.host.full_rank

    def check_a(self, x: Iterable[int]) -> FrozenSet[int]:
        chosen = frozenset(int(v) for v in x)
        outside = chosen - frozenset(self.side_a)
        if outside:
            raise ElementNotInGroundSetError(outside, "side A of the t-edge gadget")
        return chosen

    def check_b(self, y: Iterable[int]) -> FrozenSet[int]:
        chosen = frozenset(int(v) for v in y)
        outside = chosen - frozenset(self.side_b)
        if outside:
            raise ElementNotInGroundSetError(outside, "side B of the t-edge gadget")
        return chosen

    def edges_of(self, y: Iterable[int]) -> FrozenSet[Edge]:
        """Source edges whose B-vertices lie in y."""
        return frozenset(self.decode[b].edge for b in y)

    def neighbourhood(self, y: Iterable[int]) -> FrozenSet[int]:
        return self.graph.neighbourhood(y)


@dataclass(frozen=True)
class CanonicalPair:
    """
    Solution/witness pair (X, Y) with |Y| = t and X = N_H(Y), that is, all n copies of
    every vertex of G_Y plus the t edge copies of G_Y.
    """

    x: FrozenSet[int]
    y: FrozenSet[int]
    subgraph: Graph
    gadget: TEdgeGadget = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.x)

    @property
    def vertices(self) -> FrozenSet[int]:
        return self.subgraph.vertices_of(self.subgraph.edges)


def build_t_edge_gadget(g: Graph, t: int) -> TEdgeGadget:
    """
    Host graph H for min t-edge subgraph on g, with rank reduction target k = t.
    |A| = n^2 + m, |B| = m and r(A) = m.
    """
    n, m = g.order, g.size
    if not 1 <= t <= m:
        raise InvalidParameterError("t", t, f"must lie in 1..||G|| = 1..{m}")
    decode: Dict[int, DecodeEntry] = {}
    for copy in range(n):
        for v in range(n):
            decode[copy * n + v] = DecodeEntry("a", "v", (v, copy))
    edges = []
    for j, (u, v) in enumerate(g.sorted_edges):
        a_copy, b = n * n + j, n * n + m + j
        decode[a_copy] = DecodeEntry("a", "e", (u, v))
        decode[b] = DecodeEntry("b", "e", (u, v))
        edges.append((a_copy, b))
        for copy in range(n):
            edges.append((copy * n + u, b))
            edges.append((copy * n + v, b))
    host = BipartiteGraph(tuple(range(n * n + m)), tuple(range(n * n + m, n * n + 2 * m)), frozenset(edges))
    gadget = TEdgeGadget(TransversalModel(host), g, t, decode)
    if gadget.full_rank != m:
        raise CertificateError(f"t-edge gadget has rank {gadget.full_rank}, expected ||G|| = {m}")
    logger.info(f"Built t-edge gadget for {g!r}, t={t}: |A|={n * n + m}, |B|={m}")
    return gadget


def verify_pair(gad: TEdgeGadget, x: Iterable[int], y: Iterable[int]) -> bool:
    """
    Check the witness inequality |N_H(Y) \\ X| <= |Y| - t. When it holds the rank drop
    r(A \\ X) <= r(A) - t is re-verified with the matching oracle.
    """
    x, y = gad.check_a(x), gad.check_b(y)
    holds = len(gad.neighbourhood(y) - x) <= len(y) - gad.t
    if holds:
        rank_after = gad.host.rank(x)
        if rank_after > gad.full_rank - gad.t:
            raise CertificateError(
                f"Witness holds but the rank after removal is {rank_after} > {gad.full_rank - gad.t}"
            )
    return holds


def _pair_from_edges(gad: TEdgeGadget, edges: Iterable[Edge]) -> CanonicalPair:
    edges = frozenset(normalize_edge(*e) for e in edges)
    y = frozenset(gad.b_of(e) for e in edges)
    x = gad.neighbourhood(y)
    return CanonicalPair(x, y, Graph(gad.n, edges), gad)


def check_canonical(p: CanonicalPair):
    """Raise `NonCanonicalPairError` unless |Y| = t and X = N_H(Y) with a matching G_Y."""
    gad = p.gadget
    if len(p.y) != gad.t:
        raise NonCanonicalPairError(f"|Y| = {len(p.y)} but t = {gad.t}")
    if p.x != gad.neighbourhood(p.y):
        raise NonCanonicalPairError("X is not the neighbourhood of Y in the host graph")
    if p.subgraph.edges != gad.edges_of(p.y):
        raise NonCanonicalPairError("the recorded subgraph does not consist of the edges of Y")


def make_pair(gad: TEdgeGadget, x: Iterable[int], y: Iterable[int]) -> CanonicalPair:
    """Wrap (x, y) as a canonical pair, checking that it is one."""
    x, y = gad.check_a(x), gad.check_b(y)
    pair = CanonicalPair(x, y, Graph(gad.n, gad.edges_of(y)), gad)
    check_canonical(pair)
    return pair


def subgraph_to_pair(gad: TEdgeGadget, sub: Iterable[Edge]) -> CanonicalPair:
    """Canonical pair of a set of exactly t source edges: Y = their B-vertices, X = N_H(Y)."""
    sub = frozenset(normalize_edge(*e) for e in sub)
    if len(sub) != gad.t:
        raise InvalidParameterError("sub", sorted(sub), f"must contain exactly t = {gad.t} edges")
    pair = _pair_from_edges(gad, sub)
    if not verify_pair(gad, pair.x, pair.y):
        raise CertificateError("Pair built from a t-edge subgraph violates the witness inequality")
    return pair


def pair_to_subgraph(p: CanonicalPair) -> FrozenSet[int]:
    """Vertex set of G_Y, of size (|X| - t) / n."""
    check_canonical(p)
    vertices = p.vertices
    gad = p.gadget
    if len(vertices) * gad.n + gad.t != len(p.x):
        raise CertificateError(f"|X| = {len(p.x)} differs from n * |G_Y| + t")
    return vertices


def _pick_t_edges(edges: List[Edge], t: int) -> List[Edge]:
    # greedy: fewest new vertices first, then edge order
    chosen: List[Edge] = []
    covered = set()
    remaining = sorted(edges)
    while len(chosen) < t:
        best = min(remaining, key=lambda e: (len(set(e) - covered), e))
        remaining.remove(best)
        chosen.append(best)
        covered.update(best)
    return chosen


def canonicalize(gad: TEdgeGadget, x: Iterable[int]) -> CanonicalPair:
    """
    Turn a feasible removal set into a canonical pair no larger than it.

    A Hall witness Y of H - X gives |X| >= n * |V(G_Y)| + t. Keeping only t of the edges
    in Y (the shrink step for |Y| > t) yields a canonical pair whose size n * |V| + t
    cannot exceed that bound.

    Raises:
        InfeasibleSolutionError: r(A \\ X) > r(A) - t
    """
    x = gad.check_a(x)
    bound = gad.full_rank - gad.t
    rank_after = gad.host.rank(x)
    if rank_after > bound:
        raise InfeasibleSolutionError(len(x), rank_after, bound)
    witness = deficiency_witness(gad.graph.without_vertices(x), gad.t)
    if witness is None:
        raise CertificateError(f"Feasible removal set of size {len(x)} has no Hall witness")
    edges = _pick_t_edges(list(gad.edges_of(witness)), gad.t)
    if len(witness) > gad.t:
        logger.debug(f"Shrinking witness from {len(witness)} to t={gad.t} edges")
    pair = _pair_from_edges(gad, edges)
    if pair.size > len(x) or not verify_pair(gad, pair.x, pair.y):
        raise CertificateError(f"Canonical pair of size {pair.size} does not improve on |X| = {len(x)}")
    return pair
