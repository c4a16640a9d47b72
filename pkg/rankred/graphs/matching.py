"""
Maximum bipartite matching (Hopcroft-Karp), König vertex covers and Hall deficiency witnesses.
"""

from collections import deque
from typing import FrozenSet, List, Optional, Tuple

from loguru import logger

from rankred.graphs.base import BipartiteGraph, Matching
from rankred.utils.exceptions import (
    CertificateError,
    InputError,
    InvalidParameterError,
    NotMaximumMatchingError,
)

_NIL = -1


class HopcroftKarp:
    """
    Hopcroft-Karp maximum-cardinality matching in O(E sqrt(V)).

    A-vertices and B-vertices are indexed by their position in `side_a` / `side_b`.
    Neighbours are scanned in increasing vertex order so the matching returned
    for a given graph is always the same.
    """

    def __init__(self, graph: BipartiteGraph):
        self.graph = graph
        b_index = {b: j for j, b in enumerate(graph.side_b)}
        self._adj: List[Tuple[int, ...]] = [tuple(b_index[b] for b in graph.adjacency[a]) for a in graph.side_a]
        self._inf = len(graph.side_a) + 1
        self.mate_a: List[int] = [_NIL] * len(graph.side_a)
        self.mate_b: List[int] = [_NIL] * len(graph.side_b)
        self.dist: List[int] = [0] * len(graph.side_a)

    def _layer(self) -> int:
        """
        Breadth-first search from the unmatched A-vertices.
        Returns the length of the shortest augmenting paths, or `inf` if none exists.
        """
        queue = deque()
        for u in range(len(self._adj)):
            if self.mate_a[u] == _NIL:
                self.dist[u] = 0
                queue.append(u)
            else:
                self.dist[u] = self._inf
        dist_nil = self._inf
        while queue:
            u = queue.popleft()
            if self.dist[u] >= dist_nil:
                continue
            for v in self._adj[u]:
                w = self.mate_b[v]
                if w == _NIL:
                    if dist_nil == self._inf:
                        dist_nil = self.dist[u] + 1
                elif self.dist[w] == self._inf:
                    self.dist[w] = self.dist[u] + 1
                    queue.append(w)
        return dist_nil

    def _augment_from(self, root: int, dist_nil: int) -> bool:
        # iterative depth-first search along the BFS layers
        stack = [(root, iter(self._adj[root]))]
        path: List[Tuple[int, int]] = []
        while stack:
            u, neighbours = stack[-1]
            advanced = False
            for v in neighbours:
                w = self.mate_b[v]
                if w == _NIL:
                    if dist_nil == self.dist[u] + 1:
                        path.append((u, v))
                        for pu, pv in path:
                            self.mate_a[pu] = pv
                            self.mate_b[pv] = pu
                        return True
                elif self.dist[w] == self.dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(self._adj[w])))
                    advanced = True
                    break
            if not advanced:
                self.dist[u] = self._inf
                stack.pop()
                if path:
                    path.pop()
        return False

    def __call__(self) -> Matching:
        self.mate_a = [_NIL] * len(self.graph.side_a)
        self.mate_b = [_NIL] * len(self.graph.side_b)
        phases = 0
        while True:
            dist_nil = self._layer()
            if dist_nil == self._inf:
                break
            phases += 1
            for u in range(len(self._adj)):
                if self.mate_a[u] == _NIL:
                    self._augment_from(u, dist_nil)
        side_a, side_b = self.graph.side_a, self.graph.side_b
        pairs = frozenset((side_a[u], side_b[v]) for u, v in enumerate(self.mate_a) if v != _NIL)
        logger.trace(f"Hopcroft-Karp finished after {phases} phases with a matching of size {len(pairs)}")
        return Matching(pairs)


def max_matching(g: BipartiteGraph) -> Matching:
    """
    Maximum-cardinality matching of `g`. The empty graph gets the empty matching.
    """
    return HopcroftKarp(g)()


def matching_number(g: BipartiteGraph) -> int:
    """mu(g)"""
    return max_matching(g).size


def _check_matching(g: BipartiteGraph, m: Matching):
    if not m.is_matching_of(g):
        stray = sorted(p for p in m.pairs if p not in g.edges)
        raise InputError(f"Pairs {stray} of the matching are not edges of {g!r}")


def alternating_reach(g: BipartiteGraph, m: Matching, roots_on_a: bool) -> FrozenSet[int]:
    """
    Vertices reachable from the unmatched vertices of one side by alternating paths
    (non-matching edges away from the root side, matching edges back).
    Raises `NotMaximumMatchingError` when an augmenting path shows up.
    """
    roots = g.side_a if roots_on_a else g.side_b
    mate = m.mate
    seen = set(v for v in roots if v not in mate)
    queue = deque(sorted(seen))
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w in seen:
                continue
            seen.add(w)
            partner = mate.get(w)
            if partner is None:
                raise NotMaximumMatchingError(m.size, w)
            if partner not in seen:
                seen.add(partner)
                queue.append(partner)
    return frozenset(seen)


def konig_cover(g: BipartiteGraph, m: Matching) -> FrozenSet[int]:
    """
    Minimum vertex cover of `g` built from the maximum matching `m` (König's theorem).

    With Z the vertices reached by alternating paths from unmatched A-vertices,
    the cover is (A \\ Z) | (B & Z) and has exactly |m| vertices.
    """
    _check_matching(g, m)
    reached = alternating_reach(g, m, roots_on_a=True)
    side_b = set(g.side_b)
    cover = frozenset(a for a in g.side_a if a not in reached) | frozenset(v for v in reached if v in side_b)
    if len(cover) != m.size or any(a not in cover and b not in cover for a, b in g.edges):
        raise CertificateError(f"König cover of size {len(cover)} does not certify the matching of size {m.size}")
    return cover


def deficiency_witness(g: BipartiteGraph, t: int) -> Optional[FrozenSet[int]]:
    """
    Hall deficiency witness: a set Y of B-vertices with |N(Y)| <= |Y| - t.

    Y exists if and only if mu(g) <= |B| - t. It is extracted by closing the
    unmatched B-vertices of a maximum matching under alternating paths.

    Returns:
        the witness, or None when mu(g) > |B| - t.
    """
    if t < 1:
        raise InvalidParameterError("t", t, "must be at least 1")
    m = max_matching(g)
    if m.size > len(g.side_b) - t:
        return None
    side_b = set(g.side_b)
    witness = frozenset(v for v in alternating_reach(g, m, roots_on_a=False) if v in side_b)
    if len(g.neighbourhood(witness)) > len(witness) - t:
        raise CertificateError(f"Deficiency witness of size {len(witness)} violates |N(Y)| <= |Y| - {t}")
    return witness
