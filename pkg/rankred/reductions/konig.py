"""
Bridge between lowering the matching number by edge deletion and partial vertex cover
on bipartite graphs: mu(G - F) <= mu(G) - t iff some mu(G) - t vertices cover all edges
outside F.
"""

from typing import FrozenSet, Iterable

from loguru import logger

from rankred.graphs.base import BipartiteGraph, Edge
from rankred.graphs.matching import konig_cover, matching_number, max_matching
from rankred.utils.exceptions import CertificateError, InfeasibleSolutionError


def coverage(g: BipartiteGraph, x: Iterable[int]) -> int:
    """c(X): number of edges with at least one endpoint in X."""
    chosen = g.check_vertices(x)
    return sum(1 for a, b in g.edges if a in chosen or b in chosen)


def cover_to_edges(g: BipartiteGraph, x: Iterable[int]) -> FrozenSet[Edge]:
    """Edges not covered by X. Removing them leaves a graph with mu <= |X|."""
    chosen = g.check_vertices(x)
    uncovered = frozenset(e for e in g.edges if e[0] not in chosen and e[1] not in chosen)
    mu = matching_number(g.without_edges(uncovered))
    if mu > len(chosen):
        raise CertificateError(f"Removing the uncovered edges leaves mu = {mu} > |X| = {len(chosen)}")
    return uncovered


def edges_to_cover(g: BipartiteGraph, f: Iterable[Edge], t: int) -> FrozenSet[int]:
    """
    König cover of g - F, of size mu(g - F) <= mu(g) - t. It covers at least ||g|| - |F| edges of g.

    Raises:
        InfeasibleSolutionError: mu(g - F) > mu(g) - t
    """
    f = g.oriented(f)
    mu = matching_number(g)
    rest = g.without_edges(f)
    m = max_matching(rest)
    if m.size > mu - t:
        raise InfeasibleSolutionError(len(f), m.size, mu - t)
    cover = konig_cover(rest, m)
    covered = coverage(g, cover)
    if covered < g.size - len(f):
        raise CertificateError(f"Cover reaches {covered} < ||g|| - |F| = {g.size - len(f)} edges")
    logger.debug(f"Edge set of size {len(f)} turned into a cover of size {len(cover)} covering {covered} edges")
    return cover
