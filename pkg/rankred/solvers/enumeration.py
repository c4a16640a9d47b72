"""
Exhaustive solvers used as oracles. Every function refuses instances above the
enumeration cap (RANKRED_CAP, default 16) instead of running for hours.
"""

from itertools import combinations
from typing import FrozenSet, Iterator, Optional, Tuple

from loguru import logger

from rankred.graphs.base import BipartiteGraph, Edge, Graph
from rankred.graphs.matching import matching_number
from rankred.matroids.base import MatroidModel
from rankred.matroids.graphical import UnionFind, component_count
from rankred.matroids.transversal import TransversalModel
from rankred.solvers.base import RankReductionInstance, Solution
from rankred.utils.config import resolve_cap
from rankred.utils.exceptions import (
    EnumerationCapExceededError,
    InfeasibleInstanceError,
    InvalidParameterError,
)


def check_cap(what: str, size: int, cap: Optional[int] = None) -> int:
    cap = resolve_cap(cap)
    if size > cap:
        raise EnumerationCapExceededError(what, size, cap)
    return cap


def _vertex_subsets(n: int, size: int) -> Iterator[Tuple[int, ...]]:
    return combinations(range(n), size)


def _mask(vertices: Tuple[int, ...]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def brute_force_rankred(o: MatroidModel, k: int, cap: Optional[int] = None) -> Solution:
    """
    Optimal rank reduction by enumerating removal sets by increasing size,
    in lexicographic order of the ground set within each size.
    """
    instance = RankReductionInstance(o, k)
    ground = o.ground_set
    check_cap(f"Ground set of {o!r}", len(ground), cap)
    # one removal lowers the rank by at most one
    for size in range(k, len(ground) + 1):
        for removed in combinations(ground, size):
            if o.rank(removed) <= instance.bound:
                logger.debug(f"Brute force on {o!r}, k={k}: optimum {size}")
                return Solution.certify(instance, removed)
    raise InfeasibleInstanceError(f"No removal set of {o!r} reduces the rank by {k}")


def transversal_rankred_exact(m: TransversalModel, k: int, cap: Optional[int] = None) -> Solution:
    """
    Exact transversal rank reduction through Hall witnesses, enumerating subsets Y of B.

    With deficiency delta = |B| - mu, removing X drops the rank by k exactly when some Y
    has |N(Y) \\ X| <= |Y| - delta - k. For a fixed Y the cheapest X deletes
    max(0, |N(Y)| - |Y| + delta + k) elements of N(Y), so the optimum is the minimum of
    that quantity over |Y| >= delta + k. Scales with 2^|B| instead of 2^|A|.
    """
    instance = RankReductionInstance(m, k)
    g = m.model
    side_b = g.side_b
    check_cap(f"Side B of {m!r}", len(side_b), cap)
    required = len(side_b) - instance.full_rank + k
    neighbours = [g.adjacency[b] for b in side_b]
    best: Optional[Tuple[int, Tuple[int, ...]]] = None
    for size in range(required, len(side_b) + 1):
        for ys in combinations(range(len(side_b)), size):
            hood = set()
            for j in ys:
                hood.update(neighbours[j])
            cost = max(0, len(hood) - size + required)
            if best is None or cost < best[0]:
                best = (cost, tuple(sorted(hood)))
    cost, hood = best
    removed = hood[:cost]
    logger.debug(f"Witness enumeration on {m!r}, k={k}: optimum {cost}")
    return Solution.certify(instance, removed)


def min_t_edge_exact(g: Graph, t: int, cap: Optional[int] = None) -> FrozenSet[int]:
    """
    Fewest vertices inducing at least t edges. Ties go to the lexicographically first subset.
    The size of the result is j*.
    """
    if t < 1:
        raise InvalidParameterError("t", t, "must be at least 1")
    if t > g.size:
        raise InfeasibleInstanceError(f"{g!r} has fewer than t={t} edges")
    check_cap(f"Vertex set of {g!r}", g.order, cap)
    for size in range(2, g.order + 1):
        for vertices in _vertex_subsets(g.order, size):
            if g.induced_edge_count_mask(_mask(vertices)) >= t:
                return frozenset(vertices)
    raise InfeasibleInstanceError(f"{g!r} has fewer than t={t} edges")


def t_edge_certificate(g: Graph, vertices: FrozenSet[int], t: int) -> FrozenSet[Edge]:
    """Exactly t induced edges of `vertices` (the lowest ones), certifying a t-edge subgraph."""
    induced = sorted(g.induced_edges(vertices))
    if len(induced) < t:
        raise InvalidParameterError("vertices", sorted(vertices), f"induce {len(induced)} < {t} edges")
    return frozenset(induced[:t])


def densest_k_exact(g: Graph, k: int, cap: Optional[int] = None) -> FrozenSet[int]:
    """k vertices inducing the most edges (z*). Ties go to the lexicographically first subset."""
    if not 0 <= k <= g.order:
        raise InvalidParameterError("k", k, f"must lie in 0..|G| = 0..{g.order}")
    check_cap(f"Vertex set of {g!r}", g.order, cap)
    best, best_count = (), -1
    for vertices in _vertex_subsets(g.order, k):
        count = g.induced_edge_count_mask(_mask(vertices))
        if count > best_count:
            best, best_count = vertices, count
    return frozenset(best)


def mvc_exact(g: Graph, k: int, cap: Optional[int] = None) -> Tuple[FrozenSet[int], int]:
    """
    Maximum partial vertex cover: k vertices covering the most edges.

    Returns:
        (vertex set, number of covered edges)
    """
    if not 0 <= k <= g.order:
        raise InvalidParameterError("k", k, f"must lie in 0..|G| = 0..{g.order}")
    check_cap(f"Vertex set of {g!r}", g.order, cap)
    everything = (1 << g.order) - 1
    best, best_covered = (), -1
    for vertices in _vertex_subsets(g.order, k):
        covered = g.size - g.induced_edge_count_mask(everything ^ _mask(vertices))
        if covered > best_covered:
            best, best_covered = vertices, covered
    return frozenset(best), best_covered


def min_kcut_exact(g: Graph, k: int, cap: Optional[int] = None) -> FrozenSet[Edge]:
    """
    Fewest edges whose removal increases the number of connected components by at least k.
    """
    if k < 1:
        raise InvalidParameterError("k", k, "must be at least 1")
    base = component_count(g)
    if k > g.order - base:
        raise InfeasibleInstanceError(f"{g!r} has {base} components, it cannot gain {k} more")
    check_cap(f"Edge set of {g!r}", g.size, cap)
    edges = g.sorted_edges
    for size in range(k, len(edges) + 1):
        for removed in combinations(range(len(edges)), size):
            dropped = set(removed)
            uf = UnionFind(g.order)
            for j, (u, v) in enumerate(edges):
                if j not in dropped:
                    uf.union(u, v)
            if uf.components - base >= k:
                return frozenset(edges[j] for j in removed)
    raise InfeasibleInstanceError(f"No edge set of {g!r} separates {k} more components")


def matching_reduction_exact(g: BipartiteGraph, t: int, cap: Optional[int] = None) -> FrozenSet[Edge]:
    """
    Fewest edges F with mu(g - F) <= mu(g) - t, i.e. rank reduction on the intersection
    of the two edge-incidence partition matroids.
    """
    mu = matching_number(g)
    if not 0 <= t <= mu:
        raise InvalidParameterError("t", t, f"must lie in 0..mu = 0..{mu}")
    check_cap(f"Edge set of {g!r}", g.size, cap)
    edges = g.sorted_edges
    for size in range(t, len(edges) + 1):
        for removed in combinations(edges, size):
            if matching_number(g.without_edges(removed)) <= mu - t:
                return frozenset(removed)
    raise InfeasibleInstanceError(f"No edge set of {g!r} lowers the matching number by {t}")


def find_clique(h: Graph, ell: int, cap: Optional[int] = None) -> Optional[FrozenSet[int]]:
    """
    Lexicographically first ell-clique of h, or None. Only vertices of degree >= ell - 1
    are candidates, and the cap applies to their number.
    """
    if ell < 0:
        raise InvalidParameterError("ell", ell, "must be non-negative")
    candidates = [v for v in h.vertices if h.degree(v) >= ell - 1]
    check_cap(f"Clique candidates of {h!r}", len(candidates), cap)
    needed = ell * (ell - 1) // 2
    for vertices in combinations(candidates, ell):
        if h.induced_edge_count_mask(_mask(vertices)) == needed:
            return frozenset(vertices)
    return None
