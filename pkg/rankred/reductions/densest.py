"""
Densest k-subgraph from any min t-edge subgraph strategy.

The strategy is run for t = 1..m. The last certificate H_t' with |H_t'| <= k * f is
split into parts of floor(k/2) vertices, and the densest pair of parts is padded to k
vertices. With an f-approximate strategy the result induces at least z* / (9 f^2) edges.
"""

from typing import Callable, Dict, FrozenSet, Iterable, List, Optional

from loguru import logger

from rankred.graphs.base import Graph
from rankred.solvers.enumeration import min_t_edge_exact
from rankred.utils.exceptions import InvalidParameterError, StrategyFaultError

Strategy = Callable[[Graph, int], Iterable[int]]


def exact_strategy(cap: Optional[int] = None) -> Strategy:
    """Min t-edge strategy backed by the exhaustive solver (approximation factor 1)."""

    def strategy(g: Graph, t: int) -> FrozenSet[int]:
        return min_t_edge_exact(g, t, cap)

    return strategy


def inflated_strategy(base: Strategy, factor: int) -> Strategy:
    """
    Wrap `base` so that its certificates are padded with the lowest outside vertices
    up to `factor` times their size. Turns an exact strategy into a factor-approximate one.
    """
    if factor < 1:
        raise InvalidParameterError("factor", factor, "must be at least 1")

    def strategy(g: Graph, t: int) -> FrozenSet[int]:
        found = frozenset(base(g, t))
        target = min(g.order, factor * len(found))
        return _pad(found, (), g, target)

    return strategy


def _pad(core: Iterable[int], preferred: Iterable[int], g: Graph, size: int) -> FrozenSet[int]:
    chosen = set(core)
    for v in list(sorted(preferred)) + list(g.vertices):
        if len(chosen) >= size:
            break
        chosen.add(v)
    return frozenset(chosen)


def _collect_certificates(g: Graph, strategy: Strategy) -> Dict[int, FrozenSet[int]]:
    certificates = {}
    for t in range(1, g.size + 1):
        found = frozenset(int(v) for v in strategy(g, t))
        outside = [v for v in found if not 0 <= v < g.order]
        if outside:
            raise StrategyFaultError(t, len(found), 0, f"vertices {sorted(outside)} are not in the graph")
        edges = g.induced_edge_count(found)
        if edges < t:
            raise StrategyFaultError(t, len(found), edges)
        certificates[t] = found
    return certificates


def monotone_repair(certificates: Dict[int, FrozenSet[int]]) -> Dict[int, FrozenSet[int]]:
    """
    Enforce |H_i| <= |H_{i+1}| by a backward pass replacing H_i with H_{i+1} when larger.
    A certificate for i + 1 edges is also one for i edges.
    """
    repaired = dict(certificates)
    for i in range(len(repaired) - 1, 0, -1):
        if len(repaired[i]) > len(repaired[i + 1]):
            repaired[i] = repaired[i + 1]
    return repaired


def _split(vertices: FrozenSet[int], part_size: int) -> List[FrozenSet[int]]:
    ordered = sorted(vertices)
    return [frozenset(ordered[i : i + part_size]) for i in range(0, len(ordered), part_size)]


def dks_harness(g: Graph, k: int, strategy: Strategy, approx_factor: int = 1) -> FrozenSet[int]:
    """
    k vertices of g found by running `strategy` for every t and combining the certificates.

    Parameters:
        g : input graph
        k : size of the subgraph, 2 <= k <= |G|
        strategy : callable (graph, t) -> vertex set inducing at least t edges
        approx_factor : integer f such that the strategy is within f of the optimum

    Raises:
        StrategyFaultError: a certificate induces fewer than t edges
    """
    if not 2 <= k <= g.order:
        raise InvalidParameterError("k", k, f"must lie in 2..|G| = 2..{g.order}")
    if approx_factor < 1:
        raise InvalidParameterError("approx_factor", approx_factor, "must be at least 1")
    if g.size == 0:
        return frozenset(range(k))

    certificates = monotone_repair(_collect_certificates(g, strategy))
    threshold = k * approx_factor
    qualifying = [t for t, h in certificates.items() if len(h) <= threshold]
    if qualifying:
        t_prime = max(qualifying)
    else:
        t_prime = 1
        logger.warning(f"No certificate has at most {threshold} vertices, falling back to t'=1")
    h = certificates[t_prime]
    logger.debug(f"Harness threshold {threshold}: t'={t_prime}, |H_t'|={len(h)}")

    if len(h) <= k:
        return _pad(h, (), g, k)

    parts = _split(h, k // 2)
    best, best_count = None, -1
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            count = g.induced_edge_count(parts[i] | parts[j])
            if count > best_count:
                best, best_count = (i, j), count
    i, j = best
    logger.debug(f"Best pair of {len(parts)} parts is ({i}, {j}) with {best_count} edges")
    return _pad(parts[i] | parts[j], h, g, k)
