"""
Maximum common independent set of two matroids given by independence oracles,
by shortest augmenting paths in the exchange graph.
"""

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from loguru import logger

from rankred.graphs.base import BipartiteGraph, Edge
from rankred.matroids.base import IndependenceOracle, MatroidModel
from rankred.matroids.partition import PartitionModel
from rankred.utils.exceptions import InvalidParameterError, MatroidOracleError


def _exchange_path(o1: IndependenceOracle, o2: IndependenceOracle, current: FrozenSet[int]) -> Optional[List[int]]:
    """
    Shortest path from X1 = {x : I + x in I1} to X2 = {x : I + x in I2} in the exchange graph,
    where y -> x when I - y + x is in I1 and x -> y when I - y + x is in I2.
    """
    outside = [e for e in range(o1.ground_size) if e not in current]
    inside = sorted(current)
    sources = [x for x in outside if o1.is_independent(current | {x})]
    sinks = {x for x in outside if o2.is_independent(current | {x})}
    if not sources or not sinks:
        return None

    successors: Dict[int, List[int]] = {e: [] for e in range(o1.ground_size)}
    for y in inside:
        without_y = current - {y}
        for x in outside:
            swapped = without_y | {x}
            if o1.is_independent(swapped):
                successors[y].append(x)
            if o2.is_independent(swapped):
                successors[x].append(y)

    parent: Dict[int, Optional[int]] = {x: None for x in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        if v in sinks:
            path = [v]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in successors[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def intersection_max_common(o1: MatroidModel, o2: MatroidModel) -> FrozenSet[int]:
    """
    Maximum-cardinality set independent in both matroids.

    Models are converted with `as_oracle`, so elements are reported as indices into the
    common ground set order. Every augmentation is re-checked against both oracles;
    an inconsistent oracle (not a matroid) raises `MatroidOracleError`.
    """
    o1, o2 = o1.as_oracle(), o2.as_oracle()
    if o1.ground_size != o2.ground_size:
        raise InvalidParameterError(
            "ground_size", (o1.ground_size, o2.ground_size), "both matroids must share the ground set"
        )
    for oracle in (o1, o2):
        if not oracle.is_independent(()):
            raise MatroidOracleError(oracle.name, "the empty set is dependent")

    current: FrozenSet[int] = frozenset()
    while True:
        path = _exchange_path(o1, o2, current)
        if path is None:
            break
        augmented = current.symmetric_difference(path)
        if len(augmented) != len(current) + 1:
            raise MatroidOracleError(o1.name, f"augmenting path {path} has the wrong parity")
        for oracle in (o1, o2):
            if not oracle.is_independent(augmented):
                raise MatroidOracleError(
                    oracle.name, f"augmenting {sorted(current)} along {path} produced a dependent set"
                )
        logger.debug(f"Intersection augmented to size {len(augmented)} along a path of length {len(path)}")
        current = augmented
    return current


def intersection_rank(o1: MatroidModel, o2: MatroidModel, removed: Iterable[int] = ()) -> int:
    """Rank of M1 & M2 after deleting the elements (indices) in `removed`."""
    removed = list(removed)
    return len(intersection_max_common(o1.as_oracle().restrict(removed), o2.as_oracle().restrict(removed)))


def edge_incidence_matroids(g: BipartiteGraph) -> Tuple[PartitionModel, PartitionModel, Tuple[Edge, ...]]:
    """
    The two partition matroids on the edges of a bipartite graph (cap 1 on every star E(v),
    one matroid per side) whose common independent sets are exactly the matchings.

    Returns:
        (side A matroid, side B matroid, edge list), element i of both matroids being edge i.
    """
    edges = g.sorted_edges
    stars_a: Dict[int, Set[int]] = {}
    stars_b: Dict[int, Set[int]] = {}
    for i, (a, b) in enumerate(edges):
        stars_a.setdefault(a, set()).add(i)
        stars_b.setdefault(b, set()).add(i)
    m_a = PartitionModel([(stars_a[a], 1) for a in sorted(stars_a)])
    m_b = PartitionModel([(stars_b[b], 1) for b in sorted(stars_b)])
    return m_a, m_b, edges
