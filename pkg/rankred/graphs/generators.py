from functools import lru_cache
from itertools import combinations, permutations
from typing import Tuple

import numpy as np

from rankred.graphs.base import BipartiteGraph, Edge, Graph, normalize_edge
from rankred.utils.exceptions import InvalidParameterError


def _check_order(n: int, name: str = "n"):
    if n < 0:
        raise InvalidParameterError(name, n, "must be non-negative")


def complete_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, frozenset(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("n", n, "a cycle needs at least 3 vertices")
    return Graph(n, frozenset(normalize_edge(i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    _check_order(n)
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n)


def complete_bipartite(n_a: int, n_b: int) -> BipartiteGraph:
    return BipartiteGraph.from_parts(n_a, n_b, [(i, j) for i in range(n_a) for j in range(n_b)])


def erdos_renyi(n: int, p: float, rng: np.random.Generator) -> Graph:
    """
    G(n, p) random graph. Pairs are drawn in lexicographic order from `rng`,
    so a seeded generator reproduces the same graph.
    """
    _check_order(n)
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError("p", p, "must be a probability")
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph(n, frozenset(e for e, x in zip(pairs, draws) if x < p))


def random_bipartite(n_a: int, n_b: int, p: float, rng: np.random.Generator) -> BipartiteGraph:
    """Random bipartite graph with A = 0..n_a-1, B = n_a..n_a+n_b-1, each edge kept with probability p."""
    _check_order(n_a, "n_a")
    _check_order(n_b, "n_b")
    pairs = [(i, j) for i in range(n_a) for j in range(n_b)]
    draws = rng.random(len(pairs))
    return BipartiteGraph.from_parts(n_a, n_b, [e for e, x in zip(pairs, draws) if x < p])


def random_permutation(n: int, rng: np.random.Generator) -> Tuple[int, ...]:
    return tuple(int(v) for v in rng.permutation(n))


def _canonical_form(n: int, edges: Tuple[Edge, ...]) -> Tuple[Edge, ...]:
    best = None
    for perm in permutations(range(n)):
        relabelled = tuple(sorted(normalize_edge(perm[u], perm[v]) for u, v in edges))
        if best is None or relabelled < best:
            best = relabelled
    return best


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> Tuple[Graph, ...]:
    """
    One representative per isomorphism class of graphs on n vertices.

    The representative is the lexicographically smallest relabelled edge list.
    Classes are ordered by edge count, then by that edge list. Limited to n <= 5.
    """
    _check_order(n)
    if n > 5:
        raise InvalidParameterError("n", n, "exhaustive isomorphism sweeps are limited to n <= 5")
    pairs = list(combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        edges = tuple(e for i, e in enumerate(pairs) if mask >> i & 1)
        forms.add(_canonical_form(n, edges))
    ordered = sorted(forms, key=lambda f: (len(f), f))
    return tuple(Graph(n, frozenset(f)) for f in ordered)
