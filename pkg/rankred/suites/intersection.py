from itertools import combinations
from typing import Iterator, Tuple

from rankred.graphs.base import BipartiteGraph, Matching
from rankred.graphs.generators import random_bipartite
from rankred.graphs.matching import matching_number
from rankred.matroids.base import MatroidModel
from rankred.matroids.intersection import edge_incidence_matroids, intersection_max_common, intersection_rank
from rankred.matroids.partition import PartitionModel
from rankred.suites.base import AcceptanceSuite
from rankred.utils.constants import (
    INTERSECTION_SUITE_EXHAUSTIVE_EDGES,
    INTERSECTION_SUITE_INSTANCES,
    INTERSECTION_SUITE_MAX_EDGES,
)
from rankred.utils.io import compact_graph

_RANDOM_PARTITION_ELEMENTS = 6

Instance = Tuple[BipartiteGraph, PartitionModel, PartitionModel]


def max_common_exhaustive(o1: MatroidModel, o2: MatroidModel) -> int:
    """Size of the largest common independent set, by enumeration from the top."""
    o1, o2 = o1.as_oracle(), o2.as_oracle()
    for size in range(o1.ground_size, -1, -1):
        for subset in combinations(range(o1.ground_size), size):
            if o1.is_independent(subset) and o2.is_independent(subset):
                return size
    return 0


class IntersectionSuite(AcceptanceSuite):
    """
    Matroid intersection on the two edge-incidence partition matroids of random bipartite
    graphs (at most 12 edges) must find mu(G), and match exhaustive search on at most 8 edges.
    Each instance also carries a random pair of partition matroids on 6 elements.
    """

    name = "intersection"
    description = "matroid intersection vs maximum matching and exhaustive search"
    properties = (
        "matching-number",
        "exhaustive",
        "self-intersection",
        "rank-after-removal",
        "random-partition-pairs",
    )

    def _random_partition(self) -> PartitionModel:
        labels = self.rng.integers(0, 3, size=_RANDOM_PARTITION_ELEMENTS)
        blocks = []
        for label in sorted(set(int(x) for x in labels)):
            elements = [i for i, x in enumerate(labels) if x == label]
            blocks.append((elements, int(self.rng.integers(0, len(elements) + 1))))
        return PartitionModel(blocks)

    def generate(self) -> Iterator[Instance]:
        produced = 0
        while produced < INTERSECTION_SUITE_INSTANCES:
            n_a = int(self.rng.integers(1, 7))
            n_b = int(self.rng.integers(1, 7))
            g = random_bipartite(n_a, n_b, float(self.rng.uniform(0.2, 0.7)), self.rng)
            if 0 < g.size <= INTERSECTION_SUITE_MAX_EDGES:
                produced += 1
                yield g, self._random_partition(), self._random_partition()

    def describe(self, instance: Instance) -> str:
        g, p1, p2 = instance
        return f"{compact_graph(g)} pair=({p1!r}, {p2!r})"

    def check(self, instance: Instance):
        g, p1, p2 = instance
        m_a, m_b, edges = edge_incidence_matroids(g)
        common = self.compute("matching-number", instance, lambda: intersection_max_common(m_a, m_b))
        if common is not None:
            self.expect(
                "matching-number",
                instance,
                lambda: len(common) == matching_number(g)
                and Matching(frozenset(edges[i] for i in common)).is_matching_of(g),
            )
            if g.size <= INTERSECTION_SUITE_EXHAUSTIVE_EDGES:
                self.expect("exhaustive", instance, lambda: len(common) == max_common_exhaustive(m_a, m_b))

        self.expect("self-intersection", instance, lambda: len(intersection_max_common(m_a, m_a)) == m_a.full_rank)
        self.expect(
            "rank-after-removal",
            instance,
            lambda: intersection_rank(m_a, m_b, [0]) == matching_number(g.without_edges([edges[0]])),
        )
        self.expect(
            "random-partition-pairs",
            instance,
            lambda: len(intersection_max_common(p1, p2)) == max_common_exhaustive(p1, p2),
        )
