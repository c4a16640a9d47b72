from functools import lru_cache
from typing import FrozenSet, Iterator, Tuple

from rankred.graphs.base import Graph
from rankred.graphs.generators import erdos_renyi
from rankred.reductions.densest import dks_harness, inflated_strategy
from rankred.solvers.enumeration import densest_k_exact, min_t_edge_exact
from rankred.suites.base import AcceptanceSuite
from rankred.utils.constants import (
    DKS_GUARANTEE_DENOMINATOR,
    DKS_SUITE_INFLATED_FACTOR,
    DKS_SUITE_INSTANCES,
    DKS_SUITE_MAX_ORDER,
)
from rankred.utils.io import compact_graph


class DensestSuite(AcceptanceSuite):
    """
    Random G(n, p) graphs with n <= 10 (p drawn uniformly in [0.2, 0.8]) and every k.
    The harness must reach z* / 9 edges with the exact strategy and z* / (9 f^2) with a
    strategy inflated by a factor f = 2.
    """

    name = "dks"
    description = "densest k-subgraph harness on top of min t-edge strategies"
    properties = ("k-vertices", "exact-strategy-bound", "inflated-strategy-bound")

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        cap = self.cap

        @lru_cache(maxsize=None)
        def exact(g: Graph, t: int) -> FrozenSet[int]:
            return min_t_edge_exact(g, t, cap)

        self._exact = exact
        self._inflated = inflated_strategy(exact, DKS_SUITE_INFLATED_FACTOR)

    def generate(self) -> Iterator[Tuple[Graph, float]]:
        for _ in range(DKS_SUITE_INSTANCES):
            n = int(self.rng.integers(2, DKS_SUITE_MAX_ORDER + 1))
            p = round(float(self.rng.uniform(0.2, 0.8)), 3)
            yield erdos_renyi(n, p, self.rng), p

    def describe(self, instance: Tuple[Graph, float]) -> str:
        g, p = instance
        return f"{compact_graph(g)} p={p}"

    def check(self, instance: Tuple[Graph, float]):
        g, _ = instance
        f = DKS_SUITE_INFLATED_FACTOR
        for k in range(2, g.order + 1):
            z_star = g.induced_edge_count(densest_k_exact(g, k, self.cap))
            found = self.compute("k-vertices", instance, lambda: dks_harness(g, k, self._exact))
            if found is None:
                continue
            self.expect("k-vertices", instance, lambda: len(found) == k and all(0 <= v < g.order for v in found))
            self.expect(
                "exact-strategy-bound",
                instance,
                lambda: DKS_GUARANTEE_DENOMINATOR * g.induced_edge_count(found) >= z_star,
            )
            self.expect(
                "inflated-strategy-bound",
                instance,
                lambda: DKS_GUARANTEE_DENOMINATOR
                * f**2
                * g.induced_edge_count(dks_harness(g, k, self._inflated, approx_factor=f))
                >= z_star,
            )
