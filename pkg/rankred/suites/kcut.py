from typing import Iterator, Tuple

from rankred.graphs.base import Graph
from rankred.graphs.generators import nonisomorphic_graphs
from rankred.matroids.graphical import GraphicalModel
from rankred.solvers.enumeration import brute_force_rankred, min_kcut_exact
from rankred.suites.base import AcceptanceSuite
from rankred.utils.constants import KCUT_SUITE_MAX_ORDER
from rankred.utils.io import compact_graph


class KCutSuite(AcceptanceSuite):
    """Rank reduction on graphical matroids is min k-cut, for every graph class with n <= 5."""

    name = "kcut"
    description = "graphical matroid rank reduction vs min k-cut on all small graphs"
    properties = ("kcut-equality",)

    def generate(self) -> Iterator[Tuple[Graph, int]]:
        for n in range(1, KCUT_SUITE_MAX_ORDER + 1):
            for g in nonisomorphic_graphs(n):
                for k in range(1, GraphicalModel(g).full_rank + 1):
                    yield g, k

    def describe(self, instance: Tuple[Graph, int]) -> str:
        g, k = instance
        return f"{compact_graph(g)} k={k}"

    def check(self, instance: Tuple[Graph, int]):
        g, k = instance
        self.expect(
            "kcut-equality",
            instance,
            lambda: brute_force_rankred(GraphicalModel(g), k, self.cap).size == len(min_kcut_exact(g, k, self.cap)),
        )
