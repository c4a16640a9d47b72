from typing import Iterator, Tuple

from rankred.graphs.base import Graph
from rankred.graphs.generators import nonisomorphic_graphs
from rankred.reductions.tedge import (
    TEdgeGadget,
    build_t_edge_gadget,
    canonicalize,
    pair_to_subgraph,
    subgraph_to_pair,
    verify_pair,
)
from rankred.solvers.base import Solution
from rankred.solvers.enumeration import (
    brute_force_rankred,
    min_t_edge_exact,
    t_edge_certificate,
    transversal_rankred_exact,
)
from rankred.suites.base import AcceptanceSuite
from rankred.utils.constants import TEDGE_SUITE_MAX_ORDER, TEDGE_SUITE_RANDOM_SUBSETS
from rankred.utils.io import compact_graph


class TEdgeIdentitySuite(AcceptanceSuite):
    """
    Every graph class on at most 4 vertices and every t <= m: the optimum of the
    gadget equals n * j* + t, and canonicalization never grows a feasible removal set.

    Gadgets whose side A fits under the cap are solved by brute force as well as by
    witness enumeration; larger ones only by witness enumeration over side B.
    """

    name = "tedge-identity"
    description = "transversal rank reduction vs min t-edge subgraph on all small graphs"
    properties = (
        "identity",
        "exact-solvers-agree",
        "canonical-no-larger",
        "canonical-optimum",
        "subgraph-round-trip",
    )

    def generate(self) -> Iterator[Tuple[Graph, int]]:
        for n in range(2, TEDGE_SUITE_MAX_ORDER + 1):
            for g in nonisomorphic_graphs(n):
                for t in range(1, g.size + 1):
                    yield g, t

    def describe(self, instance: Tuple[Graph, int]) -> str:
        g, t = instance
        return f"{compact_graph(g)} t={t}"

    def _optimum(self, gad: TEdgeGadget) -> Solution:
        return transversal_rankred_exact(gad.host, gad.k, self.cap)

    def _random_feasible(self, gad: TEdgeGadget, base: Solution) -> frozenset:
        side_a = gad.side_a
        keep = self.rng.random(len(side_a)) < 0.3
        return base.removed | frozenset(a for a, chosen in zip(side_a, keep) if chosen)

    def check(self, instance: Tuple[Graph, int]):
        g, t = instance
        gad = build_t_edge_gadget(g, t)
        optimum = self.compute("identity", instance, lambda: self._optimum(gad))
        if optimum is None:
            return
        j_star = min_t_edge_exact(g, t, self.cap)
        self.expect("identity", instance, lambda: optimum.size == g.order * len(j_star) + t)
        if len(gad.side_a) <= self.cap:
            self.expect(
                "exact-solvers-agree",
                instance,
                lambda: brute_force_rankred(gad.host, gad.k, self.cap).size == optimum.size,
            )

        self.expect("canonical-optimum", instance, lambda: canonicalize(gad, optimum.removed).size == optimum.size)
        removal_sets = [optimum.removed, frozenset(gad.side_a)]
        removal_sets += [self._random_feasible(gad, optimum) for _ in range(TEDGE_SUITE_RANDOM_SUBSETS)]
        for x in removal_sets:

            def no_larger(x=x) -> bool:
                pair = canonicalize(gad, x)
                return pair.size <= len(x) and len(pair.y) == t and verify_pair(gad, pair.x, pair.y)

            self.expect("canonical-no-larger", instance, no_larger)

        def round_trip() -> bool:
            pair = subgraph_to_pair(gad, t_edge_certificate(g, j_star, t))
            return pair.size == optimum.size and pair_to_subgraph(pair) <= j_star

        self.expect("subgraph-round-trip", instance, round_trip)
