from typing import Iterator

from rankred.graphs.base import BipartiteGraph
from rankred.graphs.generators import random_bipartite
from rankred.graphs.matching import deficiency_witness, konig_cover, matching_number, max_matching
from rankred.reductions.konig import cover_to_edges, coverage, edges_to_cover
from rankred.solvers.enumeration import matching_reduction_exact, mvc_exact
from rankred.suites.base import AcceptanceSuite
from rankred.utils.constants import KONIG_SUITE_INSTANCES, KONIG_SUITE_MAX_EDGES, KONIG_SUITE_MAX_VERTICES
from rankred.utils.io import compact_graph


class KonigSuite(AcceptanceSuite):
    """
    Random bipartite graphs with at most 10 vertices and 12 edges. Checks König's equality,
    Hall deficiency witnesses for every t, and the exhaustive equivalence
    min |F| = ||G|| - max c(X) over |X| = mu - t between matching reduction and
    partial vertex cover, together with the certificate round trip.
    """

    name = "konig"
    description = "König covers, Hall witnesses and the matching / partial vertex cover bridge"
    properties = ("konig-equality", "deficiency-witness", "bridge", "round-trip")

    def generate(self) -> Iterator[BipartiteGraph]:
        produced = 0
        while produced < KONIG_SUITE_INSTANCES:
            n_a = int(self.rng.integers(1, KONIG_SUITE_MAX_VERTICES))
            n_b = int(self.rng.integers(1, KONIG_SUITE_MAX_VERTICES - n_a + 1))
            g = random_bipartite(n_a, n_b, float(self.rng.uniform(0.2, 0.7)), self.rng)
            if 0 < g.size <= KONIG_SUITE_MAX_EDGES:
                produced += 1
                yield g

    def describe(self, instance: BipartiteGraph) -> str:
        return compact_graph(instance)

    def check(self, g: BipartiteGraph):
        m = max_matching(g)
        mu = m.size

        def konig_equality() -> bool:
            cover = konig_cover(g, m)
            return len(cover) == mu and coverage(g, cover) == g.size

        self.expect("konig-equality", g, konig_equality)

        for t in range(1, len(g.side_b) + 1):

            def witness_ok(t=t) -> bool:
                witness = deficiency_witness(g, t)
                if witness is None:
                    return len(g.side_b) - mu < t
                return len(g.neighbourhood(witness)) <= len(witness) - t

            self.expect("deficiency-witness", g, witness_ok)

        plain = g.as_graph()
        for t in range(1, mu + 1):
            f = self.compute("bridge", g, lambda: matching_reduction_exact(g, t, self.cap))
            if f is None:
                continue
            self.expect("bridge", g, lambda: len(f) == g.size - mvc_exact(plain, mu - t, self.cap)[1])

            def round_trip(t=t, f=f) -> bool:
                x = edges_to_cover(g, f, t)
                f_back = cover_to_edges(g, x)
                return (
                    len(x) <= mu - t
                    and len(f_back) <= len(f)
                    and matching_number(g.without_edges(f_back)) <= mu - t
                )

            self.expect("round-trip", g, round_trip)
