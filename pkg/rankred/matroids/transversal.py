from typing import FrozenSet, Iterable, Tuple

from rankred.graphs.base import BipartiteGraph
from rankred.graphs.matching import max_matching
from rankred.matroids.base import MatroidModel


class TransversalModel(MatroidModel):
    """
    Transversal matroid on the side A of a bipartite model (A, B): X is independent
    when some matching covers X, so r(X) = mu(G[X | B]).
    """

    def __init__(self, model: BipartiteGraph):
        self.model = model

    @property
    def ground_set(self) -> Tuple[int, ...]:
        return tuple(sorted(self.model.side_a))

    def _rank_after_removal(self, removed: FrozenSet) -> int:
        return max_matching(self.model.without_vertices(removed)).size

    def __repr__(self) -> str:
        return f"TransversalModel(|A|={len(self.model.side_a)}, |B|={len(self.model.side_b)})"


def rank_transversal(m: TransversalModel, x_removed: Iterable[int]) -> int:
    """mu of the model restricted to (A \\ X) | B"""
    return m.rank(x_removed)
