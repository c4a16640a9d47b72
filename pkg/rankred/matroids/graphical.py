from typing import FrozenSet, Iterable, List, Tuple

from rankred.graphs.base import Edge, Graph, normalize_edge
from rankred.matroids.base import MatroidModel


class UnionFind:
    def __init__(self, size: int):
        self.parent: List[int] = list(range(size))
        self.components = size

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, u: int, v: int) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        if ru > rv:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.components -= 1
        return True


def component_count(g: Graph, removed: Iterable[Edge] = ()) -> int:
    """Number of connected components of (V, E \\ F)."""
    drop = set(normalize_edge(*e) for e in removed)
    uf = UnionFind(g.vertex_count)
    for u, v in g.edges:
        if (u, v) not in drop:
            uf.union(u, v)
    return uf.components


class GraphicalModel(MatroidModel):
    """
    Cycle matroid of a graph: edge sets are independent when acyclic,
    r(F) = |V| - #components(V, F).
    """

    def __init__(self, graph: Graph):
        self.graph = graph

    @property
    def ground_set(self) -> Tuple[Edge, ...]:
        return self.graph.sorted_edges

    def check_subset(self, elements: Iterable) -> FrozenSet:
        return super().check_subset(normalize_edge(*e) for e in elements)

    def _rank_after_removal(self, removed: FrozenSet) -> int:
        return self.graph.vertex_count - component_count(self.graph, removed)

    def __repr__(self) -> str:
        return f"GraphicalModel(|V|={self.graph.order}, |E|={self.graph.size})"


def rank_graphical(m: GraphicalModel, f_removed: Iterable[Edge]) -> int:
    """|V| - #components(V, E \\ F)"""
    return m.rank(f_removed)
