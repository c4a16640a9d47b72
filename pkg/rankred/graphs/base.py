"""Simple undirected graphs and bipartite graphs over dense integer vertices."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from rankred.utils.exceptions import ElementNotInGroundSetError, InputError, InvalidParameterError
from rankred.utils.package_utils import requires_package

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge uv as an ordered pair (min, max)."""
    u, v = int(u), int(v)
    return (u, v) if u < v else (v, u)


def _bit_count(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph on the vertices 0..vertex_count-1.

    Parameters:
        vertex_count : number of vertices |G|
        edges : iterable of vertex pairs, stored normalized as (u, v) with u < v
        labels : optional side table vertex -> name, ignored by equality and hashing
    """

    vertex_count: int
    edges: FrozenSet[Edge] = frozenset()
    labels: Optional[Mapping[int, str]] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        n = int(self.vertex_count)
        if n < 0:
            raise InvalidParameterError("vertex_count", n, "must be non-negative")
        raw = list(self.edges)
        normalized = set()
        for pair in raw:
            u, v = normalize_edge(*pair)
            if u == v:
                raise InputError(f"Loop ({u}, {v}) is not allowed in a simple graph")
            if u < 0 or v >= n:
                raise InputError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if (u, v) in normalized:
                raise InputError(f"Duplicate edge ({u}, {v})")
            normalized.add((u, v))
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        if self.labels is not None:
            object.__setattr__(self, "labels", dict(self.labels))

    @property
    def order(self) -> int:
        """|G|"""
        return self.vertex_count

    @property
    def size(self) -> int:
        """||G||"""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: j for j, e in enumerate(self.sorted_edges)}

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def neighbour_masks(self) -> Tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def vertex_mask(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            v = int(v)
            if not 0 <= v < self.vertex_count:
                raise ElementNotInGroundSetError([v], repr(self))
            mask |= 1 << v
        return mask

    def induced_edge_count_mask(self, mask: int) -> int:
        """Number of edges with both endpoints in the vertex bitmask `mask`."""
        total = 0
        masks = self.neighbour_masks
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            total += _bit_count(masks[v] & mask)
            rest ^= low
        return total // 2

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        return self.induced_edge_count_mask(self.vertex_mask(vertices))

    def induced_edges(self, vertices: Iterable[int]) -> FrozenSet[Edge]:
        keep = set(int(v) for v in vertices)
        return frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(int(v) for v in vertices))
        return self.induced_edge_count(vs) == len(vs) * (len(vs) - 1) // 2

    def vertices_of(self, edges: Iterable[Edge]) -> FrozenSet[int]:
        """Vertices touched by `edges`."""
        return frozenset(v for e in edges for v in e)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """
        Subgraph induced by `vertices`, relabelled densely in the given order.
        """
        order = [int(v) for v in vertices]
        position = {v: i for i, v in enumerate(order)}
        edges = [(position[u], position[v]) for u, v in self.edges if u in position and v in position]
        labels = None
        if self.labels is not None:
            labels = {position[v]: self.labels[v] for v in order if v in self.labels}
        return Graph(len(order), frozenset(normalize_edge(*e) for e in edges), labels)

    def without_edges(self, edges: Iterable[Edge]) -> "Graph":
        drop = set(normalize_edge(*e) for e in edges)
        return Graph(self.vertex_count, self.edges - drop, self.labels)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed permutation[v]."""
        if sorted(permutation) != list(range(self.vertex_count)):
            raise InvalidParameterError("permutation", list(permutation), "must be a permutation of the vertices")
        edges = frozenset(normalize_edge(permutation[u], permutation[v]) for u, v in self.edges)
        return Graph(self.vertex_count, edges)

    def disjoint_union(self, *others: "Graph") -> "Graph":
        """Disjoint union, vertices of each further graph shifted past the previous ones."""
        edges = set(self.edges)
        offset = self.vertex_count
        labels = dict(self.labels) if self.labels is not None else None
        for other in others:
            edges.update((u + offset, v + offset) for u, v in other.edges)
            if labels is not None and other.labels is not None:
                labels.update({v + offset: name for v, name in other.labels.items()})
            offset += other.vertex_count
        return Graph(offset, frozenset(edges), labels)

    def label(self, v: int) -> str:
        if self.labels is not None and v in self.labels:
            return self.labels[v]
        return str(v)

    @requires_package("networkx")
    def to_networkx(self):
        """Export to a `networkx.Graph` (optional dependency)."""
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.sorted_edges)
        return g

    def __repr__(self) -> str:
        return f"Graph(|G|={self.order}, ||G||={self.size})"


@dataclass(frozen=True)
class BipartiteGraph:
    """
    Bipartite graph with bipartition (side_a, side_b).
    Edges are stored oriented as (a, b) with a in side_a and b in side_b.
    """

    side_a: Tuple[int, ...]
    side_b: Tuple[int, ...]
    edges: FrozenSet[Edge] = frozenset()
    labels: Optional[Mapping[int, str]] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        side_a = tuple(int(a) for a in self.side_a)
        side_b = tuple(int(b) for b in self.side_b)
        set_a, set_b = set(side_a), set(side_b)
        if len(set_a) != len(side_a) or len(set_b) != len(side_b):
            raise InputError("A side of the bipartition lists a vertex twice")
        if set_a & set_b:
            raise InputError(f"Sides A and B share the vertices {sorted(set_a & set_b)}")
        oriented = set()
        for x, y in self.edges:
            x, y = int(x), int(y)
            if x in set_a and y in set_b:
                e = (x, y)
            elif x in set_b and y in set_a:
                e = (y, x)
            else:
                raise InputError(f"Edge ({x}, {y}) does not join side A to side B")
            if e in oriented:
                raise InputError(f"Duplicate edge {e}")
            oriented.add(e)
        object.__setattr__(self, "side_a", side_a)
        object.__setattr__(self, "side_b", side_b)
        object.__setattr__(self, "edges", frozenset(oriented))

    @classmethod
    def from_parts(cls, n_a: int, n_b: int, edges: Iterable[Edge] = ()) -> "BipartiteGraph":
        """
        Build a bipartite graph with A = 0..n_a-1 and B = n_a..n_a+n_b-1.
        `edges` are given as local pairs (i, j) with i < n_a and j < n_b.
        """
        pairs = []
        for i, j in edges:
            if not (0 <= i < n_a and 0 <= j < n_b):
                raise InputError(f"Local edge ({i}, {j}) is outside the {n_a}x{n_b} bipartition")
            pairs.append((int(i), n_a + int(j)))
        return cls(tuple(range(n_a)), tuple(range(n_a, n_a + n_b)), frozenset(pairs))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.side_a + self.side_b

    @property
    def vertex_count(self) -> int:
        return len(self.side_a) + len(self.side_b)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        """Sorted neighbours of every vertex."""
        adj: Dict[int, list] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def neighbourhood(self, vertices: Iterable[int]) -> FrozenSet[int]:
        """N(Y) for a vertex set Y."""
        return frozenset(w for v in vertices for w in self.adjacency[v])

    def check_vertices(self, vertices: Iterable[int], what: str = "graph") -> FrozenSet[int]:
        chosen = frozenset(int(v) for v in vertices)
        outside = chosen - self.vertex_set
        if outside:
            raise ElementNotInGroundSetError(outside, what)
        return chosen

    def without_vertices(self, vertices: Iterable[int]) -> "BipartiteGraph":
        drop = set(vertices)
        return BipartiteGraph(
            tuple(a for a in self.side_a if a not in drop),
            tuple(b for b in self.side_b if b not in drop),
            frozenset(e for e in self.edges if e[0] not in drop and e[1] not in drop),
            self.labels,
        )

    def without_edges(self, edges: Iterable[Edge]) -> "BipartiteGraph":
        return BipartiteGraph(self.side_a, self.side_b, self.edges - self.oriented(edges), self.labels)

    def oriented(self, edges: Iterable[Edge]) -> FrozenSet[Edge]:
        """Orient pairs as (a, b); raise if a pair is not an edge."""
        result = set()
        for x, y in edges:
            x, y = int(x), int(y)
            if (x, y) in self.edges:
                result.add((x, y))
            elif (y, x) in self.edges:
                result.add((y, x))
            else:
                raise ElementNotInGroundSetError([(x, y)], "edge set")
        return frozenset(result)

    def as_graph(self) -> Graph:
        """
        View as a plain `Graph`. Requires the vertices to be exactly 0..|V|-1.
        """
        if sorted(self.vertices) != list(range(self.vertex_count)):
            raise InputError("Only bipartite graphs on the vertices 0..|V|-1 can be viewed as a Graph")
        return Graph(self.vertex_count, self.edges, self.labels)

    @requires_package("networkx")
    def to_networkx(self):
        """Export to a `networkx.Graph` with the usual `bipartite` node attribute."""
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.side_a, bipartite=0)
        g.add_nodes_from(self.side_b, bipartite=1)
        g.add_edges_from(self.sorted_edges)
        return g

    def __repr__(self) -> str:
        return f"BipartiteGraph(|A|={len(self.side_a)}, |B|={len(self.side_b)}, ||G||={self.size})"


@dataclass(frozen=True)
class Matching:
    """Set of (a, b) pairs, no two sharing an endpoint."""

    pairs: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        pairs = frozenset((int(a), int(b)) for a, b in self.pairs)
        seen = set()
        for a, b in pairs:
            if a in seen or b in seen:
                raise InputError(f"Pairs of a matching share an endpoint at ({a}, {b})")
            seen.update((a, b))
        object.__setattr__(self, "pairs", pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @cached_property
    def mate(self) -> Dict[int, int]:
        """Partner of every matched vertex, in both directions."""
        mates = {}
        for a, b in self.pairs:
            mates[a] = b
            mates[b] = a
        return mates

    def is_matching_of(self, g: BipartiteGraph) -> bool:
        return all(p in g.edges for p in self.pairs)
