from dataclasses import dataclass
from typing import FrozenSet, Iterable, Sequence, Tuple

from rankred.graphs.base import BipartiteGraph
from rankred.matroids.base import MatroidModel
from rankred.utils.exceptions import InputError, InvalidParameterError


@dataclass(frozen=True)
class PartitionBlock:
    """Block E_i of a partition matroid with its cap d_i."""

    elements: FrozenSet[int]
    cap: int

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def slack(self) -> int:
        """c_i = |E_i| - d_i"""
        return len(self.elements) - self.cap

    @property
    def sorted_elements(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elements))


class PartitionModel(MatroidModel):
    """
    Partition matroid: a set is independent when it holds at most d_i elements of each block E_i.

    Parameters:
        blocks : sequence of (elements of E_i, d_i) with pairwise disjoint blocks and 0 <= d_i <= |E_i|
    """

    def __init__(self, blocks: Sequence[Tuple[Iterable[int], int]]):
        parsed = []
        seen = set()
        for i, (elements, cap) in enumerate(blocks):
            block = PartitionBlock(frozenset(int(e) for e in elements), int(cap))
            if not 0 <= block.cap <= block.size:
                raise InvalidParameterError(f"cap[{i}]", block.cap, f"must lie in 0..{block.size}")
            overlap = seen & block.elements
            if overlap:
                raise InputError(f"Block {i} repeats the elements {sorted(overlap)} of earlier blocks")
            seen |= block.elements
            parsed.append(block)
        self.blocks: Tuple[PartitionBlock, ...] = tuple(parsed)
        self._ground = tuple(sorted(seen))

    @classmethod
    def from_sizes(cls, sizes_and_caps: Sequence[Tuple[int, int]]) -> "PartitionModel":
        """
        Model whose blocks hold consecutive elements, e.g. ((3, 2), (2, 2)) gives
        blocks {0, 1, 2} with cap 2 and {3, 4} with cap 2.
        """
        blocks, start = [], 0
        for size, cap in sizes_and_caps:
            blocks.append((range(start, start + size), cap))
            start += size
        return cls(blocks)

    @property
    def ground_set(self) -> Tuple[int, ...]:
        return self._ground

    def _rank_after_removal(self, removed: FrozenSet) -> int:
        return sum(min(len(b.elements - removed), b.cap) for b in self.blocks)

    def to_transversal(self) -> "TransversalModel":  # noqa: F821
        """
        Transversal model of the same matroid: for each block, d_i new B-vertices
        adjacent to every element of E_i.
        """
        from rankred.matroids.transversal import TransversalModel

        next_vertex = (max(self._ground) + 1) if self._ground else 0
        side_b, edges = [], []
        for block in self.blocks:
            for _ in range(block.cap):
                side_b.append(next_vertex)
                edges.extend((e, next_vertex) for e in block.elements)
                next_vertex += 1
        return TransversalModel(BipartiteGraph(self._ground, tuple(side_b), frozenset(edges)))

    def __repr__(self) -> str:
        shape = ", ".join(f"({b.size}, cap {b.cap})" for b in self.blocks)
        return f"PartitionModel({shape})"


def rank_partition(m: PartitionModel, x_removed: Iterable[int]) -> int:
    """sum_i min(|E_i \\ X|, d_i)"""
    return m.rank(x_removed)
