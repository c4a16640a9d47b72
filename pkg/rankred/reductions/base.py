from typing import NamedTuple, Tuple

from rankred.graphs.base import Edge


class DecodeEntry(NamedTuple):
    """
    Meaning of one gadget vertex.

    role is "a" or "b" (the side of the gadget), kind is "v" for a source vertex or
    "e" for a source edge. For "v", data is (vertex,) or (vertex, copy); for "e", data is (u, v).
    """

    role: str
    kind: str
    data: Tuple[int, ...]

    @property
    def vertex(self) -> int:
        return self.data[0]

    @property
    def edge(self) -> Edge:
        return (self.data[0], self.data[1])

    def to_tokens(self) -> Tuple[str, ...]:
        return (self.kind,) + tuple(str(x) for x in self.data)
