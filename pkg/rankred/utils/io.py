"""IO utilities: text formats for graphs, models, gadgets, index lists and records."""

import hashlib
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import fsspec
from loguru import logger

from rankred.graphs.base import BipartiteGraph, Edge, Graph
from rankred.matroids.partition import PartitionModel
from rankred.reductions.base import DecodeEntry
from rankred.reductions.clique import CliqueGadget, build_clique_gadget
from rankred.reductions.tedge import TEdgeGadget, build_t_edge_gadget
from rankred.utils.exceptions import InputError, ParseError

Gadget = Union[TEdgeGadget, CliqueGadget]


def read_text(path: str) -> str:
    """Reads a text file from any fsspec location"""
    try:
        with fsspec.open(path, "r") as fp:
            return fp.read()
    except FileNotFoundError:
        raise InputError(f"File {path} does not exist")


def write_text(path: str, text: str):
    """Writes a text file to any fsspec location"""
    logger.info(f"Saving file at {path}")
    with fsspec.open(path, "w") as fp:
        fp.write(text)


def file_digest(path: str) -> str:
    """sha256 of the raw bytes of a file"""
    with fsspec.open(path, "rb") as fp:
        return hashlib.sha256(fp.read()).hexdigest()


def text_digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """(1-based line number, tokens) of every non-blank line, '#' comments stripped."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _ints(tokens: Sequence[str], path: str, lineno: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(path, lineno, f"expected integers, got {' '.join(tokens)!r}")


@dataclass
class GraphDocument:
    """Raw content of an edge-list file before it is turned into a graph or gadget."""

    vertex_count: int
    edge_count: int
    edges: List[Edge] = field(default_factory=list)
    bip: Optional[int] = None
    headers: Dict[str, int] = field(default_factory=dict)
    decode: Dict[int, Tuple[Optional[str], str, Tuple[int, ...]]] = field(default_factory=dict)
    last_line: int = 1


def parse_graph_document(text: str, path: str = "<string>") -> GraphDocument:
    """
    Parse "p <n> <m>" followed by m lines "<u> <v>". Optional lines: "bip <|A|>",
    "t <t>", "k <k> ell <ell>" and "map <idx> [a|b] v|e <ints>".
    """
    doc: Optional[GraphDocument] = None
    seen = set()
    for lineno, tokens in _lines(text):
        head = tokens[0]
        if doc is None:
            if head != "p" or len(tokens) != 3:
                raise ParseError(path, lineno, "the first line must be 'p <vertices> <edges>'")
            n, m = _ints(tokens[1:], path, lineno)
            if n < 0 or m < 0:
                raise ParseError(path, lineno, "vertex and edge counts must be non-negative")
            doc = GraphDocument(n, m, last_line=lineno)
            continue
        doc.last_line = lineno
        if head == "p":
            raise ParseError(path, lineno, "duplicate 'p' line")
        elif head == "bip":
            if len(tokens) != 2:
                raise ParseError(path, lineno, "expected 'bip <|A|>'")
            (doc.bip,) = _ints(tokens[1:], path, lineno)
            if not 0 <= doc.bip <= doc.vertex_count:
                raise ParseError(path, lineno, f"bip {doc.bip} outside 0..{doc.vertex_count}")
        elif head == "t":
            if len(tokens) != 2:
                raise ParseError(path, lineno, "expected 't <t>'")
            (doc.headers["t"],) = _ints(tokens[1:], path, lineno)
        elif head == "k":
            if len(tokens) != 4 or tokens[2] != "ell":
                raise ParseError(path, lineno, "expected 'k <k> ell <ell>'")
            doc.headers["k"], doc.headers["ell"] = _ints([tokens[1], tokens[3]], path, lineno)
        elif head == "map":
            rest = tokens[2:]
            role = None
            if rest and rest[0] in ("a", "b"):
                role, rest = rest[0], rest[1:]
            if len(rest) < 2 or rest[0] not in ("v", "e"):
                raise ParseError(path, lineno, "expected 'map <idx> [a|b] v|e <ints>'")
            (idx,) = _ints(tokens[1:2], path, lineno)
            if not 0 <= idx < doc.vertex_count:
                raise ParseError(path, lineno, f"map index {idx} outside 0..{doc.vertex_count - 1}")
            doc.decode[idx] = (role, rest[0], tuple(_ints(rest[1:], path, lineno)))
        elif len(tokens) == 2:
            u, v = _ints(tokens, path, lineno)
            if u == v:
                raise ParseError(path, lineno, f"loop ({u}, {v})")
            if not (0 <= u < doc.vertex_count and 0 <= v < doc.vertex_count):
                raise ParseError(path, lineno, f"edge ({u}, {v}) outside 0..{doc.vertex_count - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(path, lineno, f"duplicate edge ({u}, {v})")
            seen.add(key)
            doc.edges.append((u, v))
        else:
            raise ParseError(path, lineno, f"unrecognised line {' '.join(tokens)!r}")
    if doc is None:
        raise ParseError(path, 1, "empty file, expected 'p <vertices> <edges>'")
    if len(doc.edges) != doc.edge_count:
        raise ParseError(path, doc.last_line, f"header announces {doc.edge_count} edges, found {len(doc.edges)}")
    return doc


def _graph_from(doc: GraphDocument) -> Graph:
    return Graph(doc.vertex_count, frozenset(doc.edges))


def _bipartite_from(doc: GraphDocument, path: str) -> BipartiteGraph:
    if doc.bip is None:
        raise ParseError(path, doc.last_line, "missing 'bip <|A|>' line")
    side_a = tuple(range(doc.bip))
    side_b = tuple(range(doc.bip, doc.vertex_count))
    for u, v in doc.edges:
        if (u < doc.bip) == (v < doc.bip):
            raise ParseError(path, doc.last_line, f"edge ({u}, {v}) does not join side A to side B")
    return BipartiteGraph(side_a, side_b, frozenset(doc.edges))


def parse_graph(text: str, path: str = "<string>") -> Graph:
    return _graph_from(parse_graph_document(text, path))


def parse_bipartite(text: str, path: str = "<string>") -> BipartiteGraph:
    return _bipartite_from(parse_graph_document(text, path), path)


def load_graph(path: str) -> Graph:
    return parse_graph(read_text(path), path)


def load_bipartite(path: str) -> BipartiteGraph:
    return parse_bipartite(read_text(path), path)


def parse_partition(text: str, path: str = "<string>") -> PartitionModel:
    """Parse "partition <p>" followed by p lines "<cap> <elt> <elt> ..."."""
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "partition" or len(lines[0][1]) != 2:
        raise ParseError(path, lines[0][0] if lines else 1, "the first line must be 'partition <p>'")
    lineno, tokens = lines[0]
    (p,) = _ints(tokens[1:], path, lineno)
    blocks = []
    for lineno, tokens in lines[1:]:
        cap, *elements = _ints(tokens, path, lineno)
        blocks.append((elements, cap))
    if len(blocks) != p:
        raise ParseError(path, lines[-1][0], f"header announces {p} blocks, found {len(blocks)}")
    try:
        return PartitionModel(blocks)
    except InputError as e:
        raise ParseError(path, lines[0][0], str(e))


def load_partition_model(path: str) -> PartitionModel:
    return parse_partition(read_text(path), path)


def parse_index_list(text: str, path: str = "<string>") -> Tuple[List[int], Dict[str, int]]:
    """
    Whitespace-separated integers; lines starting with a word are "key value" metadata
    (e.g. "coverage 168" or "rank 3").
    """
    indices: List[int] = []
    metadata: Dict[str, int] = {}
    for lineno, tokens in _lines(text):
        if tokens[0].lstrip("-").isdigit():
            indices.extend(_ints(tokens, path, lineno))
        elif len(tokens) == 2:
            (metadata[tokens[0]],) = _ints(tokens[1:], path, lineno)
        else:
            raise ParseError(path, lineno, f"unrecognised line {' '.join(tokens)!r}")
    if len(set(indices)) != len(indices):
        raise ParseError(path, 1, "an index is listed twice")
    return indices, metadata


def load_index_list(path: str) -> Tuple[List[int], Dict[str, int]]:
    return parse_index_list(read_text(path), path)


def _tedge_from(doc: GraphDocument, path: str) -> TEdgeGadget:
    vertices, edges = set(), []
    for idx in sorted(doc.decode):
        role, kind, data = doc.decode[idx]
        if kind == "v":
            vertices.add(data[0])
        elif doc.bip is not None and idx >= doc.bip:
            edges.append(tuple(data))
    gadget = build_t_edge_gadget(Graph(len(vertices), frozenset(edges)), doc.headers["t"])
    if doc.bip != len(gadget.side_a) or frozenset(_bipartite_from(doc, path).edges) != gadget.graph.edges:
        raise ParseError(path, doc.last_line, "host edges do not match the decode table")
    return gadget


def _clique_from(doc: GraphDocument, path: str) -> CliqueGadget:
    vertices, edges = set(), []
    for idx in sorted(doc.decode):
        role, kind, data = doc.decode[idx]
        if role == "b":
            continue
        if kind == "v":
            vertices.add(data[0])
        else:
            edges.append(tuple(data))
    gadget = build_clique_gadget(Graph(len(vertices), frozenset(edges)), doc.headers["ell"])
    if gadget.k != doc.headers["k"]:
        raise ParseError(path, 1, f"header k {doc.headers['k']} differs from the computed k {gadget.k}")
    if doc.bip != len(gadget.g.side_a) or frozenset(_bipartite_from(doc, path).edges) != gadget.g.edges:
        raise ParseError(path, doc.last_line, "gadget edges do not match the decode table")
    return gadget


def parse_gadget(text: str, path: str = "<string>") -> Gadget:
    """Parse a t-edge gadget ("t" header) or a clique gadget ("k ... ell ..." header)."""
    doc = parse_graph_document(text, path)
    try:
        if "t" in doc.headers:
            return _tedge_from(doc, path)
        if "k" in doc.headers:
            return _clique_from(doc, path)
    except (InputError, IndexError, KeyError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(path, doc.last_line, f"inconsistent gadget: {e}")
    raise ParseError(path, 1, "a gadget file needs a 't <t>' or 'k <k> ell <ell>' header")


def load_gadget(path: str) -> Gadget:
    return parse_gadget(read_text(path), path)


def format_graph(g: Graph) -> str:
    lines = [f"p {g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def _bipartite_lines(g: BipartiteGraph) -> List[str]:
    n_a = len(g.side_a)
    if g.side_a != tuple(range(n_a)) or g.side_b != tuple(range(n_a, g.vertex_count)):
        raise InputError("Only bipartite graphs with A = 0..|A|-1 and B = |A|..|V|-1 can be written")
    lines = [f"p {g.vertex_count} {g.size}", f"bip {n_a}"]
    lines.extend(f"{a} {b}" for a, b in g.sorted_edges)
    return lines


def format_bipartite(g: BipartiteGraph) -> str:
    return "\n".join(_bipartite_lines(g)) + "\n"


def format_partition(m: PartitionModel) -> str:
    lines = [f"partition {len(m.blocks)}"]
    lines.extend(" ".join(str(v) for v in (b.cap, *b.sorted_elements)) for b in m.blocks)
    return "\n".join(lines) + "\n"


def format_tedge_gadget(gad: TEdgeGadget) -> str:
    lines = _bipartite_lines(gad.graph)
    lines.insert(1, f"t {gad.t}")
    lines.extend(f"map {idx} {' '.join(gad.decode[idx].to_tokens())}" for idx in sorted(gad.decode))
    return "\n".join(lines) + "\n"


def format_clique_gadget(gad: CliqueGadget) -> str:
    lines = _bipartite_lines(gad.g)
    lines.insert(1, f"k {gad.k} ell {gad.ell}")
    lines.extend(
        f"map {idx} {gad.decode[idx].role} {' '.join(gad.decode[idx].to_tokens())}" for idx in sorted(gad.decode)
    )
    return "\n".join(lines) + "\n"


def format_index_list(indices: Iterable[int], metadata: Optional[Mapping[str, int]] = None) -> str:
    lines = [" ".join(str(i) for i in sorted(indices))]
    if metadata:
        lines.extend(f"{key} {value}" for key, value in metadata.items())
    return "\n".join(lines) + "\n"


def format_record(entries: Iterable[Tuple[str, object]]) -> str:
    """Line-oriented "key value" record."""
    return "".join(f"{key} {value}\n" for key, value in entries)


def compact_graph(g: Union[Graph, BipartiteGraph]) -> str:
    """One-line description used when reporting counterexamples."""
    edges = ",".join(f"{u}-{v}" for u, v in g.sorted_edges)
    if isinstance(g, BipartiteGraph):
        return f"bip A={len(g.side_a)} B={len(g.side_b)} edges=[{edges}]"
    return f"n={g.order} edges=[{edges}]"
