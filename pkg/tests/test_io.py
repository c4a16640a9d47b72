import pytest

from rankred.graphs import BipartiteGraph, complete_graph, cycle_graph, path_graph
from rankred.matroids import PartitionModel
from rankred.reductions import build_clique_gadget, build_t_edge_gadget, preprocess_clique_instance
from rankred.utils.exceptions import InputError, ParseError
from rankred.utils.io import (
    compact_graph,
    file_digest,
    format_bipartite,
    format_clique_gadget,
    format_graph,
    format_index_list,
    format_partition,
    format_record,
    format_tedge_gadget,
    load_bipartite,
    load_gadget,
    load_graph,
    load_index_list,
    load_partition_model,
    parse_bipartite,
    parse_gadget,
    parse_graph,
    parse_index_list,
    parse_partition,
    text_digest,
    write_text,
)


def test_parse_graph_with_comments():
    text = "# triangle\np 3 3\n0 1\n\n1 2  # second edge\n2 0\n"
    assert parse_graph(text) == complete_graph(3)


@pytest.mark.parametrize(
    "text,lineno",
    [
        ("", 1),
        ("0 1\n", 1),
        ("p 3\n", 1),
        ("p 3 2\n0 1\n1 1\n", 3),
        ("p 3 2\n0 1\n1 5\n", 3),
        ("p 3 2\n0 1\n1 0\n", 3),
        ("p 3 2\n0 1\nedge 1 2\n", 3),
        ("p 3 2\n0 1\np 3 2\n", 3),
        ("p 3 3\n0 1\n1 2\n", 3),
        ("p 3 1\n0 x\n", 2),
    ],
)
def test_parse_errors_report_lines(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_graph(text, "graph.txt")
    assert exc.value.lineno == lineno
    assert str(exc.value).startswith(f"graph.txt:{lineno}:")


def test_parse_bipartite():
    g = parse_bipartite("p 4 3\nbip 2\n0 2\n1 2\n3 1\n")
    assert g.side_a == (0, 1) and g.side_b == (2, 3)
    assert g.edges == frozenset({(0, 2), (1, 2), (1, 3)})


@pytest.mark.parametrize("text", ["p 4 1\n0 2\n", "p 4 1\nbip 2\n0 1\n", "p 4 0\nbip 5\n"])
def test_parse_bipartite_errors(text):
    with pytest.raises(ParseError):
        parse_bipartite(text)


def test_parse_partition():
    m = parse_partition("partition 2\n2 0 1 2\n1 3 4\n")
    assert m.full_rank == 3
    assert format_partition(m) == "partition 2\n2 0 1 2\n1 3 4\n"


@pytest.mark.parametrize(
    "text",
    ["", "blocks 1\n1 0\n", "partition 2\n1 0\n", "partition 1\n3 0 1\n", "partition 2\n1 0 1\n1 1 2\n"],
)
def test_parse_partition_errors(text):
    with pytest.raises(ParseError):
        parse_partition(text)


def test_parse_index_list():
    indices, metadata = parse_index_list("3 1\n# chosen\n7\ncoverage 168\n")
    assert indices == [3, 1, 7]
    assert metadata == {"coverage": 168}
    with pytest.raises(ParseError):
        parse_index_list("1 2 1\n")
    with pytest.raises(ParseError):
        parse_index_list("coverage is high\n")


def test_files_round_trip(tmp_path):
    g = cycle_graph(5)
    b = BipartiteGraph.from_parts(2, 3, [(0, 0), (1, 2)])
    m = PartitionModel.from_sizes(((2, 1), (3, 2)))
    write_text(str(tmp_path / "g.txt"), format_graph(g))
    write_text(str(tmp_path / "b.txt"), format_bipartite(b))
    write_text(str(tmp_path / "m.txt"), format_partition(m))
    write_text(str(tmp_path / "x.txt"), format_index_list([4, 2], {"rank": 3}))
    assert load_graph(str(tmp_path / "g.txt")) == g
    assert load_bipartite(str(tmp_path / "b.txt")) == b
    assert load_partition_model(str(tmp_path / "m.txt")).rank() == m.rank()
    assert load_index_list(str(tmp_path / "x.txt")) == ([2, 4], {"rank": 3})
    assert file_digest(str(tmp_path / "g.txt")) == text_digest(format_graph(g))


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        load_graph(str(tmp_path / "missing.txt"))


def test_tedge_gadget_round_trip(tmp_path):
    gad = build_t_edge_gadget(path_graph(3), 2)
    text = format_tedge_gadget(gad)
    assert text.splitlines()[:3] == ["p 13 14", "t 2", "bip 11"]
    path = str(tmp_path / "tedge.txt")
    write_text(path, text)
    parsed = load_gadget(path)
    assert parsed.t == 2
    assert parsed.source == gad.source
    assert parsed.graph == gad.graph


def test_clique_gadget_round_trip():
    h, _ = preprocess_clique_instance(complete_graph(6), 6)
    gad = build_clique_gadget(h, 6)
    text = format_clique_gadget(gad)
    assert text.splitlines()[1] == "k 42 ell 6"
    assert parse_gadget(text) == gad


def test_gadget_inconsistencies():
    gad = build_t_edge_gadget(path_graph(3), 1)
    with pytest.raises(ParseError):
        parse_gadget(format_bipartite(gad.graph))
    tampered = format_tedge_gadget(gad).replace("t 1", "t 7")
    with pytest.raises(ParseError):
        parse_gadget(tampered)
    h, _ = preprocess_clique_instance(complete_graph(6), 6)
    wrong_k = format_clique_gadget(build_clique_gadget(h, 6)).replace("k 42", "k 41")
    with pytest.raises(ParseError):
        parse_gadget(wrong_k)


def test_format_bipartite_needs_dense_labels():
    with pytest.raises(InputError):
        format_bipartite(BipartiteGraph((0,), (5,), frozenset({(0, 5)})))


def test_record_and_compact():
    assert format_record([("k", 2), ("size", 4)]) == "k 2\nsize 4\n"
    assert compact_graph(path_graph(3)) == "n=3 edges=[0-1,1-2]"
    assert compact_graph(BipartiteGraph.from_parts(1, 1, [(0, 0)])) == "bip A=1 B=1 edges=[0-1]"
