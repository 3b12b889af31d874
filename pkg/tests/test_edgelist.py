import pytest

from mincollapse import (
    DuplicateEdgeError,
    EdgeListParseError,
    build_graph,
    dump_graph,
    load_graph,
    parse_edge_list,
    serialize_edge_list,
)


def test_parse_demo(demo_text, demo):
    g = parse_edge_list(demo_text)
    assert g.labels == demo.labels
    assert g.label_edges() == demo.label_edges()


def test_parse_skips_comments_and_blanks():
    g = parse_edge_list("# header\n\n  \na b\n# tail\nb c\n")
    assert g.n == 3 and g.m == 2


def test_parse_rejects_wrong_token_count():
    with pytest.raises(EdgeListParseError) as err:
        parse_edge_list("a b\na b c\n")
    assert err.value.lineno == 2


def test_parse_strict_duplicates():
    with pytest.raises(DuplicateEdgeError):
        parse_edge_list("a b\nb a\n")
    g = parse_edge_list("a b\nb a\n", dedupe=True)
    assert g.m == 1


def test_round_trip(demo):
    again = parse_edge_list(serialize_edge_list(demo))
    assert set(again.labels) == set(demo.labels)
    assert {frozenset(e) for e in again.label_edges()} == {
        frozenset(e) for e in demo.label_edges()
    }


def test_serialize_header(demo):
    text = serialize_edge_list(demo, header=("one", "two"))
    lines = text.splitlines()
    assert lines[0] == "# one" and lines[1] == "# two"
    assert len(lines) == 2 + demo.m


def test_serialize_empty():
    assert serialize_edge_list(build_graph([])) == ""


def test_file_round_trip(tmp_path, demo):
    path = tmp_path / "g.edges"
    dump_graph(demo, path, header=("demo",))
    again = load_graph(path)
    assert set(again.labels) == set(demo.labels)
    assert {frozenset(e) for e in again.label_edges()} == {
        frozenset(e) for e in demo.label_edges()
    }
