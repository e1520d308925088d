import pytest
from hypothesis import given
from hypothesis import strategies as st

from projtrees import (
    Arc,
    Digraph,
    GraphFormatError,
    induced_subgraph,
    parse_adjacency_matrix,
    parse_arc_list,
    subgraph_with_arcs,
    to_arc_list,
    to_dot,
)

from .conftest import EXAMPLE_MATRIX
from .strategies import digraphs

EXAMPLE_ARCS = {(2, 3), (2, 6), (3, 6), (4, 1), (4, 2), (5, 2), (5, 4)}


def test_parse_arc_list_simple():
    g = parse_arc_list("n 3\n1 2\n2 3")
    assert g == Digraph(3, ((1, 2), (2, 3)))
    assert g.root is None


def test_parse_arc_list_example(example_graph):
    assert example_graph.n == 6
    assert set(example_graph.arcs) == EXAMPLE_ARCS


def test_parse_arc_list_order_irrelevant():
    a = parse_arc_list("n 4\n1 2\n3 4\n2 3\n")
    b = parse_arc_list("n 4\n2 3\n3 4\n1 2\n")
    assert a == b


def test_parse_arc_list_header_root_and_comments():
    g = parse_arc_list("# a comment\n\nn 3 root 1\n# arcs\n1 2\n1 3\n")
    assert g.root == 1
    assert set(g.arcs) == {(1, 2), (1, 3)}


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("n 2\n1 1", 2, "loop"),
        ("n 2\n1 2\n1 2", 3, "duplicate"),
        ("n 2\n1 3", 2, "outside"),
        ("n 2\n1 2 3", 2, "expected"),
        ("n 2\n1 x", 2, "integers"),
        ("m 2\n1 2", 1, "header"),
        ("n 2 root 5\n1 2", 1, "root"),
    ],
)
def test_parse_arc_list_errors(text, lineno, fragment):
    with pytest.raises(GraphFormatError) as info:
        parse_arc_list(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"line {lineno}:")


def test_parse_arc_list_empty_input():
    with pytest.raises(GraphFormatError, match="header"):
        parse_arc_list("# nothing\n")


def test_parse_adjacency_matrix_example():
    g = parse_adjacency_matrix(EXAMPLE_MATRIX)
    assert g.n == 6
    assert set(g.arcs) == EXAMPLE_ARCS


def test_matrix_and_arc_list_agree(example_graph):
    assert parse_adjacency_matrix(EXAMPLE_MATRIX) == example_graph


def test_parse_adjacency_matrix_zero():
    g = parse_adjacency_matrix("0 0\n0 0\n")
    assert g.n == 2 and g.arcs == ()


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("1 0 0\n0 0 0\n0 0 0\n", "diagonal"),
        ("0 1\n0 0 0\n", "square"),
        ("0 2\n0 0\n", "not 0 or 1"),
    ],
)
def test_parse_adjacency_matrix_errors(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        parse_adjacency_matrix(text)


def test_adjacency_matrix_roundtrip(example_graph):
    text = "\n".join(" ".join(map(str, row)) for row in example_graph.adjacency_matrix())
    assert parse_adjacency_matrix(text) == example_graph


def test_digraph_rejects_bad_arcs():
    with pytest.raises(ValueError, match="loop"):
        Digraph(2, ((1, 1),))
    with pytest.raises(ValueError, match="duplicate"):
        Digraph(2, ((1, 2), (1, 2)))
    with pytest.raises(ValueError):
        Digraph(2, ((1, 3),))


def test_induced_subgraph_example(example_graph):
    sub = induced_subgraph(example_graph, {1, 2, 3, 6})
    assert set(sub.arcs) == {(2, 3), (2, 6), (3, 6)}
    assert sub.vertices == (1, 2, 3, 6)
    assert sub.n == 6  # labels are kept


def test_induced_subgraph_empty(example_graph):
    sub = induced_subgraph(example_graph, set())
    assert sub.arcs == () and sub.vertices == ()


def test_induced_subgraph_rejects_out_of_range(example_graph):
    with pytest.raises(ValueError):
        induced_subgraph(example_graph, {0, 1})


@given(digraphs())
def test_induced_subgraph_identity(g):
    assert induced_subgraph(g, g.vertices) == g


@given(digraphs(), st.data())
def test_induced_subgraph_keeps_exactly_inner_arcs(g, data):
    keep = data.draw(st.sets(st.sampled_from(g.vertices)))
    sub = induced_subgraph(g, keep)
    assert set(sub.arcs) == {a for a in g.arcs if a.tail in keep and a.head in keep}


def test_subgraph_with_arcs(example_graph):
    arcs = [(2, 3), (4, 2), (5, 2), (2, 6), (5, 4)]
    sub = subgraph_with_arcs(example_graph, arcs)
    assert sub.vertices == tuple(range(1, 7))
    assert set(sub.arcs) == set(arcs)
    assert subgraph_with_arcs(example_graph, example_graph.arcs) == example_graph
    assert subgraph_with_arcs(example_graph, []).arcs == ()
    with pytest.raises(ValueError, match="not in the graph"):
        subgraph_with_arcs(example_graph, [(1, 2)])


@given(digraphs())
def test_arc_list_roundtrip(g):
    assert parse_arc_list(to_arc_list(g)) == g
    rooted = g.with_root(g.vertices[0])
    assert parse_arc_list(to_arc_list(rooted)) == rooted


def test_to_dot_single_vertex():
    dot = to_dot(Digraph(1))
    assert dot.startswith("digraph G {")
    assert "->" not in dot
    assert "  1;" in dot


def test_to_dot_example(example_graph):
    dot = to_dot(example_graph)
    assert dot.count("->") == 7
    assert sum(1 for line in dot.splitlines() if line.strip().rstrip(";").isdigit()) == 6
    assert dot == to_dot(example_graph)


def test_to_dot_highlight(example_graph):
    dot = to_dot(example_graph, highlight=[Arc(4, 1)])
    styled = [line for line in dot.splitlines() if "color=red" in line]
    assert styled == ["  4 -> 1 [color=red, penwidth=2];"]
    with pytest.raises(ValueError):
        to_dot(example_graph, highlight=[(1, 4)])
