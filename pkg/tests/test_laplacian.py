from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projtrees import Digraph, bareiss_determinant, count_arborescences, has_arborescence, in_degree_laplacian
from projtrees.laplacian import principal_minor
from projtrees.oracle import brute_force_arborescences, permutation_determinant

from .strategies import digraphs


def test_laplacian_path(path_graph):
    assert in_degree_laplacian(path_graph) == [[0, -1, 0], [0, 1, -1], [0, 0, 1]]


def test_laplacian_example_diagonal(example_graph):
    lap = in_degree_laplacian(example_graph)
    assert [lap[i][i] for i in range(6)] == [1, 2, 1, 1, 0, 2]


def test_laplacian_empty():
    assert in_degree_laplacian(Digraph(2)) == [[0, 0], [0, 0]]


@given(digraphs(max_n=7))
def test_laplacian_structure(g):
    lap = in_degree_laplacian(g)
    size = len(g.vertices)
    for j in range(size):
        assert sum(lap[i][j] for i in range(size)) == 0
        for i in range(size):
            if i == j:
                assert lap[i][i] >= 0
            else:
                assert lap[i][j] in (0, -1)


def test_count_examples(path_graph, example_graph):
    assert count_arborescences(path_graph, 1) == 1
    assert count_arborescences(example_graph, 5) == 4
    assert count_arborescences(example_graph, 1) == 0
    assert [count_arborescences(example_graph, r) for r in (2, 3, 4, 6)] == [0, 0, 0, 0]


def test_count_root_out_of_range(path_graph):
    with pytest.raises(ValueError):
        count_arborescences(path_graph, 4)


def test_has_arborescence(example_graph):
    assert has_arborescence(example_graph, 5)
    assert not has_arborescence(example_graph, 6)
    assert has_arborescence(Digraph(1), 1)


def test_complete_digraph_cayley():
    # complete digraph on n vertices has n^(n-2) arborescences per root
    for n in range(2, 9):
        g = Digraph(n, tuple(permutations(range(1, n + 1), 2)))
        assert count_arborescences(g, 1) == n ** (n - 2)


def test_large_count_is_exact():
    n = 30
    g = Digraph(n, tuple(permutations(range(1, n + 1), 2)))
    assert count_arborescences(g, 7) == n ** (n - 2)  # far beyond 64 bits


@settings(max_examples=150, deadline=None)
@given(digraphs(max_n=6), st.data())
def test_count_matches_oracle(g, data):
    r = data.draw(st.sampled_from(g.vertices))
    assert count_arborescences(g, r) == len(brute_force_arborescences(g, r))


@given(digraphs(max_n=6), st.data())
def test_cofactor_two_routes(g, data):
    lap = in_degree_laplacian(g)
    r = data.draw(st.integers(0, len(lap) - 1))
    minor = principal_minor(lap, r)
    assert bareiss_determinant(minor) == permutation_determinant(minor)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_general_integer_matrices(m):
    assert bareiss_determinant(m) == permutation_determinant(m)


def test_bareiss_edge_cases():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[0, 0], [1, 0]]) == 0
    with pytest.raises(ValueError):
        bareiss_determinant([[1, 2]])


def test_induced_subgraph_counts_on_kept_vertices(example_graph):
    from projtrees import induced_subgraph

    sub = induced_subgraph(example_graph, {2, 3, 6})
    assert len(in_degree_laplacian(sub)) == 3
    assert count_arborescences(sub, 2) == 2
