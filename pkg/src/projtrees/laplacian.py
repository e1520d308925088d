"""Rooted spanning arborescence counts via the directed matrix-tree theorem."""

from __future__ import annotations

from .digraph import Digraph


def in_degree_laplacian(g: Digraph) -> list[list[int]]:
    """In-degrees on the diagonal minus the adjacency matrix.

    Rows and columns follow ``g.vertices`` in increasing order, so induced
    subgraphs give a |V| x |V| matrix.
    """
    pos = {v: i for i, v in enumerate(g.vertices)}
    size = len(pos)
    lap = [[0] * size for _ in range(size)]
    for tail, head in g.arcs:
        lap[pos[tail]][pos[head]] -= 1
        lap[pos[head]][pos[head]] += 1
    return lap


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def principal_minor(matrix: list[list[int]], r: int) -> list[list[int]]:
    return [row[:r] + row[r + 1:] for i, row in enumerate(matrix) if i != r]


def _root_position(g: Digraph, r: int) -> int:
    try:
        return g.vertices.index(r)
    except ValueError:
        raise ValueError(f"root {r} is not a vertex of the graph") from None


def count_arborescences(g: Digraph, r: int) -> int:
    """Number of spanning out-arborescences of ``g`` rooted at ``r``."""
    i = _root_position(g, r)
    return bareiss_determinant(principal_minor(in_degree_laplacian(g), i))


def has_arborescence(g: Digraph, r: int) -> bool:
    return count_arborescences(g, r) > 0
