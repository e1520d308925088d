"""Exponential-time reference answers for cross-checking.

Nothing here touches the conflict graph, the level-set enumeration, the
Laplacian or the growth code; only Digraph and the crossing predicate are
shared.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .conflict import edges_conflict
from .digraph import Arc, Digraph, tree_order_key


class OracleBoundError(ValueError):
    pass


def brute_force_arborescences(g: Digraph, r: int, max_vertices: int = 10) -> list[tuple[Arc, ...]]:
    """Every r-rooted spanning out-arborescence, from all parent choices."""
    if len(g.vertices) > max_vertices:
        raise OracleBoundError(f"{len(g.vertices)} vertices exceeds oracle bound {max_vertices}")
    if r not in g.vertices:
        raise ValueError(f"root {r} is not a vertex")
    others = [v for v in g.vertices if v != r]
    choices = [[a for a in g.arcs if a.head == v] for v in others]
    trees = []
    for pick in product(*choices):
        parent = {a.head: a.tail for a in pick}
        if all(_reaches_root(v, parent, r, len(others)) for v in others):
            trees.append(tuple(sorted(pick, key=tree_order_key)))
    return sorted(trees)


def _reaches_root(v: int, parent: dict[int, int], r: int, steps: int) -> bool:
    for _ in range(steps):
        v = parent[v]
        if v == r:
            return True
    return False


def is_projective(arcs) -> bool:
    return not any(edges_conflict(a.span, b.span) for a, b in combinations(arcs, 2))


def brute_force_projective_arborescences(g: Digraph, r: int, max_vertices: int = 10) -> list[tuple[Arc, ...]]:
    return [t for t in brute_force_arborescences(g, r, max_vertices) if is_projective(t)]


def brute_force_maximal_independent_sets(g: Digraph, max_arcs: int = 64) -> list[frozenset[Arc]]:
    """Maximal sets of pairwise non-crossing arcs, by Bron-Kerbosch on the compatibility graph."""
    arcs = sorted(g.arcs)
    if len(arcs) > max_arcs:
        raise OracleBoundError(f"{len(arcs)} arcs exceeds oracle bound {max_arcs}")
    compatible = {
        a: {b for b in arcs if b != a and not edges_conflict(a.span, b.span)} for a in arcs
    }
    found: list[frozenset[Arc]] = []

    def expand(clique: set, cand: set, excluded: set) -> None:
        if not cand and not excluded:
            found.append(frozenset(clique))
            return
        pivot = max(cand | excluded, key=lambda u: len(compatible[u] & cand))
        for v in sorted(cand - compatible[pivot]):
            expand(clique | {v}, cand & compatible[v], excluded & compatible[v])
            cand = cand - {v}
            excluded = excluded | {v}

    if arcs:
        expand(set(), set(arcs), set())
    else:
        found.append(frozenset())
    return found


def permutation_determinant(matrix: list[list[int]]) -> int:
    """Leibniz expansion; only for small matrices."""
    n = len(matrix)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term *= matrix[i][p]
            if not term:
                break
        total += term
    return total
