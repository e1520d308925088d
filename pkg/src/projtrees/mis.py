"""Incremental enumeration of maximal non-conflicting arc sets.

L_k holds every maximal independent set of the conflict graph restricted to
the first k arcs. Going from L_k to L_{k+1} each member either survives
unchanged (it already blocks the new arc) or, when its part compatible with
the new arc is maximal there, spawns that part plus the new arc.

Sets are bit vectors over the 1-based arc order of a ConflictGraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conflict import ConflictGraph, bit_indices, build_conflict_graph, edge_prefix
from .digraph import Arc, Digraph


class LimitExceeded(RuntimeError):
    def __init__(self, message: str, partial=()):
        super().__init__(message)
        self.partial = list(partial)


def vect_key(bits: int) -> tuple[int, ...]:
    """Sort key: the increasing vector of member indices."""
    return tuple(bit_indices(bits))


@dataclass(frozen=True)
class LevelSets:
    k: int
    sets: tuple[int, ...]


def compatible_prefix(cg: ConflictGraph, k: int) -> int:
    """B^{k+1}: arcs among the first k that do not conflict with arc k+1."""
    if k == 0:
        return 0
    if not 1 <= k + 1 <= cg.arc_count:
        raise IndexError(f"arc index {k + 1} outside 1..{cg.arc_count}")
    return edge_prefix(cg, k) & ~cg.neighbours[k]


def _blocks_all(cg: ConflictGraph, inside: int, outside: int) -> bool:
    # every arc in ``outside`` conflicts with at least one arc in ``inside``
    for l in bit_indices(outside):
        if not cg.neighbours[l] & inside:
            return False
    return True


def first_level(cg: ConflictGraph) -> LevelSets:
    if cg.arc_count == 0:
        raise ValueError("graph has no arcs")
    return LevelSets(1, (1,))


def extend_level(cg: ConflictGraph, level: LevelSets) -> LevelSets:
    k = level.k
    if not 1 <= k < cg.arc_count:
        raise ValueError(f"cannot extend level {k} of {cg.arc_count}")
    compat = compatible_prefix(cg, k)
    new_bit = 1 << k
    out: dict[int, None] = {}
    for f in level.sets:
        if f & ~compat:
            out.setdefault(f, None)
        kept = f & compat
        if _blocks_all(cg, kept, compat & ~f):
            out.setdefault(kept | new_bit, None)
    return LevelSets(k + 1, tuple(sorted(out, key=vect_key)))


def is_maximal_noncrossing(cg: ConflictGraph, f: int, k: int) -> bool:
    prefix = edge_prefix(cg, k)
    if f & ~prefix:
        return False
    for j in bit_indices(f):
        if cg.neighbours[j] & f:
            return False
    return _blocks_all(cg, f, prefix & ~f)


def levels(cg: ConflictGraph, limit: int | None = None, check: bool = False):
    """Yield L_1, ..., L_|E|.

    ``check`` re-verifies every member of every level and raises
    AssertionError on the first set that is not maximal non-crossing.
    """
    level = first_level(cg)
    while True:
        if limit is not None and len(level.sets) > limit:
            partial = level.sets[:limit] if level.k == cg.arc_count else ()
            raise LimitExceeded(
                f"level {level.k} holds {len(level.sets)} sets, more than the limit {limit}", partial
            )
        if check:
            for f in level.sets:
                if not is_maximal_noncrossing(cg, f, level.k):
                    raise AssertionError(f"level {level.k}: {cg.sorted_arcs(f)} is not maximal")
        yield level
        if level.k == cg.arc_count:
            return
        level = extend_level(cg, level)


def enumerate_maximal_independent_sets(
    cg: ConflictGraph, limit: int | None = None, check: bool = False
) -> list[int]:
    last = None
    for last in levels(cg, limit=limit, check=check):
        pass
    return list(last.sets)


def enumerate_maximal_projective_subgraphs(
    g: Digraph, limit: int | None = None, check: bool = False
) -> list[list[Arc]]:
    """Every maximal set of pairwise non-crossing arcs of ``g``, each in arc order."""
    cg = build_conflict_graph(g)
    try:
        found = enumerate_maximal_independent_sets(cg, limit=limit, check=check)
    except LimitExceeded as exc:
        exc.partial = [cg.sorted_arcs(f) for f in exc.partial]
        raise
    return [cg.sorted_arcs(f) for f in found]
