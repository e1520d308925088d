"""Crossing relation between arcs and the conflict graph over a digraph's arcs.

Arcs are indexed 1..|E| in lexicographic order: by span end, then span
beginning, with antiparallel pairs (same span) ordered by tail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Arc, Digraph, Span, arc_order_key


def edges_conflict(a: Span, b: Span) -> bool:
    """True iff the spans strictly interleave.

    Shared endpoints, nesting and disjointness never conflict.
    """
    return a.lo < b.lo < a.hi < b.hi or b.lo < a.lo < b.hi < a.hi


def lex_compare(a: Span, b: Span) -> int:
    ka, kb = (a.hi, a.lo), (b.hi, b.lo)
    return (ka > kb) - (ka < kb)


def edge_index_K(g: Digraph, e: Span) -> int:
    spans = {a.span for a in g.arcs}
    e = Span(*e)
    if e not in spans:
        raise ValueError(f"span {tuple(e)} is not the span of any arc")
    before = sum(1 for s in spans if s.hi < e.hi)
    same_end = sum(1 for s in spans if s.hi == e.hi and s.lo <= e.lo)
    return before + same_end


@dataclass(frozen=True)
class ConflictGraph:
    graph: Digraph
    ordered_arcs: tuple[Arc, ...]
    adjacency: tuple[tuple[bool, ...], ...]
    # neighbours[i] is a bitmask over 0-based arc positions
    neighbours: tuple[int, ...]

    @property
    def arc_count(self) -> int:
        return len(self.ordered_arcs)

    def index(self, arc: Arc) -> int:
        """1-based index of ``arc``."""
        try:
            return self.ordered_arcs.index(Arc(*arc)) + 1
        except ValueError:
            raise ValueError(f"arc {tuple(arc)} is not in the graph") from None

    def arc(self, k: int) -> Arc:
        """Arc with 1-based index ``k``."""
        if not 1 <= k <= self.arc_count:
            raise IndexError(f"arc index {k} outside 1..{self.arc_count}")
        return self.ordered_arcs[k - 1]

    def conflict_pairs(self) -> list[tuple[int, int]]:
        """All conflicting (i, j), i < j, as 1-based indices."""
        m = self.arc_count
        return [(i + 1, j + 1) for i in range(m) for j in range(i + 1, m) if self.adjacency[i][j]]

    # ArcSet <-> bit vector (bit j-1 set iff arc e_j is present)

    def to_bits(self, arcs) -> int:
        bits = 0
        for a in arcs:
            bits |= 1 << (self.index(a) - 1)
        return bits

    def to_arcs(self, bits: int) -> frozenset[Arc]:
        return frozenset(self.ordered_arcs[j] for j in bit_indices(bits))

    def sorted_arcs(self, bits: int) -> list[Arc]:
        return [self.ordered_arcs[j] for j in bit_indices(bits)]


def bit_indices(bits: int) -> list[int]:
    """0-based positions of set bits, ascending."""
    out = []
    j = 0
    while bits:
        if bits & 1:
            out.append(j)
        bits >>= 1
        j += 1
    return out


def build_conflict_graph(g: Digraph) -> ConflictGraph:
    arcs = tuple(sorted(g.arcs, key=arc_order_key))
    m = len(arcs)
    adj = [[False] * m for _ in range(m)]
    nbrs = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if edges_conflict(arcs[i].span, arcs[j].span):
                adj[i][j] = adj[j][i] = True
                nbrs[i] |= 1 << j
                nbrs[j] |= 1 << i
    return ConflictGraph(g, arcs, tuple(map(tuple, adj)), tuple(nbrs))


def edge_prefix(cg: ConflictGraph, k: int) -> int:
    """E^k as a bit vector: the arcs with index <= k."""
    if not 0 <= k <= cg.arc_count:
        raise ValueError(f"prefix length {k} outside 0..{cg.arc_count}")
    return (1 << k) - 1
