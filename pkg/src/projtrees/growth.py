"""Layer-by-layer growth of rooted projective pre-spanning trees.

A pre-tree of generation k holds every vertex of some spanning arborescence
up to depth k. Only the vertices at depth k (the frontier) may receive
children in the next step, so each spanning tree is reached along exactly one
chain of pre-trees. Branches that can no longer be completed are pruned with
a matrix-tree count on the residual graph with a synthetic source standing in
for the frontier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from .conflict import edges_conflict
from .digraph import Arc, Digraph, induced_subgraph, subgraph_with_arcs, tree_order_key
from .laplacian import bareiss_determinant, has_arborescence
from .mis import LimitExceeded, enumerate_maximal_projective_subgraphs

STRATEGIES = ("direct", "via-subgraphs")


@dataclass(frozen=True, eq=False)
class PreTree:
    root: int
    arcs: frozenset[Arc] = frozenset()
    depth: dict[int, int] = field(default_factory=dict)
    generation: int = 0

    def __post_init__(self):
        if not self.depth:
            object.__setattr__(self, "depth", {self.root: 0})

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.depth)

    @property
    def frontier(self) -> list[int]:
        return sorted(v for v, d in self.depth.items() if d == self.generation)

    def spans(self, g: Digraph) -> bool:
        return len(self.depth) == len(g.vertices)

    def key(self) -> tuple[Arc, ...]:
        """Canonical encoding: arcs sorted by (head, tail)."""
        return tuple(sorted(self.arcs, key=tree_order_key))

    def grow(self, new_arcs: Iterable[Arc]) -> PreTree:
        depth = dict(self.depth)
        for a in new_arcs:
            depth[a.head] = self.generation + 1
        return PreTree(self.root, self.arcs | frozenset(new_arcs), depth, self.generation + 1)

    def __eq__(self, other):
        if not isinstance(other, PreTree):
            return NotImplemented
        return (self.root, self.arcs, self.generation) == (other.root, other.arcs, other.generation)

    def __hash__(self):
        return hash((self.root, self.arcs, self.generation))

    def __repr__(self):
        arcs = ", ".join(str(a) for a in self.key())
        return f"PreTree(root={self.root}, gen={self.generation}, arcs=[{arcs}])"


class ExtensionGraph(NamedTuple):
    base: Digraph
    star_vertex: int
    star_arcs: tuple[Arc, ...]

    def as_digraph(self) -> Digraph:
        """Base plus the star vertex, with vertex count widened to hold it."""
        verts = self.base.vertices + (self.star_vertex,)
        # star arcs end at the largest label, so they already sort last
        return Digraph._derived(self.star_vertex, self.base.arcs + self.star_arcs, self.star_vertex, verts)


class Generation(NamedTuple):
    growing: list[PreTree]
    spanning: list[PreTree]


def _check_root(g: Digraph, r: int) -> None:
    if r not in g.vertices:
        raise ValueError(f"root {r} is not a vertex (1..{g.n})")


def init_generation(g: Digraph, r: int) -> list[PreTree]:
    _check_root(g, r)
    if not has_arborescence(g, r):
        return []
    return [PreTree(r)]


def frontier_extensions(g: Digraph, t: PreTree, check_conflicts: bool = True) -> list[frozenset[Arc]]:
    """All non-empty ways to hang children off the frontier of ``t``.

    Each result gives every new vertex one parent on the frontier and keeps
    all arcs (new and old) pairwise non-crossing. A spanning ``t`` has only
    the empty extension.
    """
    if t.spans(g):
        return [frozenset()]
    inside = t.vertices
    tree_spans = [a.span for a in t.arcs]
    frontier = set(t.frontier)
    usable = [
        a for a in g.arcs
        if a.tail in frontier and a.head not in inside
        and not (check_conflicts and any(edges_conflict(a.span, s) for s in tree_spans))
    ]

    out: list[frozenset[Arc]] = []
    chosen: list[Arc] = []
    heads: set[int] = set()

    def walk(i: int) -> None:
        if i == len(usable):
            if chosen:
                out.append(frozenset(chosen))
            return
        walk(i + 1)
        a = usable[i]
        if a.head in heads:
            return
        if check_conflicts and any(edges_conflict(a.span, b.span) for b in chosen):
            return
        chosen.append(a)
        heads.add(a.head)
        walk(i + 1)
        chosen.pop()
        heads.discard(a.head)

    walk(0)
    return out


def build_extension_graph(g: Digraph, t: PreTree) -> ExtensionGraph:
    if t.spans(g):
        raise ValueError("pre-tree already spans the graph")
    inside = t.vertices
    base = induced_subgraph(g, [v for v in g.vertices if v not in inside])
    frontier = set(t.frontier)
    targets = sorted({a.head for a in g.arcs if a.tail in frontier and a.head not in inside})
    star = g.n + 1
    return ExtensionGraph(base.with_root(None), star, tuple(Arc(star, z) for z in targets))


def extension_count(g: Digraph, t: PreTree) -> int:
    """Number of star-rooted arborescences of the extension graph (1 if spanning).

    Fills the Laplacian of the extension graph with the star row and column
    already deleted, skipping the intermediate Digraph objects.
    """
    if t.spans(g):
        return 1
    inside = t.depth
    frontier = t.generation
    pos = {v: i for i, v in enumerate(v for v in g.vertices if v not in inside)}
    size = len(pos)
    minor = [[0] * size for _ in range(size)]
    from_star = set()
    for tail, head in g.arcs:
        h = pos.get(head)
        if h is None:
            continue
        i = pos.get(tail)
        if i is not None:
            minor[i][h] -= 1
            minor[h][h] += 1
        elif inside[tail] == frontier:
            from_star.add(h)
    for h in from_star:
        minor[h][h] += 1
    return bareiss_determinant(minor)


def is_extendable(g: Digraph, t: PreTree) -> bool:
    return extension_count(g, t) > 0


def next_generation(
    g: Digraph,
    trees: Iterable[PreTree],
    check_conflicts: bool = True,
    on_reject: Callable[[PreTree], None] | None = None,
) -> Generation:
    trees = list(trees)
    if len({t.generation for t in trees}) > 1:
        raise ValueError("pre-trees of mixed generations")
    growing: list[PreTree] = []
    spanning: list[PreTree] = []
    for t in trees:
        for ext in frontier_extensions(g, t, check_conflicts):
            if not ext:
                continue
            child = t.grow(ext)
            if child.spans(g):
                spanning.append(child)
            elif is_extendable(g, child):
                growing.append(child)
            elif on_reject is not None:
                on_reject(child)
    return Generation(growing, spanning)


def grow_all(
    g: Digraph,
    r: int,
    check_conflicts: bool = True,
    on_reject: Callable[[PreTree], None] | None = None,
    limit: int | None = None,
) -> list[PreTree]:
    """Run the generations from T(0, r) until nothing is left to grow."""
    current = init_generation(g, r)
    done = [t for t in current if t.spans(g)]
    current = [t for t in current if not t.spans(g)]
    while current:
        current, spanning = next_generation(g, current, check_conflicts, on_reject)
        done.extend(spanning)
        if limit is not None and len(done) > limit:
            raise LimitExceeded(f"more than {limit} trees", sorted(done, key=PreTree.key)[:limit])
    return done


def enumerate_projective_arborescences(
    g: Digraph,
    r: int,
    strategy: str = "direct",
    limit: int | None = None,
    on_reject: Callable[[PreTree], None] | None = None,
) -> list[PreTree]:
    """All projective spanning arborescences of ``g`` rooted at ``r``, canonically sorted."""
    _check_root(g, r)
    if strategy == "direct":
        found = grow_all(g, r, True, on_reject, limit)
    elif strategy == "via-subgraphs":
        subgraphs = enumerate_maximal_projective_subgraphs(g) if g.arcs else [[]]
        unique: dict[tuple[Arc, ...], PreTree] = {}
        for arcs in subgraphs:
            h = subgraph_with_arcs(g, arcs)
            # arcs of one maximal subgraph never cross, so no conflict checks
            for t in grow_all(h, r, False, on_reject):
                unique.setdefault(t.key(), t)
            if limit is not None and len(unique) > limit:
                raise LimitExceeded(f"more than {limit} trees", sorted(unique.values(), key=PreTree.key)[:limit])
        found = list(unique.values())
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    return sorted(found, key=PreTree.key)
