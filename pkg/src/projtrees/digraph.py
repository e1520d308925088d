"""Digraphs over linearly ordered vertices 1..n, text parsers and DOT output."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class GraphFormatError(ValueError):
    """Malformed graph input; ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Span(NamedTuple):
    lo: int
    hi: int


class Arc(NamedTuple):
    tail: int
    head: int

    @property
    def span(self) -> Span:
        if self.tail < self.head:
            return Span(self.tail, self.head)
        return Span(self.head, self.tail)

    def __str__(self) -> str:
        return f"{self.tail} {self.head}"


def arc_order_key(arc: Arc) -> tuple[int, int, int]:
    """Lexicographic arc order: span end, then span beginning, then tail."""
    lo, hi = arc.span
    return (hi, lo, arc.tail)


def tree_order_key(arc: Arc) -> tuple[int, int]:
    return (arc.head, arc.tail)


ArcSet = frozenset  # frozenset[Arc]


@dataclass(frozen=True)
class Digraph:
    """Simple loop-free digraph.

    ``vertices`` defaults to all of 1..n. Induced subgraphs keep the original
    labels, so ``vertices`` may be a proper subset of 1..n.
    """

    n: int
    arcs: tuple[Arc, ...] = ()
    root: int | None = None
    vertices: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        verts = tuple(range(1, self.n + 1)) if self.vertices is None else tuple(sorted(set(self.vertices)))
        for v in verts:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside 1..{self.n}")
        vset = set(verts)
        arcs = tuple(sorted((Arc(*a) for a in self.arcs), key=arc_order_key))
        seen = set()
        for a in arcs:
            if a.tail == a.head:
                raise ValueError(f"loop arc {a}")
            if a.tail not in vset or a.head not in vset:
                raise ValueError(f"arc {a} has an endpoint outside the vertex set")
            if a in seen:
                raise ValueError(f"duplicate arc {a}")
            seen.add(a)
        if self.root is not None and self.root not in vset:
            raise ValueError(f"root {self.root} is not a vertex")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def _derived(cls, n: int, arcs: tuple[Arc, ...], root: int | None, vertices: tuple[int, ...]) -> Digraph:
        # caller guarantees arcs are valid and already in arc order
        g = object.__new__(cls)
        for name, value in (("n", n), ("arcs", arcs), ("root", root), ("vertices", vertices)):
            object.__setattr__(g, name, value)
        return g

    @property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    def out_arcs(self, v: int) -> list[Arc]:
        return [a for a in self.arcs if a.tail == v]

    def in_arcs(self, v: int) -> list[Arc]:
        return [a for a in self.arcs if a.head == v]

    def adjacency_matrix(self) -> list[list[int]]:
        """Full n x n 0/1 matrix, row = tail, column = head (0-based)."""
        m = [[0] * self.n for _ in range(self.n)]
        for t, h in self.arcs:
            m[t - 1][h - 1] = 1
        return m

    def with_root(self, root: int | None) -> Digraph:
        if root is not None and root not in self.vertices:
            raise ValueError(f"root {root} is not a vertex")
        return Digraph._derived(self.n, self.arcs, root, self.vertices)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_arc_list(text: str) -> Digraph:
    """Parse ``n <count> [root <r>]`` followed by ``<tail> <head>`` lines."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("missing header line 'n <count>'") from None
    if header[0] != "n" or len(header) not in (2, 4) or (len(header) == 4 and header[2] != "root"):
        raise GraphFormatError("header must be 'n <count> [root <r>]'", lineno)
    n = _ints(header[1:2], lineno)[0]
    if n < 0:
        raise GraphFormatError("vertex count must be non-negative", lineno)
    root = None
    if len(header) == 4:
        root = _ints(header[3:4], lineno)[0]
        if not 1 <= root <= n:
            raise GraphFormatError(f"root {root} outside 1..{n}", lineno)

    arcs: dict[Arc, int] = {}
    for lineno, toks in lines:
        if len(toks) != 2:
            raise GraphFormatError("expected '<tail> <head>'", lineno)
        tail, head = _ints(toks, lineno)
        for v in (tail, head):
            if not 1 <= v <= n:
                raise GraphFormatError(f"vertex {v} outside 1..{n}", lineno)
        if tail == head:
            raise GraphFormatError(f"loop arc {tail} {head}", lineno)
        arc = Arc(tail, head)
        if arc in arcs:
            raise GraphFormatError(f"duplicate arc {arc} (first seen on line {arcs[arc]})", lineno)
        arcs[arc] = lineno
    return Digraph(n, tuple(arcs), root)


def parse_adjacency_matrix(text: str) -> Digraph:
    rows = list(_content_lines(text))
    n = len(rows)
    arcs = []
    for i, (lineno, toks) in enumerate(rows, start=1):
        if len(toks) != n:
            raise GraphFormatError(f"matrix is not square: row has {len(toks)} entries, expected {n}", lineno)
        for j, entry in enumerate(_ints(toks, lineno), start=1):
            if entry not in (0, 1):
                raise GraphFormatError(f"entry ({i},{j}) = {entry} is not 0 or 1", lineno)
            if entry and i == j:
                raise GraphFormatError(f"nonzero diagonal entry ({i},{i})", lineno)
            if entry:
                arcs.append(Arc(i, j))
    return Digraph(n, tuple(arcs))


def to_arc_list(g: Digraph) -> str:
    header = f"n {g.n}" if g.root is None else f"n {g.n} root {g.root}"
    return "\n".join([header, *(str(a) for a in g.arcs)]) + "\n"


def induced_subgraph(g: Digraph, keep: Iterable[int]) -> Digraph:
    keep = set(keep)
    for v in keep:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    keep &= set(g.vertices)
    arcs = tuple(a for a in g.arcs if a.tail in keep and a.head in keep)
    root = g.root if g.root in keep else None
    return Digraph._derived(g.n, arcs, root, tuple(sorted(keep)))


def subgraph_with_arcs(g: Digraph, arcs: Iterable[Arc]) -> Digraph:
    arcs = [Arc(*a) for a in arcs]
    present = g.arc_set
    for a in arcs:
        if a not in present:
            raise ValueError(f"arc {a} is not in the graph")
    return Digraph._derived(g.n, tuple(sorted(set(arcs), key=arc_order_key)), g.root, g.vertices)


def to_dot(g: Digraph, highlight: Iterable[Arc] = (), name: str = "G") -> str:
    highlight = {Arc(*a) for a in highlight}
    missing = highlight - g.arc_set
    if missing:
        raise ValueError(f"highlighted arcs not in graph: {sorted(missing)}")
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in g.vertices:
        attrs = ' [shape=doublecircle]' if v == g.root else ""
        lines.append(f'  {v}{attrs};')
    for a in g.arcs:
        style = ' [color=red, penwidth=2]' if a in highlight else ""
        lines.append(f"  {a.tail} -> {a.head}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
