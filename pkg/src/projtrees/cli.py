"""Command-line front end.

Exit status: 0 success, 1 negative ``check`` answer, 2 usage or input error,
3 ``--limit`` exceeded (partial output already printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import oracle
from .conflict import build_conflict_graph
from .digraph import Arc, Digraph, GraphFormatError, parse_adjacency_matrix, parse_arc_list, to_dot, tree_order_key
from .growth import STRATEGIES, enumerate_projective_arborescences
from .laplacian import count_arborescences
from .mis import LimitExceeded, enumerate_maximal_projective_subgraphs

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_LIMIT = 1_000_000
NEEDS_ROOT = {"count", "enumerate", "check"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str = "-"
    format: str = "arc-list"
    root: int | None = None
    strategy: str = "direct"
    limit: int = DEFAULT_LIMIT
    output: str = "text"
    projective: bool = False
    use_oracle: bool = False


def load_graph(cfg: RunConfig, stdin=None) -> Digraph:
    if cfg.input == "-":
        text = (stdin or sys.stdin).read()
    else:
        try:
            with open(cfg.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.input}: {exc.strerror}") from None
    parse = parse_arc_list if cfg.format == "arc-list" else parse_adjacency_matrix
    return parse(text)


def resolve_root(cfg: RunConfig, g: Digraph) -> int:
    root = cfg.root if cfg.root is not None else g.root
    if root is None:
        raise UsageError(f"{cfg.command} needs --root (or 'root <r>' in the header)")
    if not 1 <= root <= g.n:
        raise UsageError(f"root {root} outside 1..{g.n}")
    return root


def format_arcs(arcs) -> str:
    return ", ".join(str(a) for a in arcs)


def cmd_conflicts(cfg: RunConfig, g: Digraph, out) -> int:
    cg = build_conflict_graph(g)
    print(f"# {cg.arc_count} arcs: K tail head", file=out)
    for k, a in enumerate(cg.ordered_arcs, start=1):
        print(f"arc {k} {a.tail} {a.head}", file=out)
    pairs = cg.conflict_pairs()
    print(f"# {len(pairs)} conflicting pairs: K K", file=out)
    for i, j in pairs:
        print(f"conflict {i} {j}", file=out)
    return EXIT_OK


def cmd_subgraphs(cfg: RunConfig, g: Digraph, out) -> int:
    if not g.arcs:
        return EXIT_OK
    status = EXIT_OK
    if cfg.use_oracle:
        order = {a: k for k, a in enumerate(build_conflict_graph(g).ordered_arcs)}
        found = [sorted(s, key=order.__getitem__) for s in oracle.brute_force_maximal_independent_sets(g)]
        found.sort(key=lambda s: [order[a] for a in s])
        if len(found) > cfg.limit:
            found, status = found[:cfg.limit], EXIT_LIMIT
            print(f"warning: more than {cfg.limit} subgraphs; output truncated", file=sys.stderr)
    else:
        try:
            found = enumerate_maximal_projective_subgraphs(g, limit=cfg.limit)
        except LimitExceeded as exc:
            found, status = exc.partial, EXIT_LIMIT
            print(f"warning: {exc}; output is partial", file=sys.stderr)
    for arcs in found:
        if cfg.output == "json":
            print(json.dumps({"arcs": [list(a) for a in arcs]}), file=out)
        else:
            print(format_arcs(arcs), file=out)
    return status


def _trees(cfg: RunConfig, g: Digraph, root: int) -> list[tuple[Arc, ...]]:
    if cfg.use_oracle:
        return oracle.brute_force_projective_arborescences(g, root)
    return [t.key() for t in enumerate_projective_arborescences(g, root, cfg.strategy, cfg.limit)]


def cmd_count(cfg: RunConfig, g: Digraph, out) -> int:
    root = resolve_root(cfg, g)
    if cfg.projective:
        print(len(_trees(cfg, g, root)), file=out)
    elif cfg.use_oracle:
        print(len(oracle.brute_force_arborescences(g, root)), file=out)
    else:
        print(count_arborescences(g, root), file=out)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig, g: Digraph, out) -> int:
    root = resolve_root(cfg, g)
    status = EXIT_OK
    try:
        trees = _trees(cfg, g, root)
    except LimitExceeded as exc:
        trees, status = [t.key() for t in exc.partial], EXIT_LIMIT
        print(f"warning: {exc}; output is partial", file=sys.stderr)
    trees = sorted(tuple(sorted(t, key=tree_order_key)) for t in trees)
    if cfg.use_oracle and len(trees) > cfg.limit:
        trees, status = trees[:cfg.limit], EXIT_LIMIT
        print(f"warning: more than {cfg.limit} trees; output truncated", file=sys.stderr)
    for i, arcs in enumerate(trees, start=1):
        if cfg.output == "dot":
            tree = Digraph(g.n, arcs, root, g.vertices)
            out.write(to_dot(tree, name=f"T{i}"))
        elif cfg.output == "json":
            print(json.dumps({"root": root, "arcs": [list(a) for a in arcs]}), file=out)
        else:
            print(format_arcs(arcs), file=out)
    return status


def cmd_check(cfg: RunConfig, g: Digraph, out) -> int:
    root = resolve_root(cfg, g)
    found = count_arborescences(g, root) > 0
    print("yes" if found else "no", file=out)
    return EXIT_OK if found else EXIT_NO


COMMANDS = {
    "conflicts": cmd_conflicts,
    "subgraphs": cmd_subgraphs,
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projtrees",
        description="Enumerate projective rooted spanning trees of a digraph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "conflicts": "list arcs in lexicographic order and all crossing pairs",
        "subgraphs": "list all maximal projective subgraphs",
        "count": "count spanning arborescences rooted at --root",
        "enumerate": "list projective spanning arborescences rooted at --root",
        "check": "exit 0 if an arborescence rooted at --root exists, 1 otherwise",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin (default)")
        p.add_argument("--format", choices=("arc-list", "matrix"), default="arc-list")
        if name in NEEDS_ROOT:
            p.add_argument("--root", type=int)
        if name in ("count", "enumerate"):
            p.add_argument("--strategy", choices=STRATEGIES, default="direct")
        if name in ("count", "enumerate", "subgraphs"):
            p.add_argument(
                "--oracle", action="store_true",
                help="use the exponential-time brute-force reference instead",
            )
        if name in ("enumerate", "subgraphs"):
            p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
            p.add_argument("--json", dest="output", action="store_const", const="json", default="text")
        if name == "enumerate":
            p.add_argument("--dot", dest="output", action="store_const", const="dot")
        if name == "count":
            p.add_argument("--projective", action="store_true", help="count projective trees only")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        input=ns.input,
        format=ns.format,
        root=getattr(ns, "root", None),
        strategy=getattr(ns, "strategy", "direct"),
        limit=getattr(ns, "limit", DEFAULT_LIMIT),
        output=getattr(ns, "output", "text"),
        projective=getattr(ns, "projective", False),
        use_oracle=getattr(ns, "oracle", False),
    )


def main(argv=None, stdin=None, stdout=None) -> int:
    out = stdout or sys.stdout
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = config_from_args(ns)
    if cfg.limit < 0:
        print("error: --limit must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = load_graph(cfg, stdin)
        return COMMANDS[cfg.command](cfg, g, out)
    except (GraphFormatError, UsageError, oracle.OracleBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
