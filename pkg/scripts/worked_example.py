"""Walk through the 6-vertex worked example: crossings, maximal subgraphs, counts, trees."""

from projtrees import (
    PreTree,
    build_conflict_graph,
    count_arborescences,
    enumerate_maximal_projective_subgraphs,
    enumerate_projective_arborescences,
    next_generation,
    parse_adjacency_matrix,
    to_dot,
)

MATRIX = """\
0 0 0 0 0 0
0 0 1 0 0 1
0 0 0 0 0 1
1 1 0 0 0 0
0 1 0 1 0 0
0 0 0 0 0 0
"""


def main():
    g = parse_adjacency_matrix(MATRIX)
    cg = build_conflict_graph(g)

    print("arcs in lexicographic order:")
    for k, a in enumerate(cg.ordered_arcs, start=1):
        print(f"  K={k}  {a.tail}->{a.head}  span {tuple(a.span)}")
    pairs = cg.conflict_pairs()
    print(f"{len(pairs)} crossing pairs:")
    for i, j in pairs:
        print(f"  {tuple(cg.arc(i).span)} x {tuple(cg.arc(j).span)}")

    print("maximal projective subgraphs:")
    for arcs in enumerate_maximal_projective_subgraphs(g, check=True):
        print("  " + ", ".join(f"{a.tail}->{a.head}" for a in arcs))

    print("spanning arborescences per root:", {r: count_arborescences(g, r) for r in g.vertices})

    rejected = []
    current = [PreTree(5)]
    while current:
        current, spanning = next_generation(g, current, on_reject=rejected.append)
        for t in current:
            print(f"  kept   {t}")
    for t in rejected:
        print(f"  pruned {t}")

    for strategy in ("direct", "via-subgraphs"):
        trees = enumerate_projective_arborescences(g, 5, strategy)
        print(f"projective trees rooted at 5 ({strategy}): {len(trees)}")

    print()
    print(to_dot(g))


if __name__ == "__main__":
    main()
