"""Cross-check every stage against the brute-force oracles on random digraphs.

    python scripts/oracle_sweep.py --count 500 --seed 0
"""

import argparse
import time
from collections import Counter

from projtrees import count_arborescences, enumerate_maximal_projective_subgraphs, enumerate_projective_arborescences
from projtrees.corpus import random_corpus
from projtrees.oracle import brute_force_arborescences, brute_force_maximal_independent_sets, is_projective


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=504)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()

    corpus = random_corpus(args.count, sizes=range(2, args.max_n + 1), seed=args.seed)
    timing = Counter()
    mismatches = Counter()
    instances = 0
    for g in corpus:
        if g.arcs:
            t0 = time.perf_counter()
            got = {frozenset(s) for s in enumerate_maximal_projective_subgraphs(g, check=True)}
            timing["subgraphs"] += time.perf_counter() - t0
            mismatches["subgraphs"] += got != set(brute_force_maximal_independent_sets(g))
        for r in g.vertices:
            instances += 1
            t0 = time.perf_counter()
            trees = brute_force_arborescences(g, r)
            timing["oracle"] += time.perf_counter() - t0
            t0 = time.perf_counter()
            mismatches["count"] += count_arborescences(g, r) != len(trees)
            timing["count"] += time.perf_counter() - t0
            expected = [t for t in trees if is_projective(t)]
            for strategy in ("direct", "via-subgraphs"):
                t0 = time.perf_counter()
                found = [t.key() for t in enumerate_projective_arborescences(g, r, strategy)]
                timing[strategy] += time.perf_counter() - t0
                mismatches[strategy] += found != expected

    print(f"{len(corpus)} graphs, {instances} (graph, root) instances")
    for stage in ("subgraphs", "count", "direct", "via-subgraphs", "oracle"):
        print(f"  {stage:14s} mismatches={mismatches[stage]:4d}  time={timing[stage]:7.2f}s")


if __name__ == "__main__":
    main()
