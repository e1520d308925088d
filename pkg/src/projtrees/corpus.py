"""Seeded random digraphs for cross-checking against the oracles."""

from __future__ import annotations

import random
from itertools import permutations

from .digraph import Arc, Digraph


def random_digraph(rng: random.Random, n: int, density: float) -> Digraph:
    arcs = [Arc(u, v) for u, v in permutations(range(1, n + 1), 2) if rng.random() < density]
    return Digraph(n, tuple(arcs))


def random_corpus(count: int, sizes=range(2, 8), densities=(0.15, 0.3, 0.5, 0.7, 0.85, 1.0), seed: int = 0):
    """``count`` digraphs cycling through every (size, density) pair."""
    rng = random.Random(seed)
    grid = [(n, p) for n in sizes for p in densities]
    return [random_digraph(rng, *grid[i % len(grid)]) for i in range(count)]
