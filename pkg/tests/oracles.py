"""Naive reference oracles shared by the test modules.

These are deliberately brute force (all injections, all vertex orders) and
share no code with the package searches they check.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from connected_turan.graph import Graph


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges:
        a[u, v] = a[v, u] = True
    return a


@lru_cache(maxsize=None)
def injections(n: int, k: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n), k)), dtype=np.int64).reshape(-1, k)


def naive_contains(host: Graph, pattern: Graph) -> bool:
    """Try every injection of pattern vertices into host vertices."""
    if pattern.n > host.n:
        return False
    a = adjacency_matrix(host)
    maps = injections(host.n, pattern.n)
    ok = np.ones(len(maps), dtype=bool)
    for u, v in pattern.edges:
        ok &= a[maps[:, u], maps[:, v]]
    return bool(ok.any())


def naive_circumference(g: Graph) -> int:
    """Longest cycle by testing every ordered vertex sequence as a cycle."""
    a = adjacency_matrix(g)
    for length in range(g.n, 2, -1):
        seqs = injections(g.n, length)
        ok = np.ones(len(seqs), dtype=bool)
        for i in range(length):
            ok &= a[seqs[:, i], seqs[:, (i + 1) % length]]
        if ok.any():
            return length
    return 0


def naive_longest_path(g: Graph) -> int:
    a = adjacency_matrix(g)
    for length in range(g.n, 1, -1):
        seqs = injections(g.n, length)
        ok = np.ones(len(seqs), dtype=bool)
        for i in range(length - 1):
            ok &= a[seqs[:, i], seqs[:, i + 1]]
        if ok.any():
            return length
    return 1


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
