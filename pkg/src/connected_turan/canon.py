"""Canonical labelling by colour refinement and individualisation.

The search tree is the usual one: refine to an equitable ordered partition,
branch on the first non-singleton cell, and keep the leaf whose relabelled
adjacency rows are lexicographically largest. Children that lie in the same
orbit as an already explored sibling are skipped; orbits come from the
automorphisms found at equal leaves plus twin transpositions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits, twin_classes


@dataclass(frozen=True)
class Labelling:
    certificate: tuple[int, ...]
    # order[i] is the vertex that receives canonical label i
    order: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def last(self) -> int:
        return self.order[-1]


def refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement, with new cells ordered by neighbour counts."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def root_partition(g: Graph) -> list[list[int]]:
    return refine(g.adj, [list(range(g.n))])


def _individualise(cells: list[list[int]], idx: int, v: int) -> list[list[int]]:
    cell = cells[idx]
    return cells[:idx] + [[v], [u for u in cell if u != v]] + cells[idx + 1:]


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in iter_bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def canonical_labelling(g: Graph, cells: list[list[int]] | None = None) -> Labelling:
    n = g.n
    adj = g.adj
    if n == 0:
        return Labelling((), (), ())
    if cells is None:
        cells = root_partition(g)
    twins = twin_classes(g)
    twin_members: dict[int, list[int]] = {}
    for v, c in enumerate(twins):
        twin_members.setdefault(c, []).append(v)
    twin_groups = [m for m in twin_members.values() if len(m) > 1]

    best_cert: tuple[int, ...] | None = None
    best_order: list[int] = []
    gens: list[tuple[int, ...]] = []

    def orbits_fixing(prefix: list[int]) -> list[int]:
        parent = list(range(n))
        fixed = 0
        for v in prefix:
            fixed |= 1 << v
        for gamma in gens:
            if any(gamma[v] != v for v in prefix):
                continue
            for v in range(n):
                a, b = _find(parent, v), _find(parent, gamma[v])
                if a != b:
                    parent[a] = b
        for group in twin_groups:
            free = [v for v in group if not fixed >> v & 1]
            for v in free[1:]:
                a, b = _find(parent, v), _find(parent, free[0])
                if a != b:
                    parent[a] = b
        return parent

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal best_cert, best_order
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), -1)
        if idx < 0:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best_cert is None or cert > best_cert:
                best_cert, best_order = cert, order
            elif cert == best_cert:
                gamma = [0] * n
                for a, b in zip(order, best_order):
                    gamma[a] = b
                gens.append(tuple(gamma))
            return
        tried: list[int] = []
        for v in sorted(cells[idx]):
            if tried:
                parent = orbits_fixing(prefix)
                rv = _find(parent, v)
                if any(_find(parent, t) == rv for t in tried):
                    continue
            tried.append(v)
            search(refine(adj, _individualise(cells, idx, v)), prefix + [v])

    search(cells, [])
    assert best_cert is not None
    return Labelling(best_cert, tuple(best_order), tuple(gens))


def certificate(g: Graph) -> tuple[int, ...]:
    return canonical_labelling(g).certificate


def canonical_form(g: Graph) -> Graph:
    lab = canonical_labelling(g)
    perm = [0] * g.n
    for i, v in enumerate(lab.order):
        perm[v] = i
    return g.relabel(perm)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and certificate(a) == certificate(b)


def same_orbit(lab: Labelling, u: int, v: int, g: Graph) -> bool:
    """True if the automorphisms recorded in ``lab`` (and twin swaps) map ``u`` to ``v``.

    ``False`` is inconclusive: the recorded generators need not span the group.
    """
    if u == v:
        return True
    twins = twin_classes(g)
    if twins[u] == twins[v]:
        return True
    parent = list(range(g.n))
    for gamma in lab.generators:
        for x in range(g.n):
            a, b = _find(parent, x), _find(parent, gamma[x])
            if a != b:
                parent[a] = b
    for x in range(g.n):
        if twins[x] != x:
            a, b = _find(parent, x), _find(parent, twins[x])
            if a != b:
                parent[a] = b
    return _find(parent, u) == _find(parent, v)
