"""Trees: barycentres, brooms, spiders, bare paths and free-tree enumeration.

Path lengths in this module are counted in edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import GraphError, ParameterError
from .graph import Graph, bipartition, edge_count, is_connected, iter_bits

MAX_ENUMERATION_ORDER = 14


@dataclass(frozen=True, repr=False)
class Tree(Graph):
    def __post_init__(self):
        super().__post_init__()
        if self.n == 0 or not is_connected(self) or edge_count(self) != self.n - 1:
            raise GraphError("not a tree")

    @classmethod
    def from_graph(cls, g: Graph) -> "Tree":
        return cls(g.n, g.adj)

    def __repr__(self) -> str:
        return f"Tree(n={self.n})"


@dataclass(frozen=True)
class SpiderShape:
    center: int
    legs: tuple[int, ...]


def barycenter(t: Tree) -> list[int]:
    """Vertices lying in a largest component of ``t - e`` for every edge ``e``.

    Direct check of the definition, one traversal per edge. Where both sides
    of an edge have equal size, both count as largest.
    """
    good = [True] * t.n
    for u, v in t.edges:
        side_u = _component_mask(t, u, v)
        su = side_u.bit_count()
        sv = t.n - su
        for x in range(t.n):
            in_u = bool(side_u >> x & 1)
            if (in_u and su < sv) or (not in_u and sv < su):
                good[x] = False
    return [x for x in range(t.n) if good[x]]


def _component_mask(t: Graph, u: int, v: int) -> int:
    seen = 1 << u
    frontier = seen
    while frontier:
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= t.adj[x]
        if frontier & (1 << u):
            nxt &= ~(1 << v)
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def broom(k: int, d: int) -> Tree:
    """B(k, d): path ``0 - 1 - ... - (d-1)`` plus leaves ``d..k-1`` on vertex ``d-1``."""
    if not (k >= d + 1 >= 2):
        raise ParameterError(f"broom needs k >= d + 1 >= 2, got k={k}, d={d}")
    edges = [(i, i + 1) for i in range(d - 1)]
    edges += [(d - 1, j) for j in range(d, k)]
    return Tree.from_graph(Graph.from_edges(k, edges))


def path_tree(k: int) -> Tree:
    return Tree.from_graph(Graph.from_edges(k, ((i, i + 1) for i in range(k - 1))))


def star_tree(leaves: int) -> Tree:
    return Tree.from_graph(Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1))))


def binary_tree(r: int) -> Tree:
    """Complete binary tree on ``2**(2r) - 1`` vertices, heap-labelled from the root 0."""
    if r < 1:
        raise ParameterError("binary_tree needs r >= 1")
    n = 2 ** (2 * r) - 1
    return Tree.from_graph(Graph.from_edges(n, (((i - 1) // 2, i) for i in range(1, n))))


def as_spider(t: Tree) -> Optional[SpiderShape]:
    degs = t.degrees()
    branch = [v for v in range(t.n) if degs[v] >= 3]
    if len(branch) > 1:
        return None
    if t.n == 1:
        return SpiderShape(0, ())
    if branch:
        center = branch[0]
    else:
        center = min(v for v in range(t.n) if degs[v] <= 1)
    legs = []
    for first in iter_bits(t.adj[center]):
        prev, cur, length = center, first, 1
        while degs[cur] == 2:
            nxt = next(u for u in iter_bits(t.adj[cur]) if u != prev)
            prev, cur, length = cur, nxt, length + 1
        legs.append(length)
    return SpiderShape(center, tuple(sorted(legs)))


def max_bare_path(t: Tree) -> int:
    """Longest path whose internal vertices all have degree 2 in ``t``."""
    if t.n < 2:
        raise ParameterError("bare paths need at least 2 vertices")
    degs = t.degrees()
    if max(degs) <= 2:
        return t.n - 1
    best = 1
    seen = [False] * t.n
    for v in range(t.n):
        if degs[v] != 2 or seen[v]:
            continue
        # size of the chain of degree-2 vertices through v
        size = 0
        stack = [v]
        seen[v] = True
        while stack:
            x = stack.pop()
            size += 1
            for u in iter_bits(t.adj[x]):
                if degs[u] == 2 and not seen[u]:
                    seen[u] = True
                    stack.append(u)
        best = max(best, size + 1)
    return best


def diameter(t: Graph) -> int:
    def farthest(s: int) -> tuple[int, int]:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for u in iter_bits(t.adj[x]):
                    if u not in dist:
                        dist[u] = dist[x] + 1
                        nxt.append(u)
            frontier = nxt
        far = max(dist, key=lambda x: (dist[x], -x))
        return far, dist[far]

    a, _ = farthest(0)
    return farthest(a)[1]


def centers(t: Graph) -> list[int]:
    """The one or two central vertices, found by peeling leaves."""
    degs = t.degrees()
    remaining = t.n
    layer = [v for v in range(t.n) if degs[v] <= 1]
    removed = [False] * t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed[v] = True
            for u in iter_bits(t.adj[v]):
                if not removed[u]:
                    degs[u] -= 1
                    if degs[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(v for v in range(t.n) if not removed[v])


def _rooted_code(t: Graph, root: int, parent: int) -> str:
    kids = [_rooted_code(t, u, root) for u in iter_bits(t.adj[root]) if u != parent]
    return "(" + "".join(sorted(kids)) + ")"


def canonical_string(t: Graph) -> str:
    """AHU parenthesis code rooted at the centre (minimum over two centres)."""
    return min(_rooted_code(t, c, -1) for c in centers(t))


def canonical_tree(t: Tree) -> Tree:
    """Relabel ``t`` in pre-order of its canonical rooted code."""
    best = None
    for c in centers(t):
        code = _rooted_code(t, c, -1)
        if best is None or code < best[0]:
            best = (code, c)
    assert best is not None
    order: list[int] = []

    def walk(v: int, parent: int) -> None:
        order.append(v)
        kids = [u for u in iter_bits(t.adj[v]) if u != parent]
        kids.sort(key=lambda u: _rooted_code(t, u, v))
        for u in kids:
            walk(u, v)

    walk(best[1], -1)
    perm = [0] * t.n
    for i, v in enumerate(order):
        perm[v] = i
    return Tree.from_graph(t.relabel(perm))


def enumerate_trees(k: int) -> Iterator[Tree]:
    """One tree per isomorphism class on ``k`` vertices.

    Grown level by level by attaching a leaf everywhere and keeping the first
    tree seen for each canonical code. Yielded in order of canonical code.
    """
    if not 1 <= k <= MAX_ENUMERATION_ORDER:
        raise ParameterError(f"tree enumeration supports 1 <= k <= {MAX_ENUMERATION_ORDER}")
    yield from _tree_level(k)


_LEVELS: dict[int, list[Tree]] = {}


def _tree_level(k: int) -> list[Tree]:
    if k in _LEVELS:
        return _LEVELS[k]
    if k == 1:
        level = [Tree(1, (0,))]
    else:
        found: dict[str, Tree] = {}
        for parent in _tree_level(k - 1):
            for v in range(parent.n):
                child = Graph(k, parent.adj[:v] + (parent.adj[v] | 1 << (k - 1),) + parent.adj[v + 1:] + (1 << v,))
                code = canonical_string(child)
                if code not in found:
                    found[code] = Tree.from_graph(child)
        level = [canonical_tree(found[c]) for c in sorted(found)]
    _LEVELS[k] = level
    return level


def spider_subtrees(t: Tree, max_center_degree: int = 3) -> list[int]:
    """Vertex masks of every subtree of ``t`` that is a spider.

    A spider here has at most one vertex of degree 3 or more, and that
    vertex has degree at most ``max_center_degree`` inside the subtree.
    """
    out = []
    seen: set[int] = set()
    stack = [1 << v for v in range(t.n)]
    while stack:
        mask = stack.pop()
        if mask in seen:
            continue
        seen.add(mask)
        big = 0
        ok = True
        for x in iter_bits(mask):
            d = (t.adj[x] & mask).bit_count()
            if d >= 3:
                big += 1
                if big > 1 or d > max_center_degree:
                    ok = False
                    break
        if not ok:
            continue
        out.append(mask)
        frontier = 0
        for x in iter_bits(mask):
            frontier |= t.adj[x]
        for u in iter_bits(frontier & ~mask):
            stack.append(mask | 1 << u)
    return sorted(out)


def max_disjoint_spider_pair(t: Tree, max_center_degree: int = 3) -> int:
    """Largest ``|S1| + |S2|`` over vertex-disjoint spider subtrees."""
    spiders = sorted(spider_subtrees(t, max_center_degree), key=lambda m: -m.bit_count())
    best = 0
    for i, a in enumerate(spiders):
        sa = a.bit_count()
        if 2 * sa <= best:
            break
        for b in spiders[i + 1:]:
            sb = b.bit_count()
            if sa + sb <= best:
                break
            if not a & b:
                best = sa + sb
                break
    return best


def bipartition_sizes(t: Graph) -> tuple[int, int]:
    parts = bipartition(t)
    assert parts is not None
    return len(parts[0]), len(parts[1])
