"""Tree containment, long cycles and long paths in host graphs.

All searches are exhaustive backtracking. They share one pruning rule:
at a choice point, two unused candidates that are twins in the host are
interchangeable (swapping them is an automorphism fixing everything already
placed), so only the first is tried. This never changes which witness is
found first, only how much failing work is repeated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceeded
from .graph import Graph, components, iter_bits, reachable_mask, twin_classes, blocks
from .trees import Tree, barycenter


@dataclass(frozen=True)
class EmbeddingMap:
    # image[p] is the host vertex carrying pattern vertex p
    image: tuple[int, ...]

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        if len(self.image) != pattern.n or len(set(self.image)) != pattern.n:
            return False
        if any(not 0 <= h < host.n for h in self.image):
            return False
        return all(host.has_edge(self.image[u], self.image[v]) for u, v in pattern.edges)

    def pairs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.image))


class _Budget:
    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.limit)


def _pattern_plan(pattern: Tree) -> tuple[int, list[int], list[int], list[int]]:
    """Root, parent array, internal vertices in placement order, deferred leaves."""
    root = barycenter(pattern)[0]
    k = pattern.n
    parent = [-1] * k
    order = [root]
    seen = 1 << root
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in iter_bits(pattern.adj[v] & ~seen):
            parent[u] = v
            seen |= 1 << u
            order.append(u)
    size = [1] * k
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    degs = pattern.degrees()
    internal: list[int] = []

    def walk(v: int) -> None:
        internal.append(v)
        kids = [u for u in iter_bits(pattern.adj[v]) if u != parent[v] and degs[u] > 1]
        kids.sort(key=lambda u: (-size[u], u))
        for u in kids:
            walk(u)

    walk(root)
    leaves = [v for v in range(k) if v != root and degs[v] == 1]
    return root, parent, internal, leaves


def _match_leaves(host: Graph, image: list[int], used: int, leaves: list[int], parent: list[int]) -> bool:
    """Assign leaves to distinct unused neighbours of their parents' images (Kuhn)."""
    owner: dict[int, int] = {}
    options = [list(iter_bits(host.adj[image[parent[leaf]]] & ~used)) for leaf in leaves]

    def augment(i: int, visited: set[int]) -> bool:
        for h in options[i]:
            if h in visited:
                continue
            visited.add(h)
            if h not in owner or augment(owner[h], visited):
                owner[h] = i
                return True
        return False

    for i in range(len(leaves)):
        if not augment(i, set()):
            return False
    for h, i in owner.items():
        image[leaves[i]] = h
    return True


def find_tree_embedding(
    host: Graph,
    pattern: Tree,
    budget: Optional[int] = None,
    prune_twins: bool = True,
) -> Optional[EmbeddingMap]:
    """A copy of ``pattern`` inside ``host``, or ``None`` if there is none.

    The pattern is rooted at its (lowest-index) barycentre and its internal
    vertices are placed in depth-first order, larger subtrees first. Host
    candidates are tried by descending degree, then index. Leaves are placed
    last in one bipartite matching. ``budget`` caps the number of search
    nodes; running out raises :class:`BudgetExceeded`.
    """
    k = pattern.n
    if k > host.n:
        return None
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    if any(p > h for p, h in zip(sorted(pdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None
    by_degree = sorted(range(host.n), key=lambda h: (-hdeg[h], h))
    if k == 1:
        return EmbeddingMap((by_degree[0],))

    rank = [0] * host.n
    for i, h in enumerate(by_degree):
        rank[h] = i
    at_least = [0] * (max(pdeg) + 1)
    for t in range(len(at_least)):
        for h in range(host.n):
            if hdeg[h] >= t:
                at_least[t] |= 1 << h
    tclass = twin_classes(host) if prune_twins else list(range(host.n))
    adj = host.adj

    root, parent, internal, leaves = _pattern_plan(pattern)
    pending = [0] * k
    image = [-1] * k
    counter = _Budget(budget)
    placed: list[int] = []

    def capacity_ok(used: int) -> bool:
        free = ~used
        for x in placed:
            if pending[x] and (adj[image[x]] & free).bit_count() < pending[x]:
                return False
        return True

    def candidates(mask: int) -> list[int]:
        return sorted(iter_bits(mask), key=rank.__getitem__)

    def place(i: int, used: int) -> bool:
        counter.tick()
        if i == len(internal):
            return _match_leaves(host, image, used, leaves, parent)
        p = internal[i]
        q = parent[p]
        if q < 0:
            mask = at_least[pdeg[p]]
        else:
            mask = adj[image[q]] & ~used & at_least[pdeg[p]]
        need = pdeg[p] - (0 if q < 0 else 1)
        tried: set[int] = set()
        for h in candidates(mask):
            c = tclass[h]
            if c in tried:
                continue
            tried.add(c)
            now = used | 1 << h
            if (adj[h] & ~now).bit_count() < need:
                continue
            image[p] = h
            pending[p] = need
            if q >= 0:
                pending[q] -= 1
            placed.append(p)
            if capacity_ok(now) and place(i + 1, now):
                return True
            placed.pop()
            if q >= 0:
                pending[q] += 1
            pending[p] = 0
            image[p] = -1
        return False

    if not place(0, 0):
        return None
    result = EmbeddingMap(tuple(image))
    assert result.is_valid(host, pattern), "embedding search produced an invalid map"
    return result


def is_tree_free(host: Graph, pattern: Tree, budget: Optional[int] = None) -> bool:
    return find_tree_embedding(host, pattern, budget=budget) is None


def _component_graphs(g: Graph) -> list[Graph]:
    return [g.induced(c) for c in components(g)]


def _block_graphs(g: Graph, min_size: int) -> list[Graph]:
    out = []
    for comp in _component_graphs(g):
        if comp.n < min_size:
            continue
        for b in blocks(comp):
            if len(b) >= min_size:
                out.append(comp.induced(b))
    return out


def _longest_cycle_in_block(b: Graph, stop_at: Optional[int], counter: _Budget) -> int:
    n = b.n
    adj = b.adj
    tclass = twin_classes(b)
    best = 0
    for s in range(n):
        if tclass[s] != s:
            continue  # an earlier twin already covered every cycle through s
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        if allowed.bit_count() + 1 <= best:
            break

        def extend(end: int, used: int, length: int) -> bool:
            nonlocal best
            counter.tick()
            if length >= 3 and adj[end] >> s & 1 and length > best:
                best = length
                if stop_at is not None and best >= stop_at:
                    return True
            if best == n:
                return True
            free = allowed & ~used
            reach = reachable_mask(b, end, free | 1 << end) & free
            if length + reach.bit_count() <= best:
                return False
            tried: set[int] = set()
            for u in iter_bits(adj[end] & free):
                if tclass[u] in tried:
                    continue
                tried.add(tclass[u])
                if extend(u, used | 1 << u, length + 1):
                    return True
            return False

        if extend(s, 1 << s, 1):
            break
    return best


def circumference(g: Graph, budget: Optional[int] = None) -> int:
    """Length of a longest cycle; 0 for forests. Searched block by block."""
    counter = _Budget(budget)
    best = 0
    for b in sorted(_block_graphs(g, 3), key=lambda b: -b.n):
        if b.n <= best:
            break
        best = max(best, _longest_cycle_in_block(b, None, counter))
    return best


def has_cycle_at_least(g: Graph, k: int, budget: Optional[int] = None) -> bool:
    if k < 3:
        raise ValueError("cycle length bound must be at least 3")
    counter = _Budget(budget)
    for b in _block_graphs(g, k):
        if _longest_cycle_in_block(b, k, counter) >= k:
            return True
    return False


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """Whether ``g`` contains a cycle on exactly ``length`` vertices."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    for b in _block_graphs(g, length):
        n, adj = b.n, b.adj
        tclass = twin_classes(b)
        for s in range(n):
            if tclass[s] != s:
                continue
            allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)

            def extend(end: int, used: int, depth: int) -> bool:
                if depth == length:
                    return bool(adj[end] >> s & 1)
                tried: set[int] = set()
                for u in iter_bits(adj[end] & allowed & ~used):
                    if tclass[u] in tried:
                        continue
                    tried.add(tclass[u])
                    if extend(u, used | 1 << u, depth + 1):
                        return True
                return False

            if extend(s, 1 << s, 1):
                return True
    return False


def longest_path(g: Graph, budget: Optional[int] = None) -> int:
    """Number of vertices on a longest simple path."""
    if g.n < 1:
        raise ValueError("longest_path needs a non-empty graph")
    counter = _Budget(budget)
    best = 1
    for comp in sorted(_component_graphs(g), key=lambda c: -c.n):
        if comp.n <= best:
            break
        n, adj = comp.n, comp.adj
        tclass = twin_classes(comp)
        full = (1 << n) - 1

        def extend(end: int, used: int, length: int) -> bool:
            nonlocal best
            counter.tick()
            if length > best:
                best = length
            if best == n:
                return True
            free = full & ~used
            reach = reachable_mask(comp, end, free | 1 << end) & free
            if length + reach.bit_count() <= best:
                return False
            tried: set[int] = set()
            for u in iter_bits(adj[end] & free):
                if tclass[u] in tried:
                    continue
                tried.add(tclass[u])
                if extend(u, used | 1 << u, length + 1):
                    return True
            return False

        for s in range(n):
            if tclass[s] != s:
                continue
            if extend(s, 1 << s, 1):
                break
    return best


def contains_path(g: Graph, k: int) -> bool:
    """Whether ``g`` has a path on ``k`` vertices."""
    return longest_path(g) >= k
