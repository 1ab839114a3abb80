"""Simple undirected graphs on vertices ``0..n-1`` stored as bit-set rows.

Row ``adj[v]`` is an int whose bit ``u`` is set iff ``{u, v}`` is an edge.
All composition operators keep the left operand's labels and shift the
right operand's labels by ``a.n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import GraphError


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {{{v}, {u}}} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled by the order of ``vertices``."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(vs), tuple(rows))

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={edge_count(self)})"


def edge_count(g: Graph) -> int:
    return sum(row.bit_count() for row in g.adj) // 2


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """``a`` keeps its labels; vertex ``v`` of ``b`` becomes ``a.n + v``."""
    return Graph(a.n + b.n, a.adj + tuple(row << a.n for row in b.adj))


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    a_mask = (1 << a.n) - 1
    b_mask = ((1 << b.n) - 1) << a.n
    rows = tuple(row | b_mask for row in a.adj) + tuple((row << a.n) | a_mask for row in b.adj)
    return Graph(a.n + b.n, rows)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def reachable_mask(g: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` through vertices in ``allowed``."""
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    return reachable_mask(g, 0, (1 << g.n) - 1) == (1 << g.n) - 1


def blocks(g: Graph) -> list[list[int]]:
    """Maximal 2-connected blocks of a connected graph.

    Bridges come out as 2-vertex blocks and an isolated vertex (``n == 1``)
    as a single 1-vertex block. Sorted by size descending, then by vertex
    list.
    """
    if not is_connected(g):
        raise GraphError("block decomposition requires a connected graph")
    if g.n == 1:
        return [[0]]
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[list[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    disc[0] = low[0] = timer
    # iterative DFS: (vertex, parent, remaining-neighbour mask)
    stack = [(0, -1, g.adj[0])]
    while stack:
        v, parent, rest = stack[-1]
        if rest:
            low_bit = rest & -rest
            u = low_bit.bit_length() - 1
            stack[-1] = (v, parent, rest ^ low_bit)
            if u == parent:
                continue
            if disc[u] == -1:
                timer += 1
                disc[u] = low[u] = timer
                edge_stack.append((v, u))
                stack.append((u, v, g.adj[u]))
            elif disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
        else:
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block = 0
                while True:
                    a, b = edge_stack.pop()
                    block |= 1 << a | 1 << b
                    if (a, b) == (parent, v):
                        break
                out.append(list(iter_bits(block)))
    out.sort(key=lambda b: (-len(b), b))
    return out


def cut_vertices(g: Graph) -> list[int]:
    """Vertices lying in two or more blocks."""
    count = [0] * g.n
    for b in blocks(g):
        for v in b:
            count[v] += 1
    return [v for v in range(g.n) if count[v] > 1]


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """2-colouring, or ``None`` if ``g`` has an odd cycle.

    In every component the lowest-index vertex goes to the first class.
    """
    color = [-1] * g.n
    for comp in components(g):
        root = comp[0]
        color[root] = 0
        todo = [root]
        while todo:
            v = todo.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    todo.append(u)
                elif color[u] == color[v]:
                    return None
    a = [v for v in range(g.n) if color[v] == 0]
    b = [v for v in range(g.n) if color[v] == 1]
    return a, b


def twin_classes(g: Graph) -> list[int]:
    """Class id per vertex; equal ids mean open or closed twins.

    Swapping two twins is an automorphism that fixes every other vertex,
    which is what the searches in this package use it for.
    """
    cls = list(range(g.n))
    open_key: dict[int, int] = {}
    closed_key: dict[int, int] = {}
    for v in range(g.n):
        row = g.adj[v]
        if row in open_key:
            cls[v] = cls[open_key[row]]
            continue
        closed = row | 1 << v
        if closed in closed_key:
            cls[v] = cls[closed_key[closed]]
            continue
        open_key[row] = v
        closed_key[closed] = v
    return cls


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))
