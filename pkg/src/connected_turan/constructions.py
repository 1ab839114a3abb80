"""Graph families used as extremal or lower-bound constructions, and the
closed-form edge counts that go with them.

Vertex layout of each generator is documented so that outputs are
reproducible bit for bit. "Pendant path of length l" means l extra vertices
(and l extra edges) hung off one clique vertex.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from math import comb

from .errors import ParameterError
from .graph import Graph, complete_graph, disjoint_union, empty_graph, join


class UndefinedBranchWarning(UserWarning):
    """A formula branch refers to a family that is not defined for these parameters."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def _builder(n: int):
    return [0] * n


def _add(rows: list[int], u: int, v: int) -> None:
    rows[u] |= 1 << v
    rows[v] |= 1 << u


def _add_clique(rows: list[int], vertices) -> None:
    vs = list(vertices)
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            _add(rows, u, v)


# ---------------------------------------------------------------- G family

def g_family(n: int, k: int, s: int) -> Graph:
    """``(K_{k-2s} ∪ empty_{n-k+s}) + K_s``.

    Vertices ``0..s-1`` are the dominating clique, then the ``k-2s`` clique
    vertices, then the independent set.
    """
    _require(n >= k >= 2 * s >= 2, f"g_family needs n >= k >= 2s >= 2, got n={n}, k={k}, s={s}")
    return join(complete_graph(s), disjoint_union(complete_graph(k - 2 * s), empty_graph(n - k + s)))


def g_family_edges(n: int, k: int, s: int) -> int:
    _require(n >= k >= 2 * s >= 2, f"g_family needs n >= k >= 2s >= 2, got n={n}, k={k}, s={s}")
    return comb(k - 2 * s, 2) + s * (n - s) + comb(s, 2)


def g_broom_edges(n: int, d: int) -> int:
    """Edge count of ``g_family(n, d, (d-1)//2)`` in its expanded form."""
    h = (d - 1) // 2
    c = (d + 2) // 2  # ceil((d+1)/2)
    return h * (n - c) + comb(c, 2)


# ---------------------------------------------------------- S and P families

def a_x(k: int, x: int) -> int:
    """Component size parameter; the two branches never overlap since (k-2)//2 < k/2."""
    if x == (k - 2) // 2:
        return x
    if 2 * x > k and x < k:
        return (2 * x * x) // k - 2
    raise ParameterError(f"a_x is defined for x = (k-2)//2 or k/2 < x < k, got k={k}, x={x}")


def s_family(n: int, x: int, a: int) -> Graph:
    """Hub ``w`` joined to the far end of every clique-with-tail and to a leftover path.

    There are ``(n-1)//a`` components of ``a`` vertices: ``K_x`` followed by a
    tail of ``a-x`` vertices hanging off the clique's last vertex. The
    leftover path has ``n-1-a*((n-1)//a)`` vertices. Layout: components in
    order (clique vertices, then tail from the clique outwards), then the
    leftover path, then ``w = n-1``.
    """
    _require(a >= x >= 1 and n >= a + 1, f"s_family needs a >= x >= 1 and n >= a+1, got n={n}, x={x}, a={a}")
    rows = _builder(n)
    w = n - 1
    comps = (n - 1) // a
    base = 0
    for _ in range(comps):
        _add_clique(rows, range(base, base + x))
        prev = base + x - 1
        for t in range(base + x, base + a):
            _add(rows, prev, t)
            prev = t
        _add(rows, prev, w)
        base += a
    left = n - 1 - a * comps
    for t in range(base, base + left - 1):
        _add(rows, t, t + 1)
    if left:
        _add(rows, base, w)
    return Graph(n, tuple(rows))


def s_family_edges(n: int, x: int, a: int) -> int:
    _require(a >= x >= 1 and n >= a + 1, f"s_family needs a >= x >= 1 and n >= a+1, got n={n}, x={x}, a={a}")
    comps = (n - 1) // a
    left = n - 1 - a * comps
    return comps * (comb(x, 2) + (a - x) + 1) + left


def s_section5(n: int, r: int) -> Graph:
    """Cliques ``K_{4^r - 7}`` with tails of two vertices on a common hub."""
    _require(r >= 2, "the clique-pendant construction needs r >= 2")
    return s_family(n, 4 ** r - 7, 4 ** r - 5)


def p_family(n: int, x: int, a: int) -> Graph:
    """Clique-with-tail components whose tail ends ``w_1, w_2, ...`` form a path.

    There are ``n//(a+1)`` components: ``K_x`` plus a tail of ``a-x+1``
    vertices ending at ``w_i``. A leftover path of ``n-(a+1)*(n//(a+1))``
    vertices ends at ``w_0``; when it is empty ``w_0`` does not exist and the
    spine starts at ``w_1``. Layout: components in order, then the leftover
    path with ``w_0`` last.
    """
    _require(a >= x >= 1 and n >= a + 1, f"p_family needs a >= x >= 1 and n >= a+1, got n={n}, x={x}, a={a}")
    rows = _builder(n)
    comps = n // (a + 1)
    ends = []
    base = 0
    for _ in range(comps):
        _add_clique(rows, range(base, base + x))
        prev = base + x - 1
        for t in range(base + x, base + a + 1):
            _add(rows, prev, t)
            prev = t
        ends.append(prev)
        base += a + 1
    left = n - base
    for t in range(base, base + left - 1):
        _add(rows, t, t + 1)
    if left:
        ends.insert(0, n - 1)
    for u, v in zip(ends, ends[1:]):
        _add(rows, u, v)
    return Graph(n, tuple(rows))


def p_family_edges(n: int, x: int, a: int) -> int:
    _require(a >= x >= 1 and n >= a + 1, f"p_family needs a >= x >= 1 and n >= a+1, got n={n}, x={x}, a={a}")
    comps = n // (a + 1)
    left = n - (a + 1) * comps
    return comps * (comb(x, 2) + a - x + 1) + comps - 1 + left


# ---------------------------------------------------------------- F families
# Every F graph is a set of blocks glued at vertex 0; the blocks follow in
# order, each occupying a consecutive run of vertices.

def _glue(n: int, blocks: list[tuple[int, bool]]) -> Graph:
    """Blocks given as (order including the shared vertex, minus_matching)."""
    rows = _builder(n)
    base = 1
    for size, minus_matching in blocks:
        others = list(range(base, base + size - 1))
        _add_clique(rows, [0] + others)
        if minus_matching:
            for i in range(0, len(others), 2):
                u, v = others[i], others[i + 1]
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
        base += size - 1
    assert base == n
    return Graph(n, tuple(rows))


def f1_split(n: int, d: int) -> tuple[int, int]:
    _require(d >= 3 and n >= d - 1, f"f1 needs d >= 3 and n >= d-1, got n={n}, d={d}")
    return divmod(n - 1, d - 2)


def f1(n: int, d: int) -> Graph:
    """``p1`` copies of ``K_{d-1}`` and one ``K_{q1+1}`` (if ``q1 > 0``) sharing vertex 0."""
    p, q = f1_split(n, d)
    blocks = [(d - 1, False)] * p
    if q:
        blocks.append((q + 1, False))
    return _glue(n, blocks)


def f1_edges(n: int, d: int) -> int:
    p, q = f1_split(n, d)
    return p * comb(d - 1, 2) + comb(q + 1, 2)


def f1_edges_alt(n: int, d: int) -> int:
    p, q = f1_split(n, d)
    num = (d - 1) * (n - 1) - q * (d - 2 - q)
    assert num % 2 == 0
    return num // 2


def f2_split(n: int, d: int) -> tuple[int, int]:
    _require(d >= 4 and n >= d - 1, f"f2 needs d >= 4 and n >= d-1 (p2 >= 1), got n={n}, d={d}")
    return divmod(n - 2, d - 3)


def f2(n: int, d: int) -> Graph:
    """One ``K_{d-1}``, ``p2-1`` copies of ``K_{d-2}`` and one ``K_{q2+1}`` at vertex 0."""
    p, q = f2_split(n, d)
    blocks = [(d - 1, False)] + [(d - 2, False)] * (p - 1)
    if q:
        blocks.append((q + 1, False))
    return _glue(n, blocks)


def f2_edges(n: int, d: int) -> int:
    p, q = f2_split(n, d)
    return p * comb(d - 2, 2) + d - 2 + comb(q + 1, 2)


def f2_edges_alt(n: int, d: int) -> int:
    p, q = f2_split(n, d)
    num = (d - 2) * n - q * (d - 3 - q)
    assert num % 2 == 0
    return num // 2


def f3_split(n: int, d: int) -> tuple[int, int]:
    _require(d >= 4 and d % 2 == 0, f"f3 is defined for even d >= 4, got d={d}")
    _require(n >= d - 1, f"f3 needs n >= d-1, got n={n}, d={d}")
    return divmod(n - 1, d - 3)


def f3(n: int, d: int) -> Graph:
    """Blocks at vertex 0 built from ``K_{d-1}`` minus a perfect matching away from 0.

    If ``p3 >= q3``: ``q3`` such blocks and ``p3-q3`` copies of ``K_{d-2}``.
    Otherwise ``p3`` such blocks and one ``K_{q3-p3+1}``.
    """
    p, q = f3_split(n, d)
    if p >= q:
        blocks = [(d - 1, True)] * q + [(d - 2, False)] * (p - q)
    else:
        blocks = [(d - 1, True)] * p + [(q - p + 1, False)]
    return _glue(n, blocks)


def f3_edges(n: int, d: int) -> int:
    p, q = f3_split(n, d)
    if p >= q:
        return (d - 2) * (n - 1) // 2
    return p * (d - 2) ** 2 // 2 + comb(q - p + 1, 2)


def f3_edges_alt(n: int, d: int) -> int:
    p, q = f3_split(n, d)
    r = q - p if p < q else 0
    num = (d - 2) * (n - 1) - r * (d - 3 - r)
    assert num % 2 == 0
    return num // 2


# ------------------------------------------------------------ other families

def almost_regular(n: int, r: int) -> Graph:
    """Connected circulant with every degree ``r``, except one ``r-1`` when ``r*n`` is odd.

    Offsets ``1..r//2``; for odd ``r`` a matching ``{i, i + n//2}`` over
    ``i < n//2`` (which misses vertex ``n-1`` when ``n`` is odd).
    """
    _require(n > r >= 1, f"almost_regular needs n > r >= 1, got n={n}, r={r}")
    _require(r >= 2 or n == 2, "a connected 1-regular graph exists only for n = 2")
    rows = _builder(n)
    for off in range(1, r // 2 + 1):
        for i in range(n):
            _add(rows, i, (i + off) % n)
    if r % 2:
        half = n // 2
        for i in range(half):
            _add(rows, i, i + half)
    return Graph(n, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    """Vertices ``0..a-1`` on one side, ``a..a+b-1`` on the other."""
    _require(a >= 1 and b >= 1, "complete_bipartite needs a, b >= 1")
    return join(empty_graph(a), empty_graph(b))


def union_cliques(n: int, k: int) -> Graph:
    """``n/(k-1)`` disjoint copies of ``K_{k-1}`` on consecutive vertices."""
    _require(k >= 2 and n % (k - 1) == 0, f"union_cliques needs (k-1) | n, got n={n}, k={k}")
    rows = _builder(n)
    for base in range(0, n, k - 1):
        _add_clique(rows, range(base, base + k - 1))
    return Graph(n, tuple(rows))


# ------------------------------------------------------------------ formulas

def kopylov_ex_c_path(n: int, k: int) -> int:
    """Largest connected ``n``-vertex graph without a path on ``k`` vertices."""
    _require(n >= k >= 4, f"needs n >= k >= 4, got n={n}, k={k}")
    half = (k - 2) // 2
    up = (k + 1) // 2
    return max(comb(k - 2, 2) + (n - k + 2), half * (n - up) + comb(up, 2))


def woodall_ex_long_cycle(n: int, k: int) -> int:
    """Largest ``n``-vertex graph with no cycle of length ``k`` or more."""
    _require(n >= k >= 3, f"needs n >= k >= 3, got n={n}, k={k}")
    p, q = divmod(n - 1, k - 2)
    first = p * comb(k - 1, 2) + comb(q + 1, 2)
    num = (k - 1) * (n - 1) - q * (k - 2 - q)
    assert num % 2 == 0 and first == num // 2
    return first


def two_connected_bound(n: int, k: int) -> int:
    """Edge bound for 2-connected ``n``-vertex graphs with no cycle of length >= k."""
    _require(n >= k >= 5, f"needs n >= k >= 5, got n={n}, k={k}")
    h = (k - 1) // 2
    c = (k + 2) // 2
    return max(comb(k - 2, 2) + 2 * (n - k + 2), h * (n - c) + comb(c, 2))


def broom_ex_c(n: int, k: int, d: int) -> int:
    """Connected extremal number of ``B(k, d)`` for large ``n``, by case on ``2d - k``.

    When ``2d = k + 3`` and ``d`` is odd the third family is undefined; the
    maximum over the defined ones is returned with an
    :class:`UndefinedBranchWarning`.
    """
    _require(k >= d + 2 and d >= 6, f"needs k >= d + 2 >= 8, got k={k}, d={d}")
    _require(n >= k, f"needs n >= k, got n={n}, k={k}")
    gap = 2 * d - k
    if gap >= 5:
        return g_broom_edges(n, d)
    if gap in (2, 4):
        return max(g_broom_edges(n, d), f1_edges(n, (k + 2) // 2))
    if gap == 3:
        values = [g_broom_edges(n, d), f2_edges(n, d)]
        if d % 2 == 0:
            values.append(f3_edges(n, d))
        else:
            warnings.warn(
                f"F(n, d, 3) is undefined for odd d={d}; using the remaining families",
                UndefinedBranchWarning,
                stacklevel=2,
            )
        return max(values)
    return (k - d) * n // 2


def broom_case(k: int, d: int) -> str:
    gap = 2 * d - k
    if gap >= 5:
        return "long"
    if gap in (2, 4):
        return "f1"
    if gap == 3:
        return "f2f3"
    return "regular"


def lower_bound_hosts(n: int, k: int, d: int) -> list[tuple[str, Graph]]:
    """The constructions whose B(k, d)-freeness gives the lower bound for broom_ex_c."""
    hosts = [("g", g_family(n, d, (d - 1) // 2)), ("almost_regular", almost_regular(n, k - d))]
    case = broom_case(k, d)
    if case == "f1":
        hosts.append(("f1", f1(n, (k + 2) // 2)))
    elif case == "f2f3":
        hosts.append(("f2", f2(n, d)))
        if d % 2 == 0:
            hosts.append(("f3", f3(n, d)))
    return hosts


# ---------------------------------------------------------- parameter records

FAMILY_TAGS = (
    "g", "s", "p", "f1", "f2", "f3", "almost_regular", "complete_bipartite",
    "union_cliques", "s_section5",
)


@dataclass(frozen=True)
class FamilyParams:
    family: str
    params: dict = field(default_factory=dict)

    def _get(self, name: str) -> int:
        if self.params.get(name) is None:
            raise ParameterError(f"family {self.family!r} needs --{name}")
        return int(self.params[name])

    def _a(self) -> int:
        if self.params.get("a") is not None:
            return int(self.params["a"])
        return a_x(self._get("k"), self._get("x"))

    def build(self) -> Graph:
        f, get = self.family.lower(), self._get
        if f == "g":
            return g_family(get("n"), get("k"), get("s"))
        if f == "s":
            return s_family(get("n"), get("x"), self._a())
        if f == "p":
            return p_family(get("n"), get("x"), self._a())
        if f == "f1":
            return f1(get("n"), get("d"))
        if f == "f2":
            return f2(get("n"), get("d"))
        if f == "f3":
            return f3(get("n"), get("d"))
        if f == "almost_regular":
            return almost_regular(get("n"), get("r"))
        if f == "complete_bipartite":
            return complete_bipartite(get("a"), get("b"))
        if f == "union_cliques":
            return union_cliques(get("n"), get("k"))
        if f == "s_section5":
            return s_section5(get("n"), get("r"))
        raise ParameterError(f"unknown family {self.family!r}")

    def edges(self) -> int:
        """Closed-form edge count."""
        f, get = self.family.lower(), self._get
        if f == "g":
            return g_family_edges(get("n"), get("k"), get("s"))
        if f == "s":
            return s_family_edges(get("n"), get("x"), self._a())
        if f == "p":
            return p_family_edges(get("n"), get("x"), self._a())
        if f == "f1":
            return f1_edges(get("n"), get("d"))
        if f == "f2":
            return f2_edges(get("n"), get("d"))
        if f == "f3":
            return f3_edges(get("n"), get("d"))
        if f == "almost_regular":
            n, r = get("n"), get("r")
            _require(n > r >= 1, f"almost_regular needs n > r >= 1, got n={n}, r={r}")
            return r * n // 2
        if f == "complete_bipartite":
            return get("a") * get("b")
        if f == "union_cliques":
            n, k = get("n"), get("k")
            _require(k >= 2 and n % (k - 1) == 0, f"union_cliques needs (k-1) | n, got n={n}, k={k}")
            return n * (k - 2) // 2
        if f == "s_section5":
            r = get("r")
            _require(r >= 2, "the clique-pendant construction needs r >= 2")
            return s_family_edges(get("n"), 4 ** r - 7, 4 ** r - 5)
        raise ParameterError(f"unknown family {self.family!r}")


def x_sqrt2(k: int) -> int:
    """``floor(k / sqrt 2)`` computed exactly."""
    return math.isqrt(k * k // 2)
