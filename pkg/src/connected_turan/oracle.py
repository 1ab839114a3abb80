"""Exhaustive ground truth: isomorph-free graph enumeration and exact
(connected) extremal numbers for small ``n``.

Enumeration is by canonical augmentation. A graph on ``n`` vertices is
produced from a parent on ``n - 1`` vertices by adding vertex ``n - 1``
with every possible neighbourhood, and is kept only if deleting its
canonical last vertex gives back that parent. Duplicates from the same
parent are removed locally, so nothing beyond one parent's children is
ever held for deduplication. Parents shard cleanly across workers.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from multiprocessing import get_context
from typing import Iterator, Optional

from .canon import canonical_labelling, refine, same_orbit
from .constructions import (
    a_x,
    broom_ex_c,
    p_family_edges,
    s_family_edges,
    x_sqrt2,
)
from .errors import CapExceeded, ParameterError
from .embedding import find_tree_embedding, has_cycle_at_least, has_cycle_of_length
from .graph import Graph, edge_count, is_connected, iter_bits
from .graph6 import graph6_decode, graph6_encode
from .trees import Tree, path_tree

DEFAULT_CAP = 9
FORCED_CAP = 10


def _trusted(n: int, adj: tuple[int, ...]) -> Graph:
    # skips validation; only for rows built symmetric by construction
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", adj)
    return g


def _children(parent: Graph) -> list[Graph]:
    n = parent.n + 1
    new = n - 1
    parent_cert = parent.adj  # parents are stored in canonical form
    seen: set[tuple[int, ...]] = set()
    out = []
    for nbrs in range(1 << (n - 1)):
        rows = list(parent.adj)
        for u in iter_bits(nbrs):
            rows[u] |= 1 << new
        rows.append(nbrs)
        adj = tuple(rows)
        cells = refine(adj, [list(range(n))])
        if new not in cells[-1]:
            continue
        g = _trusted(n, adj)
        lab = canonical_labelling(g, cells)
        last = lab.last
        if not same_orbit(lab, last, new, g):
            if canonical_labelling(g.remove_vertex(last)).certificate != parent_cert:
                continue
        if lab.certificate in seen:
            continue
        seen.add(lab.certificate)
        out.append(_trusted(n, lab.certificate))
    return out


def _children_of_shard(parents: list[Graph], shard: int, workers: int) -> list[Graph]:
    out = []
    for i in range(shard, len(parents), workers):
        out.extend(_children(parents[i]))
    return out


def _sort_key(g: Graph) -> tuple[int, str]:
    return edge_count(g), graph6_encode(g)


def next_level(parents: list[Graph], workers: int = 1) -> list[Graph]:
    """All graphs on one more vertex, sorted by (edges, graph6)."""
    if workers <= 1:
        level = _children_of_shard(parents, 0, 1)
    else:
        with ProcessPoolExecutor(workers, mp_context=get_context("fork")) as pool:
            parts = pool.map(_children_of_shard, [parents] * workers, range(workers), [workers] * workers)
            level = [g for part in parts for g in part]
    level.sort(key=_sort_key)
    return level


_LEVELS: dict[int, list[Graph]] = {0: [_trusted(0, ())]}


def _check_cap(n: int, force: bool) -> None:
    if n < 1:
        raise ParameterError("enumeration needs n >= 1")
    cap = FORCED_CAP if force else DEFAULT_CAP
    if n > cap:
        hint = "" if force or n > FORCED_CAP else " (pass force=True / --force for n = 10)"
        raise CapExceeded(f"n={n} is above the enumeration cap of {cap}{hint}")


def all_graphs(n: int, workers: int = 1, force: bool = False) -> list[Graph]:
    _check_cap(n, force)
    top = max(m for m in _LEVELS if m <= n)
    for m in range(top + 1, n + 1):
        _LEVELS[m] = next_level(_LEVELS[m - 1], workers)
    return _LEVELS[n]


def enumerate_graphs(n: int, connected_only: bool = False, workers: int = 1, force: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, by (edges, graph6)."""
    for g in all_graphs(n, workers, force):
        if not connected_only or is_connected(g):
            yield g


# ------------------------------------------------------------------ patterns

@dataclass(frozen=True)
class Pattern:
    kind: str  # "tree", "path", "cycle_ge" or "cycle"
    k: int
    tree: Optional[Tree] = None

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        s = text.strip()
        kind, sep, rest = s.partition(":")
        kind = kind.replace("-", "_").lower()
        if sep and kind in ("path", "cycle_ge", "cycle"):
            try:
                k = int(rest)
            except ValueError:
                raise ParameterError(f"bad pattern length in {text!r}") from None
            if kind == "path":
                if k < 1:
                    raise ParameterError("path patterns need k >= 1")
                return cls("path", k, path_tree(k))
            if k < 3:
                raise ParameterError("cycle patterns need k >= 3")
            return cls(kind, k)
        if sep and kind == "tree":
            s = rest
        t = Tree.from_graph(graph6_decode(s))
        return cls("tree", t.n, t)

    def describe(self) -> str:
        if self.kind == "tree":
            assert self.tree is not None
            return "tree:" + graph6_encode(self.tree)
        return f"{self.kind}:{self.k}"

    def occurs_in(self, g: Graph) -> bool:
        if self.kind in ("tree", "path"):
            assert self.tree is not None
            return find_tree_embedding(g, self.tree) is not None
        if self.kind == "cycle_ge":
            return has_cycle_at_least(g, self.k)
        return has_cycle_of_length(g, self.k)


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    forbidden: str
    connected_only: bool
    max_edges: int
    witnesses: tuple[str, ...]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["witnesses"] = list(self.witnesses)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def check(self) -> None:
        """Re-validate every witness; raises AssertionError on any defect."""
        pattern = Pattern.parse(self.forbidden)
        for w in self.witnesses:
            g = graph6_decode(w)
            assert g.n == self.n, w
            assert edge_count(g) == self.max_edges, w
            if self.connected_only:
                assert is_connected(g), w
            assert not pattern.occurs_in(g), w


def _best_in_shard(n: int, connected_only: bool, forbidden: str, shard: int, workers: int) -> tuple[int, list[str]]:
    pattern = Pattern.parse(forbidden)
    graphs = [g for g in enumerate_graphs(n, connected_only, force=True)]
    mine = graphs[shard::workers]
    by_edges: dict[int, list[Graph]] = {}
    for g in mine:
        by_edges.setdefault(edge_count(g), []).append(g)
    for m in sorted(by_edges, reverse=True):
        free = [graph6_encode(g) for g in by_edges[m] if not pattern.occurs_in(g)]
        if free:
            return m, free
    return -1, []


def extremal_number(
    n: int,
    pattern: Pattern | str,
    connected_only: bool = False,
    workers: int = 1,
    force: bool = False,
) -> ExtremalRecord:
    """Exact maximum edge count over pattern-free graphs, with every extremal graph.

    Each shard scans its graphs by descending edge count and stops at the
    first level holding a free graph; shards merge by max-with-ties.
    """
    if isinstance(pattern, str):
        pattern = Pattern.parse(pattern)
    _check_cap(n, force)
    all_graphs(n, workers, force)  # populate the cache before any fork
    desc = pattern.describe()
    if workers <= 1:
        results = [_best_in_shard(n, connected_only, desc, 0, 1)]
    else:
        with ProcessPoolExecutor(workers, mp_context=get_context("fork")) as pool:
            results = list(pool.map(
                _best_in_shard, [n] * workers, [connected_only] * workers, [desc] * workers,
                range(workers), [workers] * workers,
            ))
    best = max(m for m, _ in results)
    if best < 0:
        raise ParameterError(f"every graph on {n} vertices contains {desc}")
    witnesses = sorted(w for m, ws in results if m == best for w in ws)
    record = ExtremalRecord(n, desc, connected_only, best, tuple(witnesses))
    record.check()
    return record


# ------------------------------------------------------------- ratio reports

@dataclass(frozen=True)
class RatioReport:
    k: int
    tree: str
    n: int
    edges: int
    ratio_to_half: float
    ratio_to_quarter: float
    applicable: bool = True
    note: str = ""

    @classmethod
    def from_edges(cls, k: int, tree: str, n: int, edges: int, note: str = "") -> "RatioReport":
        return cls(k, tree, n, edges, edges / (n * (k - 2) / 2), edges / (k * n / 4), True, note)

    @classmethod
    def not_applicable(cls, k: int, tree: str, n: int, note: str) -> "RatioReport":
        return cls(k, tree, n, 0, math.nan, math.nan, False, note)


GAMMA_SELECTORS = ("s-case1", "p-case2", "s-x1", "p-x1", "bipartite", "broom")


def gamma_report(
    ks: list[int],
    selector: str = "all",
    n_factor: int = 100,
    c: int = 0,
) -> list[RatioReport]:
    """Finite-k ratios e/(n(k-2)/2) and e/(kn/4) for each construction at n = n_factor*k."""
    chosen = GAMMA_SELECTORS if selector == "all" else (selector,)
    for s in chosen:
        if s not in GAMMA_SELECTORS:
            raise ParameterError(f"unknown construction selector {s!r}")
    rows = []
    for k in ks:
        n = n_factor * k
        for sel in chosen:
            rows.append(_ratio_row(k, n, sel, c))
    return rows


def _ratio_row(k: int, n: int, sel: str, c: int) -> RatioReport:
    if sel in ("s-case1", "p-case2"):
        x = (k - 2) // 2
        label = "barycenter-degree-2" if sel == "s-case1" else "barycenter-degree>=4"
        if x < 1 or n < x + 2:
            return RatioReport.not_applicable(k, label, n, f"x={x} too small")
        e = s_family_edges(n, x, x) if sel == "s-case1" else p_family_edges(n, x, x)
        return RatioReport.from_edges(k, label, n, e, f"x={x}, a={x}")
    if sel in ("s-x1", "p-x1"):
        x = x_sqrt2(k)
        label = "barycenter-degree-3"
        try:
            a = a_x(k, x)
            e = s_family_edges(n, x, a) if sel == "s-x1" else p_family_edges(n, x, a)
        except ParameterError as exc:
            return RatioReport.not_applicable(k, label, n, str(exc))
        return RatioReport.from_edges(k, label, n, e, f"x={x}, a={a}")
    if sel == "bipartite":
        a = (k - c) // 4 - 5
        label = f"balanced-spiders(c={c})"
        if a < 1 or a >= n:
            return RatioReport.not_applicable(k, label, n, f"part size {a} < 1")
        return RatioReport.from_edges(k, label, n, a * (n - a), f"K_{{{a},{n - a}}}")
    d = (k + 1) // 2
    label = f"B({k},{d})"
    try:
        e = broom_ex_c(n, k, d)
    except ParameterError as exc:
        return RatioReport.not_applicable(k, label, n, str(exc))
    return RatioReport.from_edges(k, label, n, e, f"d={d}")
