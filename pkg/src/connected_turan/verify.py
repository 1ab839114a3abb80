"""Verification suites: formula-vs-oracle equalities and freeness sweeps.

Every suite returns a :class:`VerifyReport` whose JSON form is byte-stable:
no timings, sorted keys, rows in a fixed order. A mismatch sets status to
``"fail"`` and records the first offending graph in graph6.
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional

from .constructions import (
    UndefinedBranchWarning,
    broom_ex_c,
    broom_case,
    complete_bipartite,
    f1,
    f1_edges,
    g_family,
    kopylov_ex_c_path,
    lower_bound_hosts,
    p_family,
    s_family,
    two_connected_bound,
    woodall_ex_long_cycle,
)
from .embedding import EmbeddingMap, circumference, find_tree_embedding
from .errors import ParameterError
from .graph import Graph, blocks, edge_count
from .graph6 import graph6_encode
from .oracle import extremal_number
from .trees import (
    Tree,
    barycenter,
    bipartition_sizes,
    broom,
    enumerate_trees,
    max_disjoint_spider_pair,
)


@dataclass
class VerifyReport:
    suite: str
    params: dict
    status: str = "pass"
    counterexample: Optional[str] = None
    table: list = field(default_factory=list)

    def fail(self, graph: Optional[Graph]) -> None:
        self.status = "fail"
        if self.counterexample is None and graph is not None:
            self.counterexample = graph6_encode(graph)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = {"suite": self.suite, "params": self.params, "status": self.status, "table": self.table}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        cols: list[str] = []
        for row in self.table:
            for key in row:
                if key not in cols:
                    cols.append(key)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for row in self.table:
            writer.writerow(row)
        return buf.getvalue()


# ------------------------------------------------------------ oracle suites

def _eq1(rep: VerifyReport, max_n: int, workers: int, force: bool) -> None:
    for n in range(4, max_n + 1):
        for k in range(4, n + 1):
            rec = extremal_number(n, f"path:{k}", connected_only=True, workers=workers, force=force)
            formula = kopylov_ex_c_path(n, k)
            ok = rec.max_edges == formula
            rep.table.append({"n": n, "k": k, "brute": rec.max_edges, "formula": formula, "match": ok})
            if not ok:
                rep.status = "fail"
                rep.counterexample = rep.counterexample or rec.witnesses[0]


def _thm22(rep: VerifyReport, max_n: int, workers: int, force: bool) -> None:
    for n in range(3, max_n + 1):
        for k in range(3, n + 1):
            rec = extremal_number(n, f"cycle-ge:{k}", connected_only=False, workers=workers, force=force)
            formula = woodall_ex_long_cycle(n, k)
            host = f1(n, k)
            host_edges = edge_count(host)
            host_circ = circumference(host)
            ok = rec.max_edges == formula == host_edges == f1_edges(n, k) and host_circ < k
            rep.table.append({
                "n": n, "k": k, "brute": rec.max_edges, "formula": formula,
                "f1_edges": host_edges, "f1_circumference": host_circ, "match": ok,
            })
            if not ok:
                if rec.max_edges > formula:
                    rep.status = "fail"
                    rep.counterexample = rep.counterexample or rec.witnesses[0]
                else:
                    rep.fail(host)


def _prop51(rep: VerifyReport, max_n: int, workers: int, force: bool) -> None:
    prev = None
    for n in range(3, max_n + 1):
        rec = extremal_number(n, "cycle:3", connected_only=True, workers=workers, force=force)
        ok = prev is None or rec.max_edges > prev
        rep.table.append({"n": n, "ex_c": rec.max_edges, "increasing": ok})
        if not ok:
            rep.status = "fail"
            rep.counterexample = rep.counterexample or rec.witnesses[0]
        prev = rec.max_edges


# ------------------------------------------------------- construction suites

def _is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and len(blocks(g)) == 1


def _thm23(rep: VerifyReport, max_n: int, circ_max_n: int) -> None:
    for n in range(5, max_n + 1):
        for k in range(5, n + 1):
            hosts = [g_family(n, k, 2), g_family(n, k, (k - 1) // 2)]
            best = max(edge_count(h) for h in hosts)
            bound = two_connected_bound(n, k)
            two_conn = all(_is_two_connected(h) for h in hosts)
            row = {"n": n, "k": k, "bound": bound, "best_edges": best, "two_connected": two_conn}
            ok = best == bound and two_conn
            if n <= circ_max_n:
                circs = [circumference(h) for h in hosts]
                row["circumference"] = max(circs)
                ok = ok and max(circs) < k
            row["match"] = ok
            rep.table.append(row)
            if not ok:
                rep.fail(max(hosts, key=edge_count))


def _thm13_lower(rep: VerifyReport, max_n: int, max_k: int) -> None:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UndefinedBranchWarning)
        for k in range(8, max_k + 1):
            for d in range(6, k - 1):
                pattern = broom(k, d)
                checked = violations = unattained = 0
                for n in range(k, max_n + 1):
                    hosts = lower_bound_hosts(n, k, d)
                    # the formula value must be the edge count of some free host
                    if broom_ex_c(n, k, d) not in [edge_count(h) for _, h in hosts]:
                        unattained += 1
                        rep.fail(max((h for _, h in hosts), key=edge_count))
                    for _, h in hosts:
                        checked += 1
                        if find_tree_embedding(h, pattern) is not None:
                            violations += 1
                            rep.fail(h)
                rep.table.append({
                    "k": k, "d": d, "case": broom_case(k, d), "hosts_checked": checked,
                    "violations": violations, "formula_unattained": unattained,
                })


def _shift_map(n: int, comps: int, size: int) -> EmbeddingMap:
    # family(n) sits inside family(n + size): one more component, the rest shifted
    cut = comps * size
    return EmbeddingMap(tuple(v if v < cut else v + size for v in range(n)))


def _tree_dispatch(t: Tree) -> int:
    return t.degree(barycenter(t)[0])


def _thm12_lower(rep: VerifyReport, max_n: int, max_k: int, full_range: bool) -> None:
    """S hosts for barycentre degree 2, P hosts for degree at least 4.

    Without ``full_range`` only a window of one component size ending at
    ``max_n`` is searched. Each smaller ``n`` is covered because the host on
    ``n`` vertices embeds in the host on ``n + size`` vertices with the same
    leftover; that inclusion is checked explicitly for every skipped ``n``.
    """
    for k in range(4, max_k + 1):
        x = (k - 2) // 2
        for kind, size, build in (("s", x, s_family), ("p", x + 1, p_family)):
            lo = x + 1
            start = lo if full_range else max(lo, max_n - size + 1)
            inclusion_ok = True
            for n in range(lo, start):
                small, big = build(n, x, x), build(n + size, x, x)
                comps = (n - 1) // x if kind == "s" else n // (x + 1)
                if not _shift_map(n, comps, size).is_valid(big, small):
                    inclusion_ok = False
                    rep.fail(small)
            wanted = 2 if kind == "s" else 4
            trees = violations = 0
            for t in enumerate_trees(k):
                deg = _tree_dispatch(t)
                if (kind == "s" and deg != 2) or (kind == "p" and deg < wanted):
                    continue
                trees += 1
                for n in range(start, max_n + 1):
                    host = build(n, x, x)
                    if find_tree_embedding(host, t) is not None:
                        violations += 1
                        rep.fail(host)
            rep.table.append({
                "k": k, "family": kind, "x": x, "trees": trees, "n_from": start, "n_to": max_n,
                "inclusions_ok": inclusion_ok, "violations": violations,
            })


def _claim31(rep: VerifyReport, max_n: int, max_k: int) -> None:
    """Class-size consequence for every c, and freeness of the bipartite host."""
    for k in range(2, max_k + 1):
        consequences = consequence_failures = hosts = violations = 0
        for t in enumerate_trees(k):
            pair = max_disjoint_spider_pair(t)
            small = min(bipartition_sizes(t))
            for c in range(-k, k + 1):
                if 2 * pair < k - c:
                    continue
                consequences += 1
                if 4 * small < k - c - 16:
                    consequence_failures += 1
                    rep.fail(t)
                a = (k - c) // 4 - 5
                if a < 1:
                    continue
                for n in range(max(k, a + 1), max_n + 1):
                    hosts += 1
                    host = complete_bipartite(a, n - a)
                    if find_tree_embedding(host, t) is not None:
                        violations += 1
                        rep.fail(host)
        rep.table.append({
            "k": k, "hypothesis_holds": consequences, "class_size_failures": consequence_failures,
            "bipartite_hosts": hosts, "violations": violations,
        })


def _prop21(rep: VerifyReport, max_k: int) -> None:
    for k in range(1, max_k + 1):
        trees = one = two = bad = 0
        for t in enumerate_trees(k):
            trees += 1
            b = barycenter(t)
            if len(b) == 1:
                one += 1
            elif len(b) == 2 and t.has_edge(b[0], b[1]):
                two += 1
            else:
                bad += 1
                rep.fail(t)
        rep.table.append({"k": k, "trees": trees, "one_barycenter": one, "two_adjacent": two, "violations": bad})


# ---------------------------------------------------------------- dispatcher

SUITES: dict[str, int] = {
    "eq1": 8,
    "thm2.2": 8,
    "thm2.3-lb": 40,
    "thm1.3-lower": 80,
    "thm1.2-lower": 80,
    "prop2.1": 12,
    "prop5.1": 7,
    "claim3.1": 80,
}


def verify_theorem(
    name: str,
    max_n: Optional[int] = None,
    workers: int = 1,
    force: bool = False,
    max_k: Optional[int] = None,
    full_range: bool = False,
) -> VerifyReport:
    """Run one suite. ``max_n`` bounds the host order (the tree order for prop2.1).

    ``max_k`` bounds pattern order where a suite sweeps patterns: brooms for
    thm1.3-lower (default 13), trees for thm1.2-lower and claim3.1 (default 12).
    """
    if name not in SUITES:
        raise ParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if max_n is None:
        max_n = SUITES[name]
    if max_n < 1:
        raise ParameterError("max_n must be positive")
    params: dict = {"max_n": max_n}
    rep = VerifyReport(name, params)
    runners: dict[str, Callable[[], None]] = {
        "eq1": lambda: _eq1(rep, max_n, workers, force),
        "thm2.2": lambda: _thm22(rep, max_n, workers, force),
        "prop5.1": lambda: _prop51(rep, max_n, workers, force),
        "thm2.3-lb": lambda: _thm23(rep, max_n, 20),
        "thm1.3-lower": lambda: _thm13_lower(rep, max_n, max_k or 13),
        "thm1.2-lower": lambda: _thm12_lower(rep, max_n, max_k or 12, full_range),
        "claim3.1": lambda: _claim31(rep, max_n, max_k or 12),
        "prop2.1": lambda: _prop21(rep, max_n),
    }
    if name in ("thm1.3-lower", "thm1.2-lower", "claim3.1"):
        params["max_k"] = max_k or (13 if name == "thm1.3-lower" else 12)
    if name == "thm1.2-lower":
        params["full_range"] = full_range
    runners[name]()
    return rep
