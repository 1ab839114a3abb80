"""Command-line entry point.

Exit codes: 0 success (``check``: pattern contained; ``verify``: pass),
1 negative answer (``check``: pattern free; ``verify``: fail), 2 search
budget or enumeration cap exceeded, 64 usage error. Data goes to stdout,
human-readable summaries to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import asdict
from typing import Optional, Sequence

from .constructions import (
    FAMILY_TAGS,
    FamilyParams,
    broom_ex_c,
    kopylov_ex_c_path,
    two_connected_bound,
    woodall_ex_long_cycle,
)
from .embedding import find_tree_embedding
from .errors import BudgetExceeded, CapExceeded, GraphError, ParameterError
from .graph import Graph, edge_count, to_dot
from .graph6 import graph6_encode, read_graph6_file
from .oracle import GAMMA_SELECTORS, Pattern, extremal_number, gamma_report
from .trees import Tree, binary_tree, broom
from .verify import SUITES, verify_theorem

EXIT_USAGE = 64

CONSTRUCT_FAMILIES = FAMILY_TAGS + ("broom", "binary_tree")
FORMULAS = ("kopylov", "woodall", "two-connected", "broom-exc", "family-edges")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_help(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="connected-turan", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a named graph family member")
    c.add_argument("--family", required=True, choices=CONSTRUCT_FAMILIES)
    for name in ("n", "k", "d", "s", "x", "a", "b", "r"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--out", choices=("g6", "dot"), default="g6")

    ch = sub.add_parser("check", help="does the host contain the pattern tree (exit 0 yes, 1 no, 2 budget)")
    ch.add_argument("--host", required=True, help="graph6 file, first graph used")
    ch.add_argument("--pattern", required=True, help="graph6 file holding a tree")
    ch.add_argument("--witness", action="store_true", help="print the embedding as pattern-host pairs")
    ch.add_argument("--budget", type=int, help="search node limit")

    f = sub.add_parser("formula", help="evaluate a closed-form edge count")
    f.add_argument("--name", required=True, choices=FORMULAS)
    f.add_argument("--family", choices=FAMILY_TAGS, help="for family-edges")
    for name in ("n", "k", "d", "s", "x", "a", "b", "r"):
        f.add_argument(f"--{name}", type=int)
    f.add_argument("--n-from", type=int, help="sweep n from here to --n, emitting CSV")

    o = sub.add_parser("oracle", help="exact extremal number by exhaustive enumeration (exit 2 above cap)")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--forbid", required=True, help="path:K, cycle-ge:K, cycle:K or a tree in graph6")
    o.add_argument("--connected", action="store_true")
    o.add_argument("--witnesses", action="store_true", help="include every extremal graph")
    o.add_argument("--workers", type=int, default=1)
    o.add_argument("--force", action="store_true", help="allow n = 10")

    v = sub.add_parser("verify", help="run a verification suite (exit 0 pass, 1 fail)")
    v.add_argument("--suite", required=True, choices=tuple(SUITES))
    v.add_argument("--max-n", type=int)
    v.add_argument("--max-k", type=int)
    v.add_argument("--full-range", action="store_true")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--force", action="store_true")
    v.add_argument("--out", choices=("json", "csv"), default="json")

    r = sub.add_parser("report", help="finite-k edge ratios of the lower-bound constructions")
    r.add_argument("--gamma", action="store_true", required=True)
    r.add_argument("--k", required=True, help="comma-separated list")
    r.add_argument("--construction", choices=("all",) + GAMMA_SELECTORS, default="all")
    r.add_argument("--n-factor", type=int, default=100)
    r.add_argument("--c", type=int, default=0, help="constant for the bipartite construction")
    r.add_argument("--out", choices=("json", "csv"), default="json")
    return p


def _params(args: argparse.Namespace) -> dict:
    return {name: getattr(args, name) for name in ("n", "k", "d", "s", "x", "a", "b", "r") if getattr(args, name) is not None}


def _need(args: argparse.Namespace, *names: str) -> list[int]:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--{missing[0]} is required here")
    return [getattr(args, n) for n in names]


def _construct(args: argparse.Namespace) -> int:
    if args.family == "broom":
        k, d = _need(args, "k", "d")
        g: Graph = broom(k, d)
    elif args.family == "binary_tree":
        (r,) = _need(args, "r")
        g = binary_tree(r)
    else:
        g = FamilyParams(args.family, _params(args)).build()
    print(graph6_encode(g) if args.out == "g6" else to_dot(g, args.family), end="\n" if args.out == "g6" else "")
    print(f"family={args.family} n={g.n} edges={edge_count(g)}", file=sys.stderr)
    return 0


def _first_graph(path: str) -> Graph:
    try:
        graphs = read_graph6_file(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if not graphs:
        raise UsageError(f"{path} holds no graph")
    return graphs[0]


def _check(args: argparse.Namespace) -> int:
    host = _first_graph(args.host)
    try:
        pattern = Tree.from_graph(_first_graph(args.pattern))
    except GraphError:
        raise UsageError(f"{args.pattern} is not a tree") from None
    try:
        emb = find_tree_embedding(host, pattern, budget=args.budget)
    except BudgetExceeded as exc:
        print(f"undecided: search budget of {exc.nodes} nodes exceeded", file=sys.stderr)
        return 2
    if emb is None:
        print("free", file=sys.stderr)
        return 1
    print("contains", file=sys.stderr)
    if args.witness:
        print(" ".join(f"{p}-{h}" for p, h in emb.pairs()))
    return 0


def _formula_value(args: argparse.Namespace, n: int) -> int:
    name = args.name
    if name == "kopylov":
        (k,) = _need(args, "k")
        return kopylov_ex_c_path(n, k)
    if name == "woodall":
        (k,) = _need(args, "k")
        return woodall_ex_long_cycle(n, k)
    if name == "two-connected":
        (k,) = _need(args, "k")
        return two_connected_bound(n, k)
    if name == "broom-exc":
        k, d = _need(args, "k", "d")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            value = broom_ex_c(n, k, d)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return value
    if args.family is None:
        raise UsageError("--family is required for family-edges")
    params = _params(args)
    params["n"] = n
    return FamilyParams(args.family, params).edges()


def _formula(args: argparse.Namespace) -> int:
    needs_n = not (args.name == "family-edges" and args.family == "complete_bipartite")
    if needs_n:
        (n,) = _need(args, "n")
    else:
        n = args.n or 0
    if args.n_from is None:
        print(_formula_value(args, n))
        return 0
    if args.n_from > n:
        raise UsageError("--n-from must not exceed --n")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for m in range(args.n_from, n + 1):
        w.writerow([m, _formula_value(args, m)])
    sys.stdout.write(buf.getvalue())
    return 0


def _oracle(args: argparse.Namespace) -> int:
    pattern = Pattern.parse(args.forbid)
    rec = extremal_number(args.n, pattern, connected_only=args.connected, workers=args.workers, force=args.force)
    d = rec.to_dict()
    if not args.witnesses:
        d["witnesses"] = d["witnesses"][:1]
        d["witness_count"] = len(rec.witnesses)
    print(json.dumps(d, sort_keys=True))
    print(f"ex{'_c' if args.connected else ''}({args.n}, {rec.forbidden}) = {rec.max_edges}", file=sys.stderr)
    return 0


def _verify(args: argparse.Namespace) -> int:
    rep = verify_theorem(
        args.suite, max_n=args.max_n, workers=args.workers, force=args.force,
        max_k=args.max_k, full_range=args.full_range,
    )
    sys.stdout.write(rep.to_json() + "\n" if args.out == "json" else rep.to_csv())
    line = f"{args.suite}: {rep.status}"
    if rep.counterexample:
        line += f" (counterexample {rep.counterexample})"
    print(line, file=sys.stderr)
    return 0 if rep.passed else 1


def _report(args: argparse.Namespace) -> int:
    try:
        ks = [int(s) for s in args.k.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"--k must be a comma-separated list of integers, got {args.k!r}") from None
    if not ks:
        raise UsageError("--k is empty")
    rows = [asdict(r) for r in gamma_report(ks, args.construction, args.n_factor, args.c)]
    if args.out == "json":
        # NaN is not JSON; not-applicable rows carry null ratios
        for row in rows:
            for key in ("ratio_to_half", "ratio_to_quarter"):
                if row[key] != row[key]:
                    row[key] = None
        print(json.dumps(rows, sort_keys=True))
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    return 0


HANDLERS = {
    "construct": _construct,
    "check": _check,
    "formula": _formula,
    "oracle": _oracle,
    "verify": _verify,
    "report": _report,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    sub = parser._subparsers._group_actions[0].choices[args.command]  # type: ignore[union-attr]
    try:
        return HANDLERS[args.command](args)
    except (UsageError, ParameterError, GraphError) as exc:
        sub.print_help(sys.stderr)
        print(f"{sub.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
