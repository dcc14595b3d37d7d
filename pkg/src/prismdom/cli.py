"""Command-line front end: ``prismdom <command> ...``.

Graphs travel as edge lists.  A ``# sidecar {...}`` comment line (or a
``<file>.json`` next to a graph file) carries vertex labels and a bundled
permutation, so ``prismdom family ... | prismdom gamma --prism`` works.

Exit codes: 0 success, 1 a check failed, 2 usage or input error,
3 budget exhausted before an answer.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import families, verify
from .formats import FormatError, Sidecar, format_edge_list, from_graph6, parse_edge_list, read_sidecar, to_dot, to_graph6
from .graph_core import Graph, GraphError
from .prism import Permutation, PermutationError, build_prism, parse_label, parse_permutation
from .solver import OPTIMAL, GammaVariant, gamma_variant, oracle_gamma_variant

BUDGET_ENV = "PRISMDOM_BUDGET_MS"
SIDECAR_TAG = "# sidecar "

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _default_budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer number of milliseconds, got {raw!r}") from None


def _load(path: str | None) -> tuple[Graph, Sidecar | None]:
    """Read a graph from ``path`` (``-`` or None for stdin) plus any sidecar."""
    if path in (None, "-"):
        data = sys.stdin.buffer.read()
        sidecar = None
    else:
        p = Path(path)
        if not p.exists():
            raise UsageError(f"no such file: {path}")
        data = p.read_bytes()
        sidecar = read_sidecar(p)
        if p.suffix in (".g6", ".graph6"):
            lines = data.split()
            return from_graph6(lines[0] if lines else b""), sidecar
    text = data.decode()
    for line in text.splitlines():
        if line.startswith(SIDECAR_TAG):
            sidecar = Sidecar.from_json(line[len(SIDECAR_TAG):])
            break
    G = parse_edge_list(text)
    if sidecar is not None and sidecar.n != G.n:
        raise UsageError(f"sidecar describes {sidecar.n} vertices but the graph has {G.n}")
    return G, sidecar


def _label_map(sidecar: Sidecar | None) -> dict | None:
    if sidecar is None or sidecar.labels is None:
        return None
    return {parse_label(s): i for i, s in enumerate(sidecar.labels)}


def _permutation(G: Graph, sidecar: Sidecar | None, text: str | None) -> Permutation:
    if text is not None:
        return parse_permutation(G.n, text, _label_map(sidecar))
    if sidecar is not None and sidecar.perm_image is not None:
        return Permutation(sidecar.perm_image)
    raise UsageError("no permutation: pass --perm or use a graph with a bundled permutation")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(text)


def cmd_gamma(args: argparse.Namespace) -> int:
    G, sidecar = _load(args.graph)
    labels = list(sidecar.labels) if sidecar and sidecar.labels else [str(v) for v in range(G.n)]
    if args.prism:
        P = build_prism(G, _permutation(G, sidecar, args.perm))
        G, labels = P.graph, P.labels(labels)
    elif args.perm is not None:
        raise UsageError("--perm needs --prism")
    budget = args.budget_ms if args.budget_ms is not None else _default_budget()
    if args.oracle:
        report = oracle_gamma_variant(G, args.variant)
    else:
        report = gamma_variant(G, args.variant, budget_ms=budget, workers=args.threads)
    payload = report.to_dict(labels)
    if not args.witness:
        payload.pop("witness")
        payload.pop("witness_labels")
    print(json.dumps(payload, ensure_ascii=False))
    return EXIT_OK if report.status == OPTIMAL else EXIT_BUDGET


def cmd_prism(args: argparse.Namespace) -> int:
    G, sidecar = _load(args.graph)
    p = _permutation(G, sidecar, args.perm)
    P = build_prism(G, p)
    base = list(sidecar.labels) if sidecar and sidecar.labels else None
    labels = P.labels(base)
    if args.format == "graph6":
        _emit(to_graph6(P.graph).decode(), args.out)
    elif args.format == "dot":
        _emit(to_dot(P.graph, labels, name="prism"), args.out)
    else:
        meta = Sidecar(P.graph.n, tuple(labels), None, prism=True,
                       family=sidecar.family if sidecar else None)
        _write_graph(P.graph, meta, args.out, f"prism under {p.to_cycle_string(base)}")
    return EXIT_OK


def _write_graph(G: Graph, sidecar: Sidecar, out: str | None, comment: str) -> None:
    body = format_edge_list(G, comment)
    if out is None:
        sys.stdout.write(SIDECAR_TAG + sidecar.to_json() + "\n" + body)
    else:
        Path(out).write_text(body)
        Path(out + ".json").write_text(sidecar.to_json() + "\n")


def cmd_family(args: argparse.Namespace) -> int:
    fam = families.make_family(args.name, args.k, args.l)
    perm = fam.canonical_perm if args.with_perm else None
    if args.with_perm and perm is None:
        raise UsageError(f"{fam.name} has no bundled permutation")
    sidecar = Sidecar(fam.graph.n, tuple(fam.label_strings()), perm.image if perm else None, family=fam.name)
    comment = fam.name + (f", permutation {perm.to_cycle_string(fam.labels)}" if perm else "")
    _write_graph(fam.graph, sidecar, args.out, comment)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    ids = list(verify.CHECKS) if args.check == "all" else [args.check]
    failed = False
    for cid in ids:
        result = verify.run_check(cid, nmax=args.nmax, seed=args.seed, trials=args.trials)
        print(result.to_json())
        print(result.summary(), file=sys.stderr)
        failed |= not result.passed
    return EXIT_FAILED if failed else EXIT_OK


def cmd_table5(args: argparse.Namespace) -> int:
    budget = args.budget_ms if args.budget_ms is not None else _default_budget()
    rows = verify.counterexample_table(budget_ms=budget, max_k=args.max_k)
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], ensure_ascii=False))
    else:
        print(verify.format_table(rows))
    statuses = {r.status for r in rows}
    if verify.FAIL in statuses:
        return EXIT_FAILED
    return EXIT_BUDGET if verify.INCONCLUSIVE in statuses else EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    budget = args.budget_ms if args.budget_ms is not None else _default_budget()
    report = verify.search_wcon_fixer_conjecture(args.n, budget_ms=budget, seed=args.seed, trials=args.trials)
    print(report.to_json())
    return EXIT_BUDGET if report.timed_out else EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prismdom", description="Domination invariants of graph prisms.")
    sub = parser.add_subparsers(dest="command", required=True)
    variants = [v.value for v in GammaVariant] + ["dom", "wcon", "con"]

    g = sub.add_parser("gamma", help="compute a domination number")
    g.add_argument("--graph", help="edge-list or .g6 file; stdin when omitted")
    g.add_argument("--variant", required=True, choices=variants)
    g.add_argument("--witness", action="store_true", help="include the lexicographically least optimal set")
    g.add_argument("--oracle", action="store_true", help="use the exhaustive subset oracle (n <= 16)")
    g.add_argument("--budget-ms", type=int, help=f"time budget; default from ${BUDGET_ENV}")
    g.add_argument("--prism", action="store_true", help="work on the prism of the graph")
    g.add_argument("--perm", help="cycle notation on the graph's labels; default is the bundled one")
    g.add_argument("--threads", type=_positive, default=1)
    g.set_defaults(func=cmd_gamma)

    p = sub.add_parser("prism", help="build a prism graph")
    p.add_argument("--graph", help="edge-list or .g6 file; stdin when omitted")
    p.add_argument("--perm", help="cycle notation on the graph's labels; default is the bundled one")
    p.add_argument("--out")
    p.add_argument("--format", choices=("edges", "graph6", "dot"), default="edges")
    p.set_defaults(func=cmd_prism)

    f = sub.add_parser("family", help="emit a named graph family member")
    f.add_argument("name", choices=list(families.FAMILIES))
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--l", type=int)
    f.add_argument("--with-perm", action="store_true", help="attach the bundled permutation")
    f.add_argument("--out")
    f.set_defaults(func=cmd_family)

    v = sub.add_parser("verify", help="run a theorem check")
    v.add_argument("--check", required=True, choices=["all", *verify.CHECKS])
    v.add_argument("--nmax", type=_positive)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table5", help="recompute the table of small counterexamples")
    t.add_argument("--max-k", type=_positive, default=2)
    t.add_argument("--budget-ms", type=int)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table5)

    s = sub.add_parser("search-conjecture", help="look for weakly convex domination fixers that break")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--budget-ms", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=_positive, default=200)
    s.set_defaults(func=cmd_search)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, FormatError, PermutationError, GraphError, ValueError) as exc:
        print(f"prismdom {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
