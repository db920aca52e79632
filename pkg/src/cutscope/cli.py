"""``cutscope`` command line.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 invalid graph, 4 method does not apply to the graph, 5 resource budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import betti as B
from . import cycles as Y
from . import verify as V
from .cuts import L_ideal, cut_ideal
from .decomposition import decompose
from .errors import CutscopeError, MethodMismatchError
from .freiman import DEFAULT_GENERATOR_BUDGET, classify_small, freiman_report
from .graph import Graph, block_factors, is_cycle_labeling
from .monomial import embed, product_all

BETTI_METHODS = ("oracle", "cycle-recursion", "cycle-closed", "quotients")


class UsageError(CutscopeError):
    exit_code = 2


def load_graph(path: str) -> Graph:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    return Graph.from_dict(data)


def _emit(args, payload, table_text: str | None = None) -> None:
    if args.format == "table" and table_text is not None:
        print(table_text)
    else:
        print(json.dumps(payload, indent=2, sort_keys=False))


def _kv_text(d: dict, indent: str = "") -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_kv_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


# -- commands ---------------------------------------------------------------------


def cmd_gens(args) -> int:
    g = load_graph(args.graph)
    I = cut_ideal(g)
    if args.count_only:
        print(len(I))
        return 0
    gens = [str(u) for u in I.gens]
    _emit(args, gens, "\n".join(gens))
    return 0


def _require_cycle(g: Graph, method: str) -> int:
    if not is_cycle_labeling(g):
        raise MethodMismatchError(f"--method {method} needs a cycle with the standard labeling")
    return g.n


def _parse_base(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"--base expects comma-separated integers, got {text!r}") from exc


def cmd_betti(args) -> int:
    g = load_graph(args.graph)
    p = B.check_prime(args.field_prime)
    kw = dict(method=args.homology, lattice_budget=args.budget, threads=args.threads)
    if args.method == "oracle":
        t = B.betti(cut_ideal(g), p, **kw)
        out = dict(t.to_dict(), method="oracle", homology=args.homology)
        _emit(args, out, t.format())
        return 0

    n = _require_cycle(g, args.method)
    if args.method == "quotients":
        if n < 4:
            raise MethodMismatchError("L(C_n) needs n >= 4")
        totals = Y.lambda_totals(n)
        t = B.BettiTable(p, {(i, i + n): v for i, v in enumerate(totals)})
        out = dict(t.to_dict(), method="quotients", ideal=f"L(C_{n})")
        if args.check:
            oracle = B.betti(L_ideal(n), p, **kw)
            out["check"] = {"oracle": oracle.to_dict()["entries"], "agree": oracle == t}
        _emit(args, out, t.format())
        return 0

    if n < 4:
        raise MethodMismatchError(f"--method {args.method} needs n >= 4")
    base = _parse_base(args.base)
    if args.method == "cycle-recursion":
        t = Y.betti_recursion_graded(n, p) if base is None else None
        totals = Y.betti_recursion(n, p, base)
        out = {"p": p, "method": "cycle-recursion", "totals": totals}
        if t is not None:
            out = dict(t.to_dict(), **out)
    else:
        if base is None:
            base = Y.base_triangle(p).totals()
        totals = Y.betti_closed_totals(n, base)
        out = {"p": p, "method": "cycle-closed", "base": base, "totals": totals, "pd": len(totals) - 1}
        t = None
    if args.check:
        oracle = B.betti(cut_ideal(g), p, **kw)
        check = {"oracle_totals": oracle.totals(), "agree": oracle.totals() == totals}
        if t is not None:
            check["graded_agree"] = oracle == t
        out["check"] = check
    _emit(args, out, t.format() if t is not None else _kv_text(out))
    return 0


def cmd_poincare(args) -> int:
    g = load_graph(args.graph)
    p = B.check_prime(args.field_prime)
    kw = dict(method=args.homology, lattice_budget=args.budget, threads=args.threads)
    I = cut_ideal(g)
    direct = B.poincare(B.betti(I, p, **kw))
    factors = block_factors(g)
    prod = B.BivariatePoly.one()
    pieces = []
    for sub, labels in factors:
        poly = B.poincare(B.betti(cut_ideal(sub), p, **kw))
        prod = prod * poly
        pieces.append({"edges": labels, "poincare": str(poly)})
    ideal_ok = product_all(embed(cut_ideal(sub), labels, g.m) for sub, labels in factors) == I
    out = {
        "p": p,
        "direct": str(direct),
        "product": str(prod),
        "equal": direct == prod,
        "factor_ideals_multiply_to_I": ideal_ok,
        "factors": pieces,
        "terms": direct.to_list(),
    }
    _emit(args, out, _kv_text({k: v for k, v in out.items() if k not in ("factors", "terms")}))
    return 0


def cmd_decompose(args) -> int:
    out = decompose(load_graph(args.graph))
    text = "\n".join(" ".join(p) for p in out["primes"]) + f"\nheight {out['height']}  dim {out['dim']}"
    _emit(args, out, text)
    return 0


def cmd_freiman(args) -> int:
    if args.classify:
        rows = classify_small(args.max_vertices, args.max_edges, freiman_only=not args.all,
                              generator_budget=args.generator_budget)
        out = [{"graph": g.to_dict(), "freiman": v} for g, v in rows]
        _emit(args, out, "\n".join(f"{json.dumps(r['graph'])}  {r['freiman']}" for r in out))
        return 0
    if not args.graph:
        raise UsageError("freiman needs --graph or --classify")
    r = freiman_report(load_graph(args.graph), args.max_power, args.generator_budget)
    out = r.to_dict()
    _emit(args, out, _kv_text({k: v for k, v in out.items() if k != "powers"}) + "\n" + "\n".join(
        f"k={p.k}  mu={p.mu}  bound={p.bound}" for p in r.powers))
    return 0


def cmd_verify(args) -> int:
    ctx = V.Context(p=B.check_prime(args.field_prime), lattice_budget=args.budget,
                    threads=args.threads, stretch=args.stretch)
    records = V.run(args.suite, ctx)
    failed = any(r.status == "fail" for r in records)
    out = {"suite": args.suite, "ok": not failed, "records": [r.to_dict() for r in records]}
    _emit(args, out, V.format_ledger(records))
    return 1 if failed else 0


# -- parser -------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("json", "table"), default=d("json"))
    p.add_argument("--field-prime", type=int, default=d(B.DEFAULT_PRIME), help="characteristic of F_p")
    p.add_argument("--threads", type=int, default=d(os.cpu_count() or 1))
    p.add_argument("--budget", type=int, default=d(B.DEFAULT_LATTICE_BUDGET), help="lcm lattice element budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutscope", description="Monomial cut ideals of graphs.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, fn, help):
        p = sub.add_parser(name, help=help)
        _add_common(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    p = command("gens", cmd_gens, "minimal generators of I(G)")
    p.add_argument("--graph", required=True, help="graph JSON file, - for stdin")
    p.add_argument("--count-only", action="store_true")

    p = command("betti", cmd_betti, "graded Betti numbers")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=BETTI_METHODS, default="oracle")
    p.add_argument("--homology", choices=B.METHODS, default="koszul")
    p.add_argument("--base", help="beta_0,beta_1,beta_2 of I(C_3) for cycle methods (default: oracle)")
    p.add_argument("--check", action="store_true", help="compare a formula method with the oracle")

    p = command("poincare", cmd_poincare, "Poincaré polynomial, direct vs product over blocks")
    p.add_argument("--graph", required=True)
    p.add_argument("--homology", choices=B.METHODS, default="koszul")

    p = command("decompose", cmd_decompose, "minimal primes, height and dimension")
    p.add_argument("--graph", required=True)

    p = command("freiman", cmd_freiman, "Freiman report or small-graph classification")
    p.add_argument("--graph")
    p.add_argument("--max-power", type=int, default=2)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--max-edges", type=int, default=6)
    p.add_argument("--all", action="store_true", help="with --classify, list non-Freiman graphs too")
    p.add_argument("--generator-budget", type=int, default=DEFAULT_GENERATOR_BUDGET)

    p = command("verify", cmd_verify, "re-check every claim and print the ledger")
    p.add_argument("--suite", choices=("all",) + V.SUITES, default="all")
    p.add_argument("--stretch", action="store_true", help="include the n = 6 recursion check")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CutscopeError as exc:
        print(f"cutscope: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
