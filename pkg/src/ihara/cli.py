"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .graph import GraphError, format_graph, generate, parse_graph
from .verify import INJECT_TARGETS, parse_injection, verify_graph
from .walks import (
    DEFAULT_BUDGET,
    InconsistentCountsError,
    OracleBudgetError,
    m_sequence,
    n_from_chebyshev,
    n_from_hashimoto,
    n_sequence_from_lemma,
    nb_matrices,
    oracle_tables,
    prime_counts,
    prime_oracle,
)
from .zeta import (
    DEFAULT_EPS,
    DisconnectedGraphError,
    poles,
    ramanujan_check,
    zeta_reciprocal,
    zeta_reciprocal_bass,
    zeta_series,
)


class UsageError(Exception):
    pass


def _float(x: float) -> float:
    return float(f"{x:.15g}")


def _load(path: str):
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(text: str, path: str | None = None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pole_json(p) -> dict:
    return {
        "re": _float(p.value.real),
        "im": _float(p.value.imag),
        "modulus": _float(p.modulus),
        "multiplicity": p.multiplicity,
        "class": p.classification,
    }


def zeta_json(g, report, eps: float) -> dict:
    d = g.regular_degree()
    caveats: list[str] = []
    pole_list: list[dict] = []
    is_ramanujan = None
    if d is None:
        caveats.append("graph is not regular: poles and Ramanujan verdict are not computed")
    elif d >= 2:
        bass = report if report.bass_quadratic_part is not None and report.method == "bass" else zeta_reciprocal_bass(g, d)
        pole_list = [_pole_json(p) for p in poles(bass, d, eps)]
        if g.is_connected():
            verdict = ramanujan_check(g, d, eps)
            is_ramanujan = verdict.is_ramanujan
            caveats.extend(verdict.caveats)
        else:
            caveats.append("graph is disconnected: Ramanujan verdict is not defined")
    return {
        "n": g.n,
        "edges": g.num_edges,
        "regular_degree": d,
        "reciprocal_coeffs": [str(c) for c in report.reciprocal.coeffs],
        "euler_exponent": report.euler_exponent,
        "poles": pole_list,
        "is_ramanujan": is_ramanujan,
        "caveats": caveats,
    }


def cmd_gen(args) -> int:
    g = generate(args.family, *args.params)
    _emit(format_graph(g), args.output)
    return 0


def cmd_zeta(args) -> int:
    g = _load(args.graph)
    if args.method == "series":
        if args.order is None:
            raise UsageError("--method series requires --order")
        report = zeta_reciprocal(g, "hashimoto")
        series = zeta_series(n_from_hashimoto(g, args.order), args.order)
        if args.json:
            doc = zeta_json(g, report, args.eps)
            doc["order"] = args.order
            doc["series_coeffs"] = [str(c) for c in series.coeffs]
            _emit(json.dumps(doc, indent=2) + "\n", args.output)
        else:
            _emit(series.to_text() + "\n", args.output)
        return 0
    if args.method == "bass" and not g.is_regular():
        raise UsageError("--method bass needs a regular graph; use --method bass-general for irregular graphs")
    report = zeta_reciprocal(g, args.method)
    if args.json:
        _emit(json.dumps(zeta_json(g, report, args.eps), indent=2) + "\n", args.output)
    else:
        _emit(report.reciprocal.to_text() + "\n", args.output)
    return 0


def cmd_nk(args) -> int:
    g = _load(args.graph)
    K = args.max_k
    M = None
    if args.method == "hashimoto":
        N = n_from_hashimoto(g, K)
    elif args.method == "lemma":
        seq = nb_matrices(g, None, K)
        M = m_sequence(seq)
        N = n_sequence_from_lemma(M, seq.d)
    elif args.method == "chebyshev":
        N = n_from_chebyshev(g, None, K)
    else:
        N, _ = oracle_tables(g, K, args.oracle_budget)
    if args.json:
        doc = {"method": args.method, "N": [str(x) for x in N]}
        if M is not None:
            doc["M"] = [str(x) for x in M]
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return 0
    lines = [f"{k} {N[k - 1]}" + (f" {M[k - 1]}" if M is not None else "") for k in range(1, K + 1)]
    _emit("".join(line + "\n" for line in lines), args.output)
    return 0


def cmd_primes(args) -> int:
    g = _load(args.graph)
    if args.oracle:
        pi = prime_oracle(g, args.max_k, args.oracle_budget)
    else:
        pi = prime_counts(n_from_hashimoto(g, args.max_k))
    _emit("".join(f"{ell} {p}\n" for ell, p in enumerate(pi, start=1)), args.output)
    return 0


def cmd_ramanujan(args) -> int:
    g = _load(args.graph)
    v = ramanujan_check(g, None, args.eps)
    if args.json:
        doc = {
            "is_ramanujan": v.is_ramanujan,
            "eigenvalue_criterion": v.eigen_verdict,
            "pole_criterion": v.pole_verdict,
            "bound": _float(v.bound),
            "eigenvalues": [_float(x) for x in v.eigenvalues],
            "witnesses": [_float(x) for x in v.witnesses],
            "epsilon": v.epsilon,
            "poles": [_pole_json(p) for p in v.poles],
            "caveats": v.caveats,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return 0
    lines = [
        f"degree {g.regular_degree()}",
        f"bound 2*sqrt(d-1) = {v.bound:.15g}",
        f"eigenvalue criterion: {'pass' if v.eigen_verdict else 'fail'}",
        f"pole criterion: {'pass' if v.pole_verdict else 'fail'}",
        f"verdict: {'Ramanujan' if v.is_ramanujan else 'not Ramanujan'}",
    ]
    if v.witnesses:
        lines.append("witnesses: " + " ".join(f"{x:.15g}" for x in v.witnesses))
    lines += [f"caveat: {c}" for c in v.caveats]
    _emit("".join(line + "\n" for line in lines), args.output)
    return 0


def cmd_verify(args) -> int:
    g = _load(args.graph)
    try:
        inject = [parse_injection(s) for s in args.inject]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    outcome = verify_graph(g, args.max_k, args.oracle_budget, args.eps, inject)
    lines = []
    for c in outcome.checks:
        line = f"[{c.status.upper()}] {c.name}"
        if c.detail and c.status != "pass":
            line += f" -- {c.detail}"
        lines.append(line)
    nfail = len(outcome.failed())
    lines.append(f"{len(outcome.checks)} checks, {nfail} failed")
    _emit("".join(line + "\n" for line in lines), args.output)
    return outcome.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ihara", description="Ihara zeta functions of finite graphs, computed exactly.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("-g", "--graph", required=True, metavar="FILE", help="graph file, '-' for stdin")
        p.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")

    p = sub.add_parser("gen", help="write a graph from a standard family")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("zeta", help="reciprocal zeta polynomial or truncated zeta series")
    graph_args(p)
    p.add_argument("--method", choices=["hashimoto", "bass", "bass-general", "series"], default="hashimoto")
    p.add_argument("--order", type=int)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("nk", help="counts N_k of rooted tailless non-backtracking cycles")
    graph_args(p)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--method", choices=["lemma", "hashimoto", "chebyshev", "oracle"], default="hashimoto")
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nk)

    p = sub.add_parser("primes", help="counts of prime cycle classes per length")
    graph_args(p)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="enumerate instead of Mobius inversion")
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("ramanujan", help="Ramanujan verdict by eigenvalues and by zeta poles")
    graph_args(p)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ramanujan)

    p = sub.add_parser("verify", help="run every cross-check on a graph")
    graph_args(p)
    p.add_argument("--max-k", type=int, default=10)
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--inject", action="append", default=[], metavar="TARGET:INDEX",
                   help=f"add 1 to one entry before comparing (testing aid); TARGET in {', '.join(INJECT_TARGETS)}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("max_k", "order"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            parser.error(f"--{name.replace('_', '-')} must be >= 1")
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError, OracleBudgetError, DisconnectedGraphError,
            InconsistentCountsError, ValueError) as exc:
        print(f"ihara {args.command}: error: {exc}", file=sys.stderr)
        return 2
