"""Command-line front end: ``modexp {compute,generate,verdict,decompose,verify}``.

Exit codes: 0 success, 1 failed verification, 2 bad input or parameters,
3 enumeration cap exceeded, 4 isolated vertices present, 5 decomposition
hypothesis violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, constructions, decomposition, expansion, modularity, spectral, verify
from .errors import (
    HypothesisViolated,
    IsolatedVerticesPresent,
    ModexpError,
    SizeLimitExceeded,
)
from .graph import Graph, Partition, parse_edgelist, parse_ratio, serialize_edgelist

EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_ISOLATED = 4
EXIT_HYPOTHESIS = 5

FAMILIES = ("windmill", "g-alpha", "kary2", "clique-leaves", "g-h", "hw", "g-w", "complete", "path", "cycle", "star")


class UsageError(Exception):
    pass


def _ratio(text: str) -> Fraction:
    try:
        return parse_ratio(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _fmt(x) -> str:
    return "inf" if x == float("inf") else str(x)


def _vertices(s) -> str:
    return ",".join(map(str, sorted(s)))


class Output:
    """Collects records and renders them as text lines or JSON objects."""

    def __init__(self, fmt: str) -> None:
        self.fmt = fmt
        self.lines: list[str] = []

    def record(self, text: str, **fields) -> None:
        if self.fmt == "json":
            self.lines.append(json.dumps({k: _jsonable(v) for k, v in fields.items()}, sort_keys=False))
        else:
            self.lines.append(text)

    def note(self, text: str) -> None:
        if self.fmt == "text":
            self.lines.append(text)

    def render(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return "inf" if v == float("inf") else v
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    return v


def _read_input(path: str | None) -> Graph:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_edgelist(text)


def _caps(args) -> dict:
    if args.max_n is None:
        return {"max_n": expansion.DEFAULT_MAX_N, "max_component": modularity.DEFAULT_MAX_COMPONENT, "max_w": decomposition.DEFAULT_MAX_W}
    return {"max_n": args.max_n, "max_component": args.max_n, "max_w": args.max_n}


def _parse_partition(text: str, n: int) -> Partition:
    try:
        p = Partition.from_parts([int(v) for v in part.split(",") if v.strip()] for part in text.split("|"))
    except ValueError as err:
        raise UsageError(f"bad partition {text!r}: {err}") from None
    p.check_covers(n)
    return p


def cmd_compute(args, out: Output) -> int:
    g = _read_input(args.input)
    caps = _caps(args)
    what = [w for item in args.what for w in item.split(",")]
    for w in what:
        if w == "q":
            rep = modularity.maximize(g, max_component=caps["max_component"])
            out.record(f"q* = {rep.q_star}", quantity="q*", value=rep.q_star, partition=str(rep.optimal))
            out.note(f"partition {rep.optimal}")
        elif w == "score":
            if not args.partition:
                raise UsageError("--what score needs --partition")
            sc = modularity.score(g, _parse_partition(args.partition, g.n))
            out.record(f"q = {sc.q}", quantity="q", value=sc.q, coverage=sc.coverage, degree_tax=sc.degree_tax)
            out.note(f"qE = {sc.coverage}")
            out.note(f"qD = {sc.degree_tax}")
        elif w in ("h", "hh", "hprime"):
            fn = {"h": expansion.conductance, "hh": expansion.expansion_by_products, "hprime": expansion.expansion_by_edges}[w]
            rep = fn(g, max_n=caps["max_n"])
            out.record(f"{w} = {_fmt(rep.value)}", quantity=w, value=rep.value, witness=rep.witness)
            out.note(f"witness {_vertices(rep.witness)}")
            if args.decimals and rep.value != float("inf"):
                out.note(f"{w} ~ {float(rep.value):.12g}")
        elif w == "gap":
            rep = spectral.spectral_gap(g)
            out.record(f"gap = {rep.gap:.12g}", quantity="gap", value=rep.gap, eigenvalues=list(rep.eigenvalues))
        else:
            raise UsageError(f"unknown quantity {w!r}")
    return 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} needs --{' --'.join(missing)}")
    return [getattr(args, n) for n in names]


def build_family(args) -> Graph:
    f = args.family
    if f == "windmill":
        (l,) = _need(args, "l")
        return constructions.windmill(l)
    if f == "g-alpha":
        alpha, m = _need(args, "alpha", "m")
        return constructions.g_alpha(alpha, m)
    if f == "kary2":
        (k,) = _need(args, "k")
        return constructions.kary_depth2(k)
    if f == "clique-leaves":
        k, l = _need(args, "k", "l")
        h = constructions.clique_with_leaves(k, l)
        return constructions.with_disjoint_edges(h, args.alpha) if args.alpha is not None else h
    if f == "g-h":
        k, m = _need(args, "k", "m")
        return constructions.g_h_padding(constructions.complete_graph(k), m)
    if f == "hw":
        a, b, k = _need(args, "a", "b", "k")
        return constructions.weighted_clique_loops(a, b, k)
    if f == "g-w":
        a, b, k, alpha = _need(args, "a", "b", "k", "alpha")
        return constructions.g_w(constructions.weighted_clique_loops(a, b, k), alpha)
    (n,) = _need(args, "n")
    return {
        "complete": constructions.complete_graph,
        "path": constructions.path_graph,
        "cycle": constructions.cycle_graph,
        "star": constructions.star_graph,
    }[f](n)


def cmd_generate(args, out: Output) -> int:
    g = build_family(args)
    out.lines.append(serialize_edgelist(g).rstrip("\n"))
    return 0


def cmd_verdict(args, out: Output) -> int:
    g = _read_input(args.input)
    if g.has_isolated_vertices():
        raise IsolatedVerticesPresent(f"isolated vertices {g.isolated_vertices()}")
    caps = _caps(args)
    comps = g.components()
    if args.component_of is not None:
        if not 0 <= args.component_of < g.n:
            raise UsageError(f"vertex {args.component_of} out of range")
        comps = [c for c in comps if args.component_of in c]
    for comp in comps:
        v = bounds.resolution_verdict(g, comp, max_n=caps["max_n"], max_component=caps["max_component"])
        classic = bounds.classic_resolution_bound(g, comp)
        cid = min(comp)
        out.record(
            f"component {cid} alpha {v.alpha} hh {v.hh_component} decision {v.decision} classic {str(classic).lower()}",
            component=cid,
            vertices=comp,
            alpha=v.alpha,
            hh=v.hh_component,
            decision=v.decision,
            classic=classic,
        )
        if v.witness_unsplit is not None:
            out.note(f"  unsplit witness {v.witness_unsplit}")
            out.note(f"  split witness {v.witness_split}")
    return 0


def cmd_decompose(args, out: Output) -> int:
    g = _read_input(args.input)
    caps = _caps(args)
    if args.delta is None:
        raise UsageError("decompose needs --delta")
    if args.mode == "volume":
        if args.beta is None:
            raise UsageError("volume mode needs --beta")
        res = decomposition.volume_decompose(g, args.beta, args.delta, max_w=caps["max_w"])
        out.note(res.trace.to_text())
        out.record(
            f"q = {res.score.q} bound = {res.bound} deleted = {res.deleted}",
            mode="volume", q=res.score.q, bound=res.bound, deleted=res.deleted, partition=str(res.partition),
        )
    elif args.alpha is not None:
        res = decomposition.build_partition(g, args.alpha, args.delta, max_w=caps["max_w"])
        for i, part in enumerate(res.rounds[1:], start=1):
            out.note(f"round {i} partition {part}")
        out.record(
            f"q = {res.score.q} bound = {res.bound}",
            mode="edges", q=res.score.q, bound=res.bound, partition=str(res.partition),
        )
    elif args.e0 is not None:
        trace = decomposition.split_non_expander(g, args.e0, args.delta, max_w=caps["max_w"])
        out.note(trace.to_text())
        sc = modularity.score(g, trace.final)
        out.record(
            f"q = {sc.q} boundary = {trace.total_boundary}",
            mode="edges", q=sc.q, boundary=trace.total_boundary, partition=str(trace.final),
        )
    else:
        raise UsageError("edges mode needs --alpha or --e0")
    out.note("postconditions pass")
    return 0


def cmd_verify(args, out: Output) -> int:
    results = verify.run_suite(args.suite, seed=args.seed, samples=args.samples)
    failed = False
    for r in results:
        out.record(f"{'PASS' if r.ok else 'FAIL'} {r.name}", name=r.name, ok=r.ok, counterexample=r.counterexample)
        if not r.ok:
            failed = True
            if r.counterexample:
                out.note(r.counterexample.rstrip("\n"))
    return EXIT_VERIFY if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="edge-list file (default stdin)")
    common.add_argument("-o", "--output", help="output file (default stdout)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-n", type=int, default=None, help="cap for exhaustive enumerations")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=20)

    parser = argparse.ArgumentParser(prog="modexp", description="Exact modularity and expansion toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="exact invariants of a graph")
    p.add_argument("--what", action="append", default=None, help="q, score, h, hh, hprime, gap (comma list or repeated)")
    p.add_argument("--partition", help="parts separated by '|', vertices by ',' (for --what score)")
    p.add_argument("--decimals", action="store_true", help="also print decimal approximations")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", parents=[common], help="write a graph from a named family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--l", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=_ratio)
    p.add_argument("--a", type=_ratio)
    p.add_argument("--b", type=_ratio)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verdict", parents=[common], help="is a component split by optimal partitions")
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--component-of", type=int, help="component containing this vertex")
    sel.add_argument("--all-components", action="store_true", help="every component (default)")
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("decompose", parents=[common], help="run a constructive decomposition")
    p.add_argument("--mode", choices=("edges", "volume"), default="edges")
    p.add_argument("--e0", type=_ratio)
    p.add_argument("--alpha", type=_ratio)
    p.add_argument("--beta", type=_ratio)
    p.add_argument("--delta", type=_ratio)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "what", 0) is None:
        args.what = ["q"]
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except SizeLimitExceeded as err:
        print(f"error: instance size {err.size} exceeds cap {err.cap}; raise it with --max-n", file=sys.stderr)
        return EXIT_CAP
    except IsolatedVerticesPresent as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ISOLATED
    except HypothesisViolated as err:
        print(f"hypothesis violated: component {_vertices(err.vertices)}", file=sys.stderr)
        out.record(f"hypothesis violated: component {_vertices(err.vertices)}", error="HypothesisViolated", vertices=err.vertices)
        _emit(args, out)
        return EXIT_HYPOTHESIS
    except (ModexpError, UsageError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    _emit(args, out)
    return code


def _emit(args, out: Output) -> None:
    text = out.render()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
