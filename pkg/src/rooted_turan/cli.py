"""Command-line entry point.

Graphs travel as canonical JSON on stdin/stdout so verbs compose with pipes::

    rooted-turan construct D 4 3 | rooted-turan check rho

Exit codes: 0 success or property holds, 1 property fails, 2 usage or
validation error, 3 budget exceeded. Error payloads go to stderr as JSON.
"""

from __future__ import annotations

import argparse
import sys

from .constructions import FAMILIES, construct
from .density import DEFAULT_BUDGET, is_balanced, rho
from .errors import BudgetExceeded, RootedTuranError, ValidationError
from .exponent import exponent_of, realise, realise_D, realise_mod1_chain
from .graph import RootedGraph, dumps_canonical, fmt_rational, graph_from_json
from .operators import blow_up, densify, identify, subdivide
from .oracle import exponent_fit, extremal_number
from .search import SearchBudget, find_subgraph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValidationError):
    code = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_graph(source: str | None, stdin) -> RootedGraph:
    if source in (None, "-"):
        text = stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read {source}: {exc.strerror}") from exc
    if not text.strip():
        raise ValidationError("no graph JSON on input")
    return graph_from_json(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(node_limit=args.budget, time_limit=args.time_limit, seed=args.seed)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10**7, help="search node limit")
    p.add_argument("--time-limit", type=float, default=60.0, help="seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rooted-turan", description=__doc__.split("\n")[0])
    parser.add_argument("--summary", action="store_true", help="print a one-line summary instead of JSON")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a family member")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)

    p = sub.add_parser("transform", help="apply an operator to a graph")
    p.add_argument("--input", "-i")
    p.add_argument("op", choices=["blowup", "subdivide", "densify", "identify"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--star", action="store_true", help="starred densification")

    p = sub.add_parser("check", help="test a property of a graph")
    p.add_argument("--input", "-i")
    p.add_argument("property", choices=["balanced", "bipartite", "rho", "exponent"])
    p.add_argument("--max-nonroots", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--method", choices=["enumerate", "flow", "auto"], default="enumerate")

    p = sub.add_parser("realise", help="graph family for the exponent 2 - a/b")
    p.add_argument("fraction", help="a/b with 0 < a < b")
    p.add_argument("--mode", choices=["thm48", "modm1", "d-family"], default="thm48")

    p = sub.add_parser("embed", help="find a copy of a pattern in a host")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    _add_budget_flags(p)

    p = sub.add_parser("ex", help="exact extremal number ex(n, F)")
    p.add_argument("n", type=int)
    p.add_argument("--pattern", required=True)
    _add_budget_flags(p)

    p = sub.add_parser("fit", help="log-log slope of ex(n, F) (diagnostic)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", required=True, dest="n_range", help="range a..b")
    _add_budget_flags(p)
    return parser


def _need(params: list[int], count: int, what: str) -> list[int]:
    if len(params) != count:
        raise UsageError(f"{what} takes {count} integer parameter(s)")
    return params


def _parse_fraction(text: str) -> tuple[int, int]:
    # kept unreduced so congruence checks see the numbers as typed
    num, sep, den = text.partition("/")
    try:
        return int(num), int(den)
    except ValueError:
        raise UsageError(f"expected a/b with integers, got {text!r}") from None


def _run(args, stdin, out) -> int:
    verb = args.verb
    if verb == "construct":
        G = construct(args.family, *args.params)
        out.write((f"{G!r}" if args.summary else G.dumps()) + "\n")
        return EXIT_OK

    if verb == "transform":
        G = _read_graph(args.input, stdin)
        if args.op == "blowup":
            (ell,) = _need(args.params, 1, "blowup")
            H = blow_up(G, ell)
        elif args.op == "subdivide":
            _need(args.params, 0, "subdivide")
            H = subdivide(G)
        elif args.op == "densify":
            (t,) = _need(args.params, 1, "densify")
            H = densify(G, t, starred=args.star)
        else:
            u, v = _need(args.params, 2, "identify")
            H = identify(G, u, v)
        out.write((f"{H!r}" if args.summary else H.dumps()) + "\n")
        return EXIT_OK

    if verb == "check":
        G = _read_graph(args.input, stdin)
        if args.property == "rho":
            out.write(fmt_rational(rho(G)) + "\n")
            return EXIT_OK
        if args.property == "exponent":
            out.write(fmt_rational(exponent_of(G)) + "\n")
            return EXIT_OK
        if args.property == "bipartite":
            colour = G.two_colouring()
            ok = colour is not None
            payload = {"bipartite": ok}
            if ok:
                payload["parts"] = [[v for v in range(G.n) if colour[v] == c] for c in (0, 1)]
            out.write((str(ok).lower() if args.summary else dumps_canonical(payload)) + "\n")
            return EXIT_OK if ok else EXIT_FAIL
        report = is_balanced(G, budget=args.max_nonroots, method=args.method)
        payload = {
            "balanced": report.balanced,
            "rho": fmt_rational(report.rho),
            "min_rho": fmt_rational(report.min_rho),
            "witness": None if report.witness is None else sorted(report.witness),
        }
        if args.summary:
            line = "balanced" if report.balanced else (
                f"not balanced: S={sorted(report.witness)} has rho {fmt_rational(report.min_rho)}"
                f" < {fmt_rational(report.rho)}"
            )
        else:
            line = dumps_canonical(payload)
        out.write(line + "\n")
        return EXIT_OK if report.balanced else EXIT_FAIL

    if verb == "realise":
        a, b = _parse_fraction(args.fraction)
        if args.mode == "d-family":
            G = realise_D(a, b)
            payload = {
                "exponent": fmt_rational(exponent_of(G)),
                "family": f"D {a - 1} {(b + 1) // a - 1}",
                "graph": G.to_json(),
            }
            text = dumps_canonical(payload)
            summary = f"D({a - 1},{(b + 1) // a - 1}) rho={fmt_rational(rho(G))} exponent={payload['exponent']}"
        else:
            chain = realise(a, b) if args.mode == "thm48" else realise_mod1_chain(a, b)
            text = chain.dumps()
            kinds = " -> ".join(s.kind if s.kind != "base" else f"base({s.k})" for s in chain.steps)
            summary = f"{kinds} rho={fmt_rational(chain.rho)} exponent={fmt_rational(chain.exponent)}"
        out.write((summary if args.summary else text) + "\n")
        return EXIT_OK

    if verb == "embed":
        host = _read_graph(args.host, stdin)
        pattern = _read_graph(args.pattern, stdin)
        emb = find_subgraph(host, pattern, _budget(args))
        if emb is None:
            out.write(("absent" if args.summary else "null") + "\n")
            return EXIT_FAIL
        out.write((f"found {list(emb.mapping)}" if args.summary else dumps_canonical(emb.to_json())) + "\n")
        return EXIT_OK

    if verb == "ex":
        pattern = _read_graph(args.pattern, stdin)
        res = extremal_number(args.n, pattern, _budget(args))
        out.write((res.summary() if args.summary else res.dumps()) + "\n")
        return EXIT_OK if res.certified else EXIT_BUDGET

    if verb == "fit":
        pattern = _read_graph(args.pattern, stdin)
        lo, sep, hi = args.n_range.partition("..")
        if not sep:
            raise UsageError("--n expects a range like 4..8")
        try:
            ns = range(int(lo), int(hi) + 1)
        except ValueError as exc:
            raise UsageError(f"bad range {args.n_range!r}") from exc
        fit = exponent_fit(pattern, ns, _budget(args))
        line = f"slope {fit['slope']:.4f} ({fit['label']})" if args.summary else dumps_canonical(fit)
        out.write(line + "\n")
        return EXIT_OK if all(p["certified"] for p in fit["points"]) else EXIT_BUDGET

    raise UsageError(f"unknown verb {verb!r}")  # pragma: no cover


def main(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _run(args, stdin, stdout)
    except BudgetExceeded as exc:
        stderr.write(dumps_canonical(exc.to_json()) + "\n")
        return EXIT_BUDGET
    except ValidationError as exc:
        stderr.write(dumps_canonical(exc.to_json()) + "\n")
        return EXIT_USAGE
    except RootedTuranError as exc:
        stderr.write(dumps_canonical(exc.to_json()) + "\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
