"""Command-line front end: ``lazwitt qpoly | verify | urp | jet | witt``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from pathlib import Path

from . import expr as ex
from .arith import OPS, CacheIOError, QTable, compute_q
from .checks import SUITES, SuiteOptions, run_suite
from .jets import JetContext, JetError, KSeries, jet_vector, urp_structure_map
from .params import ParamError, Params
from .poly import GEN, PI, Poly
from .witt import (
    RingMismatch,
    WittVector,
    frobenius_op,
    verschiebung,
    witt_add,
    witt_mul,
    witt_neg,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
CACHE_ENV = "LAZWITT_CACHE_DIR"
DEFAULT_CACHE = ".lazwitt-cache"


class UsageError(Exception):
    pass


def _params(args) -> Params:
    try:
        return Params(args.p, args.q, args.t)
    except ParamError as exc:
        raise UsageError(str(exc)) from exc


def _render(f: Poly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(f.to_json())
    if fmt == "latex":
        return f.to_latex()
    return f.to_text()


def _cache_dir(args) -> Path | None:
    if args.no_cache:
        return None
    return Path(args.cache_dir or os.environ.get(CACHE_ENV) or DEFAULT_CACHE)


def cmd_qpoly(args) -> int:
    params = _params(args)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    table = QTable(_cache_dir(args))
    f = compute_q(args.op, args.n, params.p, params.q, params.t, table)
    print(_render(f, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    _params(args)
    opts = SuiteOptions(p=args.p, q=args.q, t=args.t, m=args.m, n=args.n, window=args.window,
                        seed=args.seed, samples=args.samples)
    results = run_suite(args.suite, opts)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    summary = {
        "suite": args.suite,
        "seed": args.seed,
        "params": {"p": args.p, "q": args.q, "t": args.t, "m": args.m, "n": args.n, "window": args.window},
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }
    print(json.dumps(summary))
    return EXIT_FAIL if failed else EXIT_OK


def _pretty(text: str) -> str:
    return re.sub(r"\bpi\b", "π", text.replace(" * ", "·").replace("*", "·"))


def cmd_urp(args) -> int:
    if args.m < 0:
        raise UsageError("--m must be >= 0")
    params = _params(args)
    names = args.generators or [f"t{i}" for i in range(1, args.r + 1)]
    if not names:
        raise UsageError("need at least one generator")
    inputs = [(n, n) for n in names] + [(_pretty(e), e) for e in args.element]
    rows = []
    for label, text in inputs:
        try:
            e = ex.parse(text)
            f = ex.to_poly(e, params.p, modular=True)
            if any(v.kind not in (GEN, PI) for v in f.variables()):
                raise UsageError(f"{text!r}: elements of k[[pi]] may only use generators and pi")
            series = urp_structure_map(KSeries.from_poly(f, args.m))
        except (ex.ExprError, JetError) as exc:
            raise UsageError(str(exc)) from exc
        rows.append((label, series))
    if args.format == "json":
        print(json.dumps({
            "p": params.p,
            "m": args.m,
            "table": [{"input": label, "coeffs": [c.to_json() for c in s.coeffs], "text": s.to_text()}
                      for label, s in rows],
        }))
    else:
        for label, s in rows:
            print(f"{label} ↦ {s.to_text()}")
    return EXIT_OK


def cmd_jet(args) -> int:
    if args.m < 0:
        raise UsageError("--m must be >= 0")
    params = _params(args)
    ctx = JetContext(params.p, params.q, params.t, args.m, QTable(_cache_dir(args)))
    try:
        vec = jet_vector(ex.parse(args.expr), ctx)
    except (ex.ExprError, JetError) as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps({"expr": args.expr, "m": args.m, "coords": [c.to_json() for c in vec]}))
    else:
        for n, c in enumerate(vec):
            print(f"d{n}({args.expr}) = {_render(c, args.format)}")
    return EXIT_OK


def _read_vector(path: str) -> WittVector:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CacheIOError(f"cannot read {path}: {exc}") from exc
    try:
        return WittVector.from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: not a Witt vector document ({exc})") from exc


def cmd_witt(args) -> int:
    unary = {"neg": witt_neg, "F": frobenius_op, "V": verschiebung}
    vecs = [_read_vector(p) for p in args.inputs]
    expected = 1 if args.operation in unary else 2
    if len(vecs) != expected:
        raise UsageError(f"{args.operation} takes {expected} input(s)")
    try:
        if args.operation in unary:
            out = unary[args.operation](vecs[0])
        elif args.operation == "add":
            out = witt_add(*vecs)
        elif args.operation == "sub":
            out = witt_add(vecs[0], witt_neg(vecs[1]))
        else:
            out = witt_mul(*vecs)
    except RingMismatch as exc:
        raise UsageError(str(exc)) from exc
    print(json.dumps(out.to_json()))
    return EXIT_OK


def _add_params(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, default=2, help="prime p")
    sp.add_argument("--q", type=int, default=2, help="power q of p")
    sp.add_argument("--t", type=int, default=0, help="twist t")


def _add_cache(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--cache-dir", default=None, help=f"Q-polynomial cache (default ${CACHE_ENV} or ./{DEFAULT_CACHE})")
    sp.add_argument("--no-cache", action="store_true", help="compute in memory only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lazwitt", description="Lazardian Witt vectors and jet algebras.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("qpoly", help="print an arithmetic polynomial Q_n")
    _add_params(sp)
    _add_cache(sp)
    sp.add_argument("--op", choices=OPS, default="add")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sp.set_defaults(func=cmd_qpoly)

    sp = sub.add_parser("verify", help="run a verification suite")
    _add_params(sp)
    sp.add_argument("--suite", required=True, help=", ".join(SUITES))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", type=int, default=None, help="largest degree / index")
    sp.add_argument("--m", type=int, default=None, help="largest truncation order")
    sp.add_argument("--window", type=int, default=None, help="largest Witt window")
    sp.add_argument("--samples", type=int, default=None, help="random cases per check")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("urp", help="structure map of the universal residual perfection of k[[pi]]/(pi^(m+1))")
    _add_params(sp)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--r", type=int, default=1, help="number of generators t1..tr")
    sp.add_argument("--generators", nargs="*", default=None, help="explicit generator names")
    sp.add_argument("--element", action="append", default=[], help="extra element, e.g. 't1*pi'")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_urp)

    sp = sub.add_parser("jet", help="coordinates d^[n] of an expression in the free Lazardian jet algebra")
    _add_params(sp)
    _add_cache(sp)
    sp.add_argument("expr")
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sp.set_defaults(func=cmd_jet)

    sp = sub.add_parser("witt", help="Witt-vector arithmetic on JSON documents ('-' reads stdin)")
    sp.add_argument("operation", choices=("add", "sub", "mul", "neg", "F", "V"))
    sp.add_argument("inputs", nargs="+")
    sp.set_defaults(func=cmd_witt)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CacheIOError, OSError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
