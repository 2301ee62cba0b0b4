"""Command-line front end.

Exit codes: 0 success, 2 validation failure, 3 budget exceeded, 4 config error,
1 anything unexpected.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import distance, io, repro, reports, search
from .errors import (
    BudgetExceeded,
    ConfigError,
    ParseError,
    QcError,
    RangeTooLarge,
)

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_BUDGET, EXIT_CONFIG = 0, 1, 2, 3, 4


def _budget(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("budget must be at least 1")
    return v


def _field_q(s: str) -> int:
    try:
        return io.parse_field(s).q
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="-", help="report path ('-' for stdout)")
    common.add_argument("--budget", type=_budget, default=distance.DEFAULT_BUDGET,
                        help="maximum number of codewords to enumerate")
    common.add_argument("--timing", action="store_true",
                        help="add elapsed seconds to the report (breaks byte-determinism)")

    p = argparse.ArgumentParser(prog="qcqecc", description="Quasi-cyclic codes and the quantum codes they induce.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="self-orthogonality and dual-containment verdicts")
    s.add_argument("description")
    s.add_argument("--kind", choices=["E", "H", "S"], action="append",
                   help="inner product (repeatable; default: every applicable one)")

    s = sub.add_parser("dual", parents=[common], help="dual code under an inner product")
    s.add_argument("description")
    s.add_argument("--kind", choices=["E", "H", "S"], default="E")

    s = sub.add_parser("distance", parents=[common], help="minimum distance")
    s.add_argument("description")
    s.add_argument("--weight", choices=[distance.HAMMING, distance.SYMPLECTIC], default=distance.HAMMING)

    s = sub.add_parser("stabilizer", parents=[common], help="stabilizer code from a self-orthogonal code")
    s.add_argument("description")
    s.add_argument("--kind", choices=["E", "H", "S"], required=True)
    s.add_argument("--strict", action="store_true", help="fail instead of reporting a distance lower bound")

    s = sub.add_parser("sync", parents=[common], help="quantum synchronizable code from a nested pair")
    s.add_argument("config")
    s.add_argument("--al", type=int, default=0, help="left misalignment a_l")
    s.add_argument("--ar", type=int, default=0, help="right misalignment a_r")

    s = sub.add_parser("search", parents=[common], help="search two-generator codes")
    s.add_argument("--field", type=_field_q, required=True, help="field order, e.g. 2, 4 or 2^2")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--kind", choices=["E", "H", "S"], default="S")
    s.add_argument("--test", choices=["so", "dc"], default="so",
                   help="filter: self-orthogonal or dual-containing")
    s.add_argument("--v-degree", type=int, default=None, help="maximum degree of v1 and v2")
    s.add_argument("--min-k", type=int, default=0)
    s.add_argument("--samples", type=int, default=None, help="sample this many candidates instead of exhausting")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--top", type=int, default=10)

    s = sub.add_parser("repro", parents=[common], help="replay the bundled worked examples")
    s.add_argument("names", nargs="*")
    s.add_argument("--all", action="store_true")
    s.add_argument("--list", action="store_true")
    s.add_argument("--out-dir", default=None, help="write one report per item here")
    s.add_argument("--update-golden", action="store_true", help="rewrite the golden reports")
    return p


def _run(args) -> tuple[dict, int]:
    cmd = args.command
    if cmd in ("check", "dual", "distance", "stabilizer"):
        desc = io.load_description(args.description)
        if cmd == "check":
            return reports.check(desc, args.kind), EXIT_OK
        if cmd == "dual":
            return reports.dual(desc, args.kind), EXIT_OK
        if cmd == "distance":
            return reports.distance_report(desc, args.weight, args.budget), EXIT_OK
        if desc.two_gen is None:
            raise ConfigError("stabilizer needs a two_generator description")
        out = {"command": "stabilizer", "input": desc.echo()}
        out.update(reports.stabilizer(desc.two_gen, args.kind, args.budget, partial=not args.strict))
        return out, (EXIT_OK if out["self_orthogonal"] else EXIT_INVALID)
    if cmd == "sync":
        cfg = io.load_json(args.config)
        cfg = cfg.get("sync", cfg)
        try:
            body = reports.sync(cfg, args.al, args.ar, args.budget)
        except KeyError as exc:
            raise ConfigError(f"sync config lacks key {exc}") from exc
        return {"command": "sync", "input": cfg, **body}, EXIT_OK
    if cmd == "search":
        cfg = search.SearchConfig(q=args.field, m=args.m, kind=args.kind, test=args.test,
                                  v_degree=args.v_degree, min_k=args.min_k, samples=args.samples,
                                  seed=args.seed, top=args.top, budget=args.budget)
        return search.run(cfg), EXIT_OK
    if cmd == "repro":
        if args.list:
            return {"command": "repro", "available": repro.names()}, EXIT_OK
        if not args.all and not args.names:
            raise ConfigError("name one or more items, or pass --all")
        res = repro.run(None if args.all else args.names, args.out_dir, args.update_golden, args.budget)
        return res, (EXIT_OK if res["all_match"] else EXIT_INVALID)
    raise ConfigError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, code = _run(args)
    except (ConfigError, ParseError) as exc:
        report, code = {"command": args.command, "error": "config", "message": str(exc)}, EXIT_CONFIG
    except (BudgetExceeded, RangeTooLarge) as exc:
        report = {"command": args.command, "error": "budget", "message": str(exc)}
        if getattr(exc, "lower_bound", None) is not None:
            report["lower_bound"] = exc.lower_bound
        code = EXIT_BUDGET
    except QcError as exc:
        report = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}
        code = EXIT_INVALID
    except (KeyError, TypeError, ValueError) as exc:
        report, code = {"command": args.command, "error": "config", "message": str(exc)}, EXIT_CONFIG
    if args.timing:
        report["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    try:
        io.write_report(report, args.out)
    except OSError as exc:
        print(f"cannot write report: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return code


if __name__ == "__main__":
    sys.exit(main())
