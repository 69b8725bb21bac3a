"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .bijection import FamilyError, format_trace, normalize_trace
from .core import NotStandardError, Puzzle, Support, UnknownCodeError
from .count import (DEFAULT_ORACLE_BOUND, OracleBoundError, brute_force_count,
                    exact_support_count, profile, sequence)
from .dictionary import FORMATS, census, emit_report
from .oeis import OeisLoadError, oeis_load
from .support import enumerate_connected_classes
from .verify import SUITES, run_suite, secant_ratio_table

OEIS_ENV = "STDPUZZLE_OEIS"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("stdpuzzle")


class UsageError(Exception):
    pass


def _support(literal: str) -> Support:
    try:
        return Support.parse(literal)
    except (UnknownCodeError, ValueError) as exc:
        raise UsageError(f"bad support literal {literal!r}: {exc}") from None


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        if text and not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w") as fh:
        fh.write(text)


def cmd_count(args) -> int:
    s = _support(args.support)
    if args.n is not None:
        lo = hi = args.n
    else:
        lo, hi = args.n_from, args.n_to
    if lo < 2 or hi < lo:
        raise UsageError("need 2 <= --from <= --to")
    if args.exact:
        terms = [exact_support_count(s, n) for n in range(lo, hi + 1)]
    elif args.oracle:
        try:
            terms = [brute_force_count(s, n, args.oracle_bound) for n in range(lo, hi + 1)]
        except OracleBoundError as exc:
            raise UsageError(str(exc)) from None
    else:
        terms = list(sequence(s, lo, hi).terms)
    if args.format == "json":
        out = json.dumps({"support": s.name, "n_min": lo, "n_max": hi,
                          "terms": [str(t) for t in terms]}, sort_keys=True)
    else:
        out = " ".join(map(str, terms))
    _write(out + "\n", args.output)
    return EXIT_OK


def cmd_profile(args) -> int:
    s = _support(args.support)
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    prof = profile(s, args.n)
    if args.format == "json":
        out = json.dumps({"support": s.name, "n": args.n, "sum": str(prof.total),
                          "cells": [[x, y, str(c)] for x, y, c in prof.triples()]},
                         sort_keys=True) + "\n"
    else:
        lines = [f"{x} {y} {c}" for x, y, c in prof.triples()]
        lines.append(f"sum {prof.total}")
        out = "\n".join(lines) + "\n"
    _write(out, args.output)
    return EXIT_OK


def _load_table(path):
    path = path or os.environ.get(OEIS_ENV)
    if not path:
        return None
    try:
        return oeis_load(path)
    except OeisLoadError as exc:
        log.warning("OEIS matching disabled: %s", exc)
        return None


def cmd_census(args) -> int:
    if not 1 <= args.size <= args.max_size:
        raise UsageError(f"--size must be between 1 and {args.max_size}")
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    if workers < 1:
        raise UsageError("--workers must be at least 1")
    table = _load_table(args.oeis)
    records = census(args.size, args.terms + 1, workers=workers, table=table)
    _write(emit_report(records, args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    reports = run_suite(args.suite, args.n_max)
    failed = False
    for r in reports:
        if r.passed:
            continue
        if r.status == "theorem" or (r.status == "conjecture" and args.strict_conjecture) \
                or (r.status == "identity" and args.strict_identity):
            failed = True
    ratios = secant_ratio_table(args.n_max) if args.suite in ("secant", "all") else None
    if args.format == "json":
        doc = {"reports": [r.to_dict() for r in reports], "all_pass": not failed}
        if ratios is not None:
            doc["secant_ratios"] = [{"n": n, "term": str(t), "ratio": q} for n, t, q in ratios]
        out = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    else:
        parts = [r.format() for r in reports]
        if ratios is not None:
            parts.append("CEHJLPRVX against secant numbers:\n" + "\n".join(
                f"  n={n:<3} {t:>20} {q}" for n, t, q in ratios))
        parts.append("ALL PASS" if not failed else "FAILED")
        out = "\n\n".join(parts) + "\n"
    _write(out, args.output)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_biject(args) -> int:
    try:
        alpha = Puzzle.parse(args.puzzle)
    except (ValueError, NotStandardError) as exc:
        raise UsageError(str(exc)) from None
    try:
        if args.format == "json":
            beta, steps = normalize_trace(alpha)
            out = json.dumps({
                "input": str(alpha), "result": str(beta),
                "steps": [{"puzzle": str(s.puzzle), "piece": s.piece, "position": s.position,
                           "flip": list(s.flipped)} for s in steps],
            }, indent=1) + "\n"
        else:
            out = format_trace(alpha) + "\n"
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    _write(out, args.output)
    return EXIT_OK


def cmd_classes(args) -> int:
    classes = enumerate_connected_classes(args.size)
    if args.count:
        out = f"{len(classes)}\n"
    else:
        out = "".join(f"{c.name} {' '.join(sorted(m.name for m in c.members))}\n" for c in classes)
    _write(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stdpuzzle", description="Enumerate 2 x n standard puzzles.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("-o", "--output", help="write to a file instead of stdout")

    c = sub.add_parser("count", help="count puzzles of a support")
    c.add_argument("--support", required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--from", dest="n_from", type=int, default=2)
    c.add_argument("--to", dest="n_to", type=int, default=12)
    c.add_argument("--exact", action="store_true", help="minimal support equal to the given set")
    c.add_argument("--oracle", action="store_true", help="use the brute-force counter")
    c.add_argument("--oracle-bound", type=int, default=DEFAULT_ORACLE_BOUND)
    common(c)
    c.set_defaults(func=cmd_count)

    pr = sub.add_parser("profile", help="boundary profile (X, Y, count)")
    pr.add_argument("--support", required=True)
    pr.add_argument("--n", type=int, required=True)
    common(pr)
    pr.set_defaults(func=cmd_profile)

    ce = sub.add_parser("census", help="dictionary of connected classes of one size")
    ce.add_argument("--size", type=int, required=True)
    ce.add_argument("--terms", type=int, default=11, help="number of terms, from n = 2")
    ce.add_argument("--oeis", help=f"stripped OEIS dump (default: ${OEIS_ENV})")
    ce.add_argument("--workers", type=int, help="processes (default: all cores)")
    ce.add_argument("--max-size", type=int, default=6, help=argparse.SUPPRESS)
    common(ce, FORMATS)
    ce.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", help="check theorems and identities")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--strict-conjecture", action="store_true",
                   help="fail the run when the conjecture check fails")
    v.add_argument("--strict-identity", action="store_true",
                   help="fail the run when the secant law check fails")
    common(v)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("biject", help="map a BGTY puzzle into BJRY with a step trace")
    b.add_argument("puzzle", help='puzzle literal "top/bottom", e.g. "3,4/1,2"')
    common(b)
    b.set_defaults(func=cmd_biject)

    cl = sub.add_parser("classes", help="list connected classes of one size")
    cl.add_argument("--size", type=int, required=True)
    cl.add_argument("--count", action="store_true")
    common(cl, ("text",))
    cl.set_defaults(func=cmd_classes)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"stdpuzzle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"stdpuzzle: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
