"""Command-line interface.

Exit codes: 0 verified / success, 1 counterexample found, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import constructions as cons
from .degseq import all_degree_sequences, parse_degree_sequence
from .enumeration import all_trees, check_bound, tree_class_count
from .errors import CEIError
from .formats import format_dot, format_edge_list, format_prufer, parse_tree
from .tree import Tree, cei, eccentricities, tree_from_code
from .verification import (
    verify_branching_bounds,
    verify_degree_sequence_extremes,
    verify_global_ordering,
    verify_majorization_monotonicity,
    verify_transformations,
    write_summary_csv,
)

log = logging.getLogger("ceitrees")


class UsageError(Exception):
    pass


def render(x: Fraction) -> str:
    """``p/q ≈ decimal`` with 12 significant digits; the decimal is display only."""
    return f"{x.numerator}/{x.denominator} ≈ {float(x):#.12g}"


# compute ------------------------------------------------------------------


def cmd_compute(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    t = parse_tree(text, args.format)
    value = cei(t)
    print(render(value))
    if args.verbose:
        ecc = eccentricities(t)
        print("vertex degree eccentricity term")
        for u in t.vertices:
            print(f"{u} {t.degree(u)} {ecc[u - 1]} {Fraction(t.degree(u), ecc[u - 1])}")
    return 0


# construct ----------------------------------------------------------------


def _parse_levels(text: str) -> list[list[int]]:
    return [[int(x) for x in part.split(",") if x.strip()] for part in text.split("/")]


def build_variant(args: argparse.Namespace) -> Tree:
    v = args.variant
    if v in ("caterpillar", "greedy"):
        if not args.degrees:
            raise UsageError(f"--variant {v} needs --degrees")
        d = parse_degree_sequence(args.degrees)
        return cons.greedy_caterpillar(d) if v == "caterpillar" else cons.greedy_tree(d)
    if v == "level":
        if not args.levels:
            raise UsageError("--variant level needs --levels, e.g. 2/2,2/1,1")
        tree, _ = cons.level_greedy_tree(_parse_levels(args.levels))
        return tree
    if args.n is None or args.r is None:
        raise UsageError(f"--variant {v} needs --n and --r")
    return cons.f_tree(args.n, args.r) if v == "F" else cons.b_tree(args.n, args.r)


def cmd_construct(args: argparse.Namespace) -> int:
    t = build_variant(args)
    if args.dot:
        body = format_dot(t)
    elif args.prufer:
        body = format_prufer(t)
    else:
        body = format_edge_list(t)
    line = f"CEI {render(cei(t))}"
    if args.out:
        Path(args.out).write_text(body)
        print(line)
    else:
        sys.stdout.write(body)
        sys.stdout.flush()
        print(line, file=sys.stderr)
    return 0


# verify -------------------------------------------------------------------


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_")


def _write_reports(reports, out: str | None, timing: bool) -> None:
    if not out:
        return
    outdir = Path(out)
    outdir.mkdir(parents=True, exist_ok=True)
    for rep in reports:
        name = f"{rep.kind}_{_slug(rep.subject_label())}.json"
        (outdir / name).write_text(rep.to_json(timing))
    write_summary_csv(reports, outdir / "summary.csv")


def _report_failures(reports) -> int:
    failed = [r for r in reports if not r.ok]
    for rep in reports:
        status = "ok" if rep.ok else "COUNTEREXAMPLE"
        log.info("%s %s: %s", rep.kind, rep.subject_label(), status)
    for rep in failed:
        print(f"counterexample: {rep.kind} {rep.subject_label()} fails {', '.join(rep.failures())}")
        for code in _witness_codes(rep):
            sys.stdout.write(format_edge_list(tree_from_code(code)))
    print(f"{len(reports) - len(failed)}/{len(reports)} subjects verified")
    return 1 if failed else 0


def _witness_codes(rep) -> list[bytes]:
    if rep.kind == "extremal":
        return [rep.min_witnesses[0], rep.max_witnesses[0]]
    if rep.kind == "ordering":
        return [rep.levels[0][1][0], rep.levels[-1][1][0]]
    return []


def cmd_verify(args: argparse.Namespace) -> int:
    what = args.what
    if what == "degrees":
        if args.degrees:
            subjects = [parse_degree_sequence(args.degrees)]
        elif args.n is not None:
            check_bound(args.n)
            subjects = list(all_degree_sequences(args.n))
        else:
            raise UsageError("verify degrees needs --n or --degrees")
        reports = [verify_degree_sequence_extremes(d, args.jobs) for d in subjects]
    elif what == "majorization":
        _need_n(args)
        reports = [verify_majorization_monotonicity(args.n)]
    elif what == "branching":
        _need_n(args)
        rs = [args.r] if args.r is not None else range(1, args.n // 2)
        reports = [verify_branching_bounds(args.n, r, args.jobs) for r in rs]
        if not reports:
            raise UsageError(f"no valid r for n={args.n}")
    elif what == "ordering":
        _need_n(args)
        reports = [verify_global_ordering(args.n, args.jobs)]
        for finding in reports[0].findings:
            log.info("finding: %s", finding)
    else:
        reports = [verify_transformations(args.trials, args.seed)]
    _write_reports(reports, args.out, args.timing)
    return _report_failures(reports)


def _need_n(args: argparse.Namespace) -> None:
    if args.n is None:
        raise UsageError(f"verify {args.what} needs --n")


# count --------------------------------------------------------------------


def cmd_count(args: argparse.Namespace) -> int:
    print(f"n={args.n} classes={tree_class_count(args.n, args.jobs)}")
    if args.list and args.n > 1:
        for code, t in all_trees(args.n, args.jobs):
            print(f"{code.decode()} {render(cei(t))}")
    return 0


# parser -------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ceitrees", description=__doc__.splitlines()[0])
    p.add_argument("--log-level", default="WARNING", help="logging level")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="CEI of a tree file")
    c.add_argument("input", help="tree file, or - for stdin")
    c.add_argument("--format", choices=["auto", "edges", "prufer"], default="auto")
    c.add_argument("--verbose", action="store_true", help="per-vertex table")
    c.set_defaults(func=cmd_compute)

    k = sub.add_parser("construct", help="build an extremal tree")
    k.add_argument("--variant", required=True, choices=["caterpillar", "greedy", "level", "F", "B"])
    k.add_argument("--degrees", help="e.g. 4,3,3,1,1,1,1,1,1 or 3^2,2,1^4")
    k.add_argument("--levels", help="level-degree sequence, levels separated by '/'")
    k.add_argument("--n", type=int)
    k.add_argument("--r", type=int)
    k.add_argument("--prufer", action="store_true", help="emit a Prüfer code")
    k.add_argument("--dot", action="store_true", help="emit Graphviz text")
    k.add_argument("--out", help="output path (default stdout)")
    k.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="exhaustive checks of the extremal results")
    v.add_argument("what", choices=["degrees", "majorization", "branching", "ordering", "transforms"])
    v.add_argument("--n", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--degrees")
    v.add_argument("--trials", type=int, default=10_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--out", help="directory for JSON and CSV reports")
    v.add_argument("--timing", action="store_true", help="include elapsed time in JSON")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("count", help="count (and list) isomorphism classes")
    n.add_argument("--n", type=int, required=True)
    n.add_argument("--list", action="store_true")
    n.add_argument("--jobs", type=int, default=1)
    n.set_defaults(func=cmd_count)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (CEIError, UsageError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
