"""Command-line front end.

Exit codes: 0 ok, 2 usage or validation error, 3 verification mismatch,
4 brute-force size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import eco, formulas, tables, verify
from .core import PatternError, parse_pattern_set
from .oeis import OEISClient
from .oracle import DEFAULT_MAX_N, ResourceCapError, Statistic, count_avoiders, refined_distribution

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_CAP = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _names(ps) -> list[str]:
    return sorted(str(p) for p in ps)


def _closed_total(ps, n: int) -> int | None:
    try:
        formulas.closed_form_statistic(ps)
    except formulas.UnsupportedCaseError:
        return None
    if n == 0:
        return 1
    return sum(formulas.closed_form_count(ps, n, k) for k in range(1, n + 1))


def cmd_count(args) -> int:
    ps = parse_pattern_set(args.patterns)
    brute = count_avoiders(args.n, ps, max_n=args.max_n, jobs=args.jobs)
    closed = _closed_total(ps, args.n)
    if args.format == "json":
        doc = {"patterns": _names(ps), "n": args.n, "count": str(brute)}
        if closed is not None:
            doc["closed_form"] = str(closed)
        sys.stdout.write(tables.dumps(doc))
    else:
        print(brute)
        if closed is not None:
            print(f"closed form: {closed}")
    if closed is not None and closed != brute:
        print(f"mismatch: brute force {brute}, closed form {closed}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _emit_rows(rows, fmt: str, json_doc: str, width: int | None = None) -> None:
    if fmt == "csv":
        sys.stdout.write(tables.rows_to_csv(rows))
    elif fmt == "json":
        sys.stdout.write(json_doc)
    else:
        sys.stdout.write(tables.text_table(rows, width))


def cmd_distribution(args) -> int:
    ps = parse_pattern_set(args.patterns)
    stat = Statistic(args.stat)
    dist = refined_distribution(args.n_max, ps, stat, max_n=args.max_n, jobs=args.jobs)
    _emit_rows(dist.rows, args.format, dist.to_json(), args.n_max)
    if not args.check:
        return EXIT_OK
    routes = []
    try:
        if formulas.closed_form_statistic(ps) is stat:
            routes.append(("closed form", formulas.closed_form_distribution(ps, args.n_max)))
    except formulas.UnsupportedCaseError:
        pass
    try:
        table = eco.statistic_table(ps, args.n_max)
        if table.statistic is stat:
            routes.append(("generating tree", table))
    except ValueError:
        pass
    if not routes:
        print(f"check: no closed form or succession rule for {_names(ps)} by {stat.value}",
              file=sys.stderr)
        return EXIT_OK
    status = EXIT_OK
    for name, other in routes:
        bad = [n for n in dist.rows if dist.rows[n] != other.rows[n]]
        if bad:
            status = EXIT_MISMATCH
            print(f"check: {name} differs from brute force at n = {bad}", file=sys.stderr)
        else:
            print(f"check: {name} agrees with brute force for n <= {args.n_max}", file=sys.stderr)
    return status


def cmd_matrix(args) -> int:
    rule = eco.builtin_rule(args.rule)
    m = eco.eco_matrix(rule, args.depth)
    if args.shifted:
        if rule.name != "OMEGA_BELL":
            raise UsageError("--shifted only applies to OMEGA_BELL")
        m = eco.shift_diagonal(m)
    _emit_rows(m.rows, args.format, m.to_json())
    return EXIT_OK


def cmd_gf(args) -> int:
    if args.k < 0 or args.order < 0:
        raise UsageError("--k and --order must be nonnegative")
    s = formulas.column_gf(args.k, args.order)
    if args.format == "json":
        sys.stdout.write(tables.dumps({"k": args.k, "order": args.order,
                                       "coefficients": [str(c) for c in s.coeffs]}))
    elif args.format == "csv":
        lines = ["n,k,count"] + [f"{n},{args.k},{c}" for n, c in enumerate(s.coeffs)]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        print(" ".join(map(str, s.coeffs)))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        checks = verify.run_suite(name, n_max=args.n_max, jobs=args.jobs)
        bad = [c for c in checks if not c.ok]
        failed |= bool(bad)
        print(f"{name}: {'FAIL' if bad else 'PASS'} ({len(checks) - len(bad)}/{len(checks)} checks)")
        for c in checks:
            if not c.ok or args.verbose:
                print(f"  [{'ok' if c.ok else 'FAIL'}] {c.name}" + (f": {c.detail}" if not c.ok and c.detail else ""))
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_oeis(args) -> int:
    client = OEISClient(cache_dir=Path(args.cache_dir) if args.cache_dir else None,
                        offline=args.offline)
    result = client.lookup(args.terms)
    if result.degraded:
        print("note: OEIS unreachable, matched against the built-in table only", file=sys.stderr)
    for m in result.matches:
        print(f"{m.id}  {m.name}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="vincular",
        description="Permutations avoiding generalized patterns, refined by first/last entry.")
    sub = p.add_subparsers(dest="command", required=True)

    def oracle_flags(sp):
        sp.add_argument("--patterns", required=True, help="comma-separated, e.g. 1-23,21-3")
        sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help="refuse brute force above this length (default %(default)s)")
        sp.add_argument("--jobs", type=int, default=0, help="worker processes, 0 = all cores")

    def fmt_flag(sp, choices=("text", "csv", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    sp = sub.add_parser("count", help="|S_n(patterns)| by brute force")
    oracle_flags(sp)
    sp.add_argument("--n", type=int, required=True)
    fmt_flag(sp, ("text", "json"))
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("distribution", help="counts by length and first/last entry")
    oracle_flags(sp)
    sp.add_argument("--stat", choices=["first", "last"], required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--check", action="store_true",
                    help="compare with closed form and generating tree (exit 3 on mismatch)")
    fmt_flag(sp)
    sp.set_defaults(func=cmd_distribution)

    sp = sub.add_parser("matrix", help="ECO matrix of a built-in succession rule")
    sp.add_argument("--rule", required=True, type=str.upper, choices=eco.RULE_NAMES)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--shifted", action="store_true", help="move the diagonal to column 1")
    fmt_flag(sp)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("gf", help="coefficients of a Motzkin-pair column series")
    sp.add_argument("--k", type=int, required=True, help="column, numbered from 0")
    sp.add_argument("--order", type=int, required=True)
    fmt_flag(sp)
    sp.set_defaults(func=cmd_gf)

    sp = sub.add_parser("verify", help="run the cross-check suites")
    sp.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    sp.add_argument("--n-max", type=int, default=8, help="brute-force length for oracle checks")
    sp.add_argument("--jobs", type=int, default=0)
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oeis", help="look up a sequence prefix")
    sp.add_argument("terms", nargs="+", type=int)
    sp.add_argument("--offline", action="store_true")
    sp.add_argument("--cache-dir")
    sp.set_defaults(func=cmd_oeis)
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, PatternError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
