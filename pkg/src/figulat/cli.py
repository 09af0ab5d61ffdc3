"""Command-line front end: verification sweeps, number tables, face
listings, and the closed-form-vs-oracle audit.

Exit codes: 0 all ok, 1 identity or audit failure, 2 usage error, 3 a
sweep cell or listing was skipped for budget reasons.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional, Sequence

from . import combinatorics, oracles
from .errors import BudgetExceededError, DomainError
from .facets import (
    DEFAULT_MAX_EXPRESSIONS,
    enumerate_facets,
    facet_to_surjection,
)
from .lattice import DEFAULT_MAX_POINTS, count_lattice_points, cube_points, point_multiplicity
from .verifier import ROUTES, verify_algebraic, verify_geometric, verify_pointwise

SCHEMA_VERSION = "1"
MAX_POINTS_ENV = "FIGULAT_MAX_POINTS"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def parse_range(text: str, minimum: int, flag: str) -> range:
    """Inclusive 'a..b' range or a single value 'a'."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects 'a' or 'a..b', got {text!r}")
    if lo < minimum:
        raise argparse.ArgumentTypeError(f"{flag} values must be >= {minimum}, got {lo}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"{flag} range is empty: {text!r}")
    return range(lo, hi + 1)


def emit_records(records: list[dict], fmt: str, out) -> None:
    """Write records in the chosen format; all formats carry the same
    fields, including the schema version."""
    tagged = [{"schema": SCHEMA_VERSION, **r} for r in records]
    if fmt == "json-lines":
        for record in tagged:
            out.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        if not tagged:
            return
        writer = csv.DictWriter(out, fieldnames=list(tagged[0].keys()))
        writer.writeheader()
        writer.writerows(tagged)
    else:  # plain-table
        if not tagged:
            return
        keys = list(tagged[0].keys())
        rows = [[str(r[k]) for k in keys] for r in tagged]
        widths = [max(len(k), *(len(row[i]) for row in rows)) for i, k in enumerate(keys)]
        out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def default_max_points() -> int:
    value = os.environ.get(MAX_POINTS_ENV)
    if value is None:
        return DEFAULT_MAX_POINTS
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{MAX_POINTS_ENV} must be an integer, got {value!r}"
        )


def cmd_verify(args, out, err) -> int:
    routes = list(ROUTES) if args.route == "all" else [args.route]
    ordered_routes = [r for r in ROUTES if r in routes]
    records = []
    any_failed = False
    any_skipped = False
    for p in args.p:
        for n in args.n:
            for route in ordered_routes:
                try:
                    if route == "algebraic":
                        report = verify_algebraic(p, n)
                    elif route == "geometric":
                        report = verify_geometric(
                            p, n, args.max_expressions, args.max_points
                        )
                    else:
                        report = verify_pointwise(p, n, args.max_points)
                except BudgetExceededError as exc:
                    any_skipped = True
                    err.write(f"skipped p={p} n={n} route={route}: {exc}\n")
                    continue
                if not report.ok:
                    any_failed = True
                records.append({
                    "p": report.p,
                    "n": report.n,
                    "route": report.route,
                    "lhs": report.lhs,
                    "rhs": report.rhs,
                    "ok": report.ok,
                })
    emit_records(records, args.format, out)
    if any_failed:
        return EXIT_FAILURE
    if any_skipped:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_table(args, out, err) -> int:
    records = []
    if args.kind == "stirling":
        for m in args.m:
            for j in range(1, m + 1):
                records.append({
                    "kind": "stirling", "symbol": f"S({m},{j})",
                    "m": m, "j": j,
                    "value": combinatorics.stirling2_recurrence(m, j),
                })
    elif args.kind == "facet-counts":
        for p in args.p:
            for l in range(p):
                records.append({
                    "kind": "facet-counts", "symbol": f"c({p},{l})",
                    "p": p, "l": l,
                    "value": combinatorics.facet_count(p, l),
                })
    else:  # figurate
        for k in args.k:
            for n in args.n:
                records.append({
                    "kind": "figurate", "symbol": f"F^{k}_{n}",
                    "k": k, "n": n,
                    "value": combinatorics.figurate(k, n),
                })
    emit_records(records, args.format, out)
    return EXIT_OK


def cmd_facets(args, out, err) -> int:
    try:
        faces = enumerate_facets(args.p, args.l, args.max_expressions)
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceededError as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    records = []
    for face in faces:
        record = {"p": args.p, "l": args.l, "facet": face.text()}
        if args.with_surjections:
            record["surjection"] = ",".join(
                str(v) for v in facet_to_surjection(face).map
            )
        if args.with_counts is not None:
            record["points"] = count_lattice_points(face, args.with_counts)
        records.append(record)
    emit_records(records, args.format, out)
    return EXIT_OK


def _audit_pairings(args):
    """Yield (name, computed, expected) triples for every closed-form-vs-
    oracle pairing."""
    for m in range(0, args.m_max + 1):
        for j in range(1, max(m, 1) + 1):
            yield (
                f"stirling m={m} j={j}",
                combinatorics.stirling2_recurrence(m, j),
                combinatorics.stirling2_inclusion_exclusion(m, j),
            )
    for m in range(1, args.m_max + 1):
        for k in range(1, m + 1):
            yield (
                f"surjections m={m} k={k}",
                combinatorics.surjection_count(m, k),
                len(oracles.oracle_surjections(m, k)),
            )
    for m in range(1, min(args.m_max, 8) + 1):
        yield (
            f"bell row m={m}",
            sum(combinatorics.stirling2_recurrence(m, j) for j in range(1, m + 1)),
            len(oracles.oracle_set_partitions(m)),
        )
    for k in range(1, args.k_max + 1):
        for n in range(1, args.n_max + 1):
            yield (
                f"figurate k={k} n={n}",
                combinatorics.figurate(k, n),
                oracles.oracle_weakly_decreasing_tuples(k, n),
            )
    for p in range(1, args.p_max + 1):
        for l in range(p):
            yield (
                f"facet count p={p} l={l}",
                len(enumerate_facets(p, l)),
                combinatorics.facet_count(p, l),
            )
    for p in range(1, args.cover_p_max + 1):
        for n in range(1, args.cover_n_max + 1):
            for point in cube_points(p, n):
                yield (
                    f"signed cover p={p} n={n} point=({point.text()})",
                    point_multiplicity(point, p),
                    oracles.oracle_signed_cover(point, p),
                )


def cmd_audit(args, out, err) -> int:
    mismatches = 0
    for name, computed, expected in _audit_pairings(args):
        if computed != expected:
            mismatches += 1
            out.write(f"MISMATCH {name}: computed {computed}, oracle {expected}\n")
    if mismatches:
        err.write(f"audit failed: {mismatches} mismatches\n")
        return EXIT_FAILURE
    out.write("audit ok\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figulat",
        description="Exact verification of the figurate-number facet identity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("plain-table", "csv", "json-lines")

    verify = sub.add_parser("verify", help="run verification sweeps")
    verify.add_argument("--p", required=True, type=lambda s: parse_range(s, 1, "--p"))
    verify.add_argument("--n", required=True, type=lambda s: parse_range(s, 1, "--n"))
    verify.add_argument("--route", choices=ROUTES + ("all",), default="all")
    verify.add_argument("--format", choices=formats, default="plain-table")
    verify.add_argument("--max-expressions", type=int, default=DEFAULT_MAX_EXPRESSIONS)
    verify.add_argument("--max-points", type=int, default=None)
    verify.set_defaults(func=cmd_verify)

    table = sub.add_parser("table", help="print exact number tables")
    table.add_argument("--kind", choices=("stirling", "facet-counts", "figurate"),
                       required=True)
    table.add_argument("--m", type=lambda s: parse_range(s, 0, "--m"))
    table.add_argument("--p", type=lambda s: parse_range(s, 1, "--p"))
    table.add_argument("--k", type=lambda s: parse_range(s, 1, "--k"))
    table.add_argument("--n", type=lambda s: parse_range(s, 1, "--n"))
    table.add_argument("--format", choices=formats, default="plain-table")
    table.set_defaults(func=cmd_table)

    facets = sub.add_parser("facets", help="list canonical faces")
    facets.add_argument("--p", required=True, type=int)
    facets.add_argument("--l", required=True, type=int)
    facets.add_argument("--format", choices=formats, default="plain-table")
    facets.add_argument("--with-surjections", action="store_true")
    facets.add_argument("--with-counts", type=int, default=None, metavar="N")
    facets.add_argument("--max-expressions", type=int, default=DEFAULT_MAX_EXPRESSIONS)
    facets.set_defaults(func=cmd_facets)

    audit = sub.add_parser("audit", help="cross-check closed forms against oracles")
    audit.add_argument("--m-max", type=int, default=7)
    audit.add_argument("--k-max", type=int, default=8)
    audit.add_argument("--n-max", type=int, default=8)
    audit.add_argument("--p-max", type=int, default=6)
    audit.add_argument("--cover-p-max", type=int, default=4)
    audit.add_argument("--cover-n-max", type=int, default=3)
    audit.set_defaults(func=cmd_audit)

    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if getattr(args, "command", None) == "table":
        needed = {"stirling": ("m",), "facet-counts": ("p",), "figurate": ("k", "n")}
        for flag in needed[args.kind]:
            if getattr(args, flag) is None:
                err.write(f"error: table --kind {args.kind} requires --{flag}\n")
                return EXIT_USAGE
    if getattr(args, "max_points", "absent") is None:
        try:
            args.max_points = default_max_points()
        except argparse.ArgumentTypeError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_USAGE

    try:
        return args.func(args, out, err)
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceededError as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
