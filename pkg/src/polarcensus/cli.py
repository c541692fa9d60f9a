"""Command line interface for the counting and verification engine.

Subcommands
-----------
census   counts of singular subspaces per projective dimension
degrees  regular degrees of the five graphs on one dimension layer
verify   run the monotonicity and shape checks over a parameter grid
search   find count ties over a grid; optionally check the degree conjecture
oracle   enumerate an explicit small space and cross-check the formulas

Every subcommand takes --format json|csv|table (default table).  JSON output
is a single object {"command": ..., "params": ..., "results": [...]} with
every exact integer rendered as a decimal string so that arbitrarily large
counts survive parsers that read numbers as doubles.  The search subcommand
instead streams one JSON object per hit followed by a summary object.

Exit status: 0 on success, 1 when a verification/cross-check/conjecture run
finds a failure, 2 on invalid input or an unsupported/oversized space.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .analysis import (
    ALL_E,
    DEFAULT_GRID_S,
    grid_params,
    search_coincidences,
    search_conjecture,
    verify_propositions,
)
from .census import count_rank
from .degrees import GraphKind, degree, kappa_decomposition
from .errors import PolarError
from .oracle import ORACLE_KINDS, build_space, cross_check, enumerate_subspaces
from .params import is_prime_power, validate_params

_KIND_BY_NAME = {
    "kappa": GraphKind.COLLINEARITY,
    "mu": GraphKind.HYPERPLANE_MEET,
    "chi": GraphKind.UNION,
    "nu": GraphKind.INTERSECTION,
    "xi": GraphKind.PERP_MAX,
}

FORMATS = ("table", "json", "csv")


def _jsonify(value):
    """Exact integers become decimal strings; containers recurse; rest passes."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return value


def _emit(args, command: str, params: dict, columns: list[str], rows: list[dict]) -> None:
    out = sys.stdout
    if args.format == "json":
        doc = {"command": command, "params": _jsonify(params), "results": _jsonify(rows)}
        json.dump(doc, out)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row.get(c, "") for c in columns])
    else:
        str_rows = [[str(row.get(c, "")) for c in columns] for row in rows]
        widths = [
            max(len(c), *(len(r[k]) for r in str_rows)) if str_rows else len(c)
            for k, c in enumerate(columns)
        ]
        out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        for r in str_rows:
            out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _parse_s_list(raw: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in raw.split(",") if part.strip())
    except ValueError as exc:
        raise PolarError(f"bad --grid-s value {raw!r}: {exc}") from None
    if not values:
        raise PolarError("--grid-s needs at least one integer")
    return values


def _params_dict(p) -> dict:
    return {"n": p.n, "s": p.s, "t": p.t, "e": p.e}


# ---------------------------------------------------------------------------
# subcommands

def _cmd_census(args) -> int:
    p = validate_params(args.n, args.s, args.t)
    if args.strict and not is_prime_power(args.s):
        print(
            f"warning: s={args.s} is not a prime power; values are formal",
            file=sys.stderr,
        )
    indices = [args.i] if args.i is not None else list(range(p.n))
    rows = [{"i": i, "count": count_rank(p, i)} for i in indices]
    _emit(args, "census", _params_dict(p), ["i", "count"], rows)
    return 0


def _cmd_degrees(args) -> int:
    p = validate_params(args.n, args.s, args.t)
    names = list(_KIND_BY_NAME) if args.kind == "all" else [args.kind]
    rows = []
    for name in names:
        rows.append({"i": args.i, "kind": name, "value": degree(p, args.i, _KIND_BY_NAME[name])})
        if args.decompose and name == "kappa":
            for k, val in kappa_decomposition(p, args.i).components:
                rows.append({"i": args.i, "kind": f"kappa[k={k}]", "value": val})
    _emit(args, "degrees", _params_dict(p), ["i", "kind", "value"], rows)
    return 0


def _cmd_verify(args) -> int:
    s_values = _parse_s_list(args.grid_s)
    grid = grid_params(range(3, args.n_max + 1), ALL_E, s_values)
    if not grid:
        print("warning: empty parameter grid, nothing verified", file=sys.stderr)
    rows = []
    failures = 0
    for p in grid:
        report = verify_propositions(p)
        for chk in report.checks:
            if not chk.ok:
                failures += 1
            rows.append(
                {
                    "n": p.n,
                    "s": p.s,
                    "t": p.t,
                    "e": p.e,
                    "check": chk.name,
                    "ok": chk.ok,
                    "detail": chk.detail,
                }
            )
    meta = {
        "n_max": args.n_max,
        "grid_s": list(s_values),
        "points": len(grid),
        "checks": len(rows),
        "failures": failures,
    }
    columns = ["n", "s", "t", "e", "check", "ok", "detail"]
    _emit(args, "verify", meta, columns, rows)
    if args.format != "json":
        print(f"{len(rows)} checks on {len(grid)} parameter points, {failures} failed",
              file=sys.stderr)
    return 1 if failures else 0


def _cmd_search(args) -> int:
    s_values = _parse_s_list(args.grid_s)
    n_range = range(3, args.n_max + 1)
    hits = search_coincidences(n_range, ALL_E, s_values, use_pruning=not args.no_prune)
    out = sys.stdout
    hit_rows = [
        {
            "n": h.params.n,
            "s": h.params.s,
            "t": h.params.t,
            "e": h.params.e,
            "i": h.i,
            "j": h.j,
            "count": h.value,
        }
        for h in hits
    ]
    violations = []
    if args.conjecture:
        violations = search_conjecture(n_range, ALL_E, s_values)
    if args.format == "json":
        for row in hit_rows:
            json.dump({"hit": _jsonify(row)}, out)
            out.write("\n")
        for v in violations:
            json.dump(
                {
                    "violation": _jsonify(
                        {
                            "n": v.hit.params.n,
                            "s": v.hit.params.s,
                            "t": v.hit.params.t,
                            "e": v.hit.params.e,
                            "i": v.hit.i,
                            "j": v.hit.j,
                            "kind": v.kind.value,
                            "degree": v.degree_value,
                        }
                    )
                },
                out,
            )
            out.write("\n")
        summary = {
            "hits": len(hits),
            "violations": len(violations) if args.conjecture else None,
            "pruning": not args.no_prune,
            "n_max": args.n_max,
            "grid_s": list(s_values),
        }
        json.dump({"summary": _jsonify(summary)}, out)
        out.write("\n")
    else:
        columns = ["n", "s", "t", "e", "i", "j", "count"]
        _emit(args, "search", {}, columns, hit_rows)
        print(
            f"{len(hits)} ties"
            + (f", {len(violations)} conjecture violations" if args.conjecture else "")
            + f" (pruning {'off' if args.no_prune else 'on'})",
            file=sys.stderr,
        )
    return 1 if violations else 0


def _cmd_oracle(args) -> int:
    space = build_space(args.kind, args.q, args.rank, cap=args.cap)
    if args.cross_check:
        report = cross_check(space, sample=args.sample)
        rows = [
            {
                "i": e.i,
                "aspect": e.aspect,
                "formula": e.formula,
                "oracle": e.oracle,
                "ok": e.ok,
            }
            for e in report.entries
        ]
        params = {
            "kind": space.kind,
            "q": space.q,
            "rank": space.n,
            "s": space.s,
            "t": space.t,
        }
        _emit(args, "oracle", params, ["i", "aspect", "formula", "oracle", "ok"], rows)
        if not report.all_ok:
            print(f"{len(report.mismatches)} mismatches", file=sys.stderr)
            return 1
        return 0
    rows = [
        {"i": i, "count": len(enumerate_subspaces(space, i))} for i in range(space.n)
    ]
    params = {
        "kind": space.kind,
        "q": space.q,
        "rank": space.n,
        "s": space.s,
        "t": space.t,
    }
    _emit(args, "oracle", params, ["i", "count"], rows)
    return 0


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polar-census",
        description="Exact counts, degrees, and verification for finite polar spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=FORMATS, default="table")

    sp = sub.add_parser("census", help="counts of singular subspaces per dimension")
    sp.add_argument("--n", type=int, required=True, help="rank (at least 3)")
    sp.add_argument("--s", type=int, required=True, help="line order")
    sp.add_argument("--t", type=int, required=True, help="top residual order")
    sp.add_argument("--i", type=int, default=None, help="single dimension (default: all)")
    sp.add_argument("--strict", action="store_true",
                    help="warn when s is not a prime power")
    add_format(sp)
    sp.set_defaults(func=_cmd_census)

    sp = sub.add_parser("degrees", help="graph degrees on one dimension layer")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--kind", choices=["all"] + sorted(_KIND_BY_NAME), default="all")
    sp.add_argument("--decompose", action="store_true",
                    help="also list the per-intersection-dimension parts of kappa")
    add_format(sp)
    sp.set_defaults(func=_cmd_degrees)

    sp = sub.add_parser("verify", help="run shape and monotonicity checks over a grid")
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--grid-s", default=",".join(str(s) for s in DEFAULT_GRID_S))
    add_format(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("search", help="find count ties; optionally test the degree conjecture")
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--grid-s", default=",".join(str(s) for s in DEFAULT_GRID_S))
    sp.add_argument("--conjecture", action="store_true",
                    help="also test whether any tie is a degree tie")
    sp.add_argument("--no-prune", action="store_true",
                    help="compare every pair instead of pruning by the tie bounds")
    add_format(sp)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("oracle", help="enumerate an explicit space and cross-check")
    sp.add_argument("--kind", choices=ORACLE_KINDS, required=True)
    sp.add_argument("--q", type=int, required=True, help="defining field size (2, 3, 4, 5)")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--cross-check", action="store_true",
                    help="compare enumerated counts and measured degrees to the formulas")
    sp.add_argument("--sample", type=int, default=3,
                    help="base subspaces sampled per degree measurement")
    sp.add_argument("--cap", type=int, default=None,
                    help="max subspaces per layer (default $POLAR_CENSUS_CAP or 2000000)")
    add_format(sp)
    sp.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolarError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
