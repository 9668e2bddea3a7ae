"""
Command-line interface.

Subcommands: enumerate, counts, gf, root, grid, atomic, verify, scan.
Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
error (including size-guard refusals; add --force to override a guard).

Conventions: permutations print as space-separated integers; matrices are
written row by row, row 1 = top, e.g. "-1,1;1,-1"; class specifications
use the DSL documented in the README (av:321,3412 | rc(S) | union(S,S) |
inter(S,S) | sumclosure:NAME | geom:[M]).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .atomicity import generated_by_centro_up_to, is_rc_atomic_up_to, rc_witness
from .classes import count_table, enumerate_centrosymmetric, enumerate_class, parse_class_spec
from .grids import (
    cell_graph,
    centro_geom_counts,
    enumerate_geom,
    enumerate_gridded,
    gridded_count_identity,
    is_forest,
    is_rc_matrix,
    parse_matrix,
    rc_component_pairing,
    split_XY,
)
from .perms import fmt_perm, parse_permutation
from .reports import Report, check, info
from .series import expand, growth_rate_rational, parse_gf, parse_polynomial, positive_root

GUARD_CLASS_N = 10
GUARD_CENTRO_SIZE = 14
GUARD_GRID_N = 8
GUARD_GRID_CENTRO_N = 5
VERIFY_GUARDS = {"table1": 14, "table2": 10, "table3": 14, "examples": None}


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_dash_values(list(argv))
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.seed_order != "lex":
        parser.error("only --seed-order lex is supported")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _join_dash_values(argv: list[str]) -> list[str]:
    """Fold '--matrix -1,1;1,-1' into '--matrix=-1,1;1,-1' so argparse
    does not mistake the leading '-1' for an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--matrix" and i + 1 < len(argv):
            out.append(f"--matrix={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _add_global_flags(parser: argparse.ArgumentParser, top_level: bool) -> None:
    """The global flags are accepted both before and after the subcommand;
    only the top-level parser supplies defaults (so subcommand occurrences
    override rather than being clobbered by defaults)."""

    def dflt(value):
        return value if top_level else argparse.SUPPRESS

    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default=dflt("text"),
        help="output format (default text)",
    )
    parser.add_argument(
        "--seed-order", default=dflt("lex"), metavar="ORDER",
        help="enumeration order; only 'lex' exists and it is the default",
    )
    parser.add_argument(
        "--jobs", type=int, default=dflt(1), metavar="K",
        help="run independent checks on up to K threads (results are identical)",
    )
    parser.add_argument(
        "--force", action="store_true", default=dflt(False),
        help="override the built-in size guards",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centroperm",
        description="Enumerate permutation classes and their centrosymmetric elements.",
    )
    _add_global_flags(parser, top_level=True)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("enumerate", help="list the members of a class at one size")
    p.add_argument("--class", dest="spec", required=True, metavar="SPEC")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--centro", action="store_true", help="centrosymmetric members only")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("counts", help="count table: a, b-even, b-odd, c, d")
    p.add_argument("--class", dest="spec", required=True, metavar="SPEC")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_counts)

    p = sub.add_parser("gf", help="expand a rational generating function")
    p.add_argument("expr", help="e.g. '(1-x)^2/(1-3x+2x^2-x^3)'")
    p.add_argument("--terms", type=int, default=10)
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("root", help="unique positive root of a polynomial")
    p.add_argument("poly", help="e.g. 'x^5-2x^4-x^2-x-1'")
    p.set_defaults(func=_cmd_root)

    p = sub.add_parser("grid", help="grid-class checks")
    p.add_argument(
        "--matrix", required=True, metavar="M",
        help="rows top to bottom, ';' between rows, e.g. -1,1;1,-1 (row 1 is the top row)",
    )
    p.add_argument(
        "--check", choices=("graph", "split", "geom", "centro"), required=True,
        help="graph: cell graph; split: pairing conditions, the split, and gridded counts; "
        "geom: class members; centro: centrosymmetric counts (sizes 2..2n)",
    )
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=_cmd_grid)

    p = sub.add_parser("atomic", help="bounded joint-embedding witness searches")
    p.add_argument("--class", dest="spec", required=True, metavar="SPEC")
    p.add_argument("--sigma", metavar="P", help="single member to search a witness for")
    p.add_argument("--bound", type=int, default=8, help="largest witness size searched")
    p.add_argument("--max-sigma", type=int, default=3, help="sweep members up to this size")
    p.add_argument(
        "--centro", action="store_true",
        help="look for even-size centrosymmetric witnesses instead",
    )
    p.set_defaults(func=_cmd_atomic)

    p = sub.add_parser("verify", help="golden verification targets")
    p.add_argument(
        "--target", choices=("table1", "table2", "table3", "examples"), required=True
    )
    p.add_argument("--max", type=int, default=None, help="size horizon for the target")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="finite-prefix conjecture diagnostics for a class")
    p.add_argument("--class", dest="spec", required=True, metavar="SPEC")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=_cmd_scan)

    for sub_parser in sub.choices.values():
        _add_global_flags(sub_parser, top_level=False)

    return parser


def _refuse(args, message: str) -> int | None:
    if args.force:
        return None
    print(f"error: {message} (use --force to override)", file=sys.stderr)
    return 2


def _emit_report(args, report: Report) -> int:
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv())
    else:
        print(report.to_text())
    return report.exit_code


def _emit_rows(args, payload: dict, rows: list[tuple], header: tuple[str, ...]) -> int:
    """rows output for list-like commands: text lines, csv, or one json object."""
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(str(v) for v in row))
    else:
        for row in rows:
            print(" | ".join(str(v) for v in row) if len(row) > 1 else str(row[0]))
    return 0


def _cmd_enumerate(args) -> int:
    spec = parse_class_spec(args.spec)
    if args.centro:
        if args.n > GUARD_CENTRO_SIZE:
            refused = _refuse(args, f"centrosymmetric enumeration is guarded at size {GUARD_CENTRO_SIZE}")
            if refused is not None:
                return refused
        members = enumerate_centrosymmetric(spec, args.n)
    else:
        if args.n > GUARD_CLASS_N:
            refused = _refuse(args, f"class enumeration is guarded at size {GUARD_CLASS_N}")
            if refused is not None:
                return refused
        members = enumerate_class(spec, args.n)
    payload = {
        "command": "enumerate",
        "class": str(spec),
        "n": args.n,
        "centro": args.centro,
        "count": len(members),
        "members": [fmt_perm(p) for p in members],
    }
    rows = [(fmt_perm(p),) for p in members]
    if args.format == "text":
        print(f"# {len(members)} members of {spec} at size {args.n}"
              + (" (centrosymmetric)" if args.centro else ""))
    return _emit_rows(args, payload, rows, ("permutation",))


def _cmd_counts(args) -> int:
    if args.max_n > GUARD_CLASS_N:
        refused = _refuse(args, f"count tables are guarded at max-n {GUARD_CLASS_N}")
        if refused is not None:
            return refused
    spec = parse_class_spec(args.spec)
    table = count_table(spec, args.max_n)
    payload = {
        "command": "counts",
        "class": table.spec_text,
        "max_n": table.max_n,
        "a": list(table.a),
        "b_even": list(table.b_even),
        "b_odd": list(table.b_odd),
        "c": list(table.c),
        "d": list(table.d),
    }
    rows = []
    for n in range(args.max_n + 1):
        rows.append(
            (
                n,
                table.a[n],
                table.b_even[n] if n < len(table.b_even) else "",
                table.b_odd[n] if n < len(table.b_odd) else "",
                table.c[n],
                table.d[n] if n < len(table.d) else "",
            )
        )
    if args.format == "text":
        print(f"# {table.spec_text}: n | a | b_even | b_odd | c | d")
    return _emit_rows(args, payload, rows, ("n", "a", "b_even", "b_odd", "c", "d"))


def _cmd_gf(args) -> int:
    gf = parse_gf(args.expr)
    series = expand(gf, args.terms)
    coeffs = [str(c) for c in series.coeffs]
    growth = growth_rate_rational(gf)
    payload = {
        "command": "gf",
        "gf": str(gf),
        "terms": args.terms,
        "coefficients": coeffs,
        "growth": growth if isinstance(growth, str) else round(growth, 9),
    }
    if args.format == "text":
        print(f"# {gf}")
        print(",".join(coeffs))
        print(f"# growth: {payload['growth']}")
        return 0
    return _emit_rows(
        args, payload, [(i, c) for i, c in enumerate(coeffs)], ("n", "coefficient")
    )


def _cmd_root(args) -> int:
    poly = parse_polynomial(args.poly)
    root = positive_root(poly)
    payload = {"command": "root", "poly": str(poly), "root": root}
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("poly,root")
        print(f'"{poly}",{root!r}')
    else:
        print(f"{root:.9f}")
    return 0


def _cmd_grid(args) -> int:
    matrix = parse_matrix(args.matrix)
    guard = GUARD_GRID_CENTRO_N if args.check == "centro" else GUARD_GRID_N
    if args.n > guard:
        refused = _refuse(args, f"grid check '{args.check}' is guarded at n = {guard}")
        if refused is not None:
            return refused
    checks = []
    if args.check == "graph":
        graph = cell_graph(matrix)
        checks.append(info("vertices", [f"{r}.{c}" for r, c in graph.vertices]))
        checks.append(info("edges", [f"{u[0]}.{u[1]}-{v[0]}.{v[1]}" for u, v in graph.edges]))
        checks.append(info("forest", is_forest(graph)))
        checks.append(info("rc-invariant", is_rc_matrix(matrix)))
        if is_rc_matrix(matrix):
            conditions = rc_component_pairing(matrix)
            checks.append(info("components-pair-off", conditions.pairing_ok))
    elif args.check == "split":
        conditions = rc_component_pairing(matrix)
        checks.append(info("checked-matrix", str(conditions.matrix)))
        checks.append(info("refined", conditions.refined))
        checks.append(info("condition-i-forest", conditions.forest))
        checks.append(info("condition-ii-pairing", conditions.pairing_ok))
        if conditions.pairing_ok:
            a_x, a_y = split_XY(matrix)
            checks.append(info("A_X", str(a_x)))
            checks.append(info("A_Y", str(a_y)))
            ident = gridded_count_identity(matrix, min(args.n, 5))
            checks.append(info("gridded-direct", ident.direct))
            checks.append(
                info("gridded-convolution", ident.convolution,
                     detail=f"matches={ident.convolution_matches}")
            )
            checks.append(
                info("gridded-sum-of-squares", ident.sum_of_squares,
                     detail=f"matches={ident.sum_of_squares_matches}")
            )
            per_perm: dict = {}
            for size in range(min(args.n, 5) + 1):
                for g in enumerate_gridded(conditions.matrix, size):
                    per_perm[g.perm] = per_perm.get(g.perm, 0) + 1
                checks_value = max(per_perm.values()) if per_perm else 0
            checks.append(info("max-griddings-per-permutation", checks_value,
                               detail="monitored for polynomial growth, not asserted"))
    elif args.check == "geom":
        counts = [len(enumerate_geom(matrix, k)) for k in range(args.n + 1)]
        checks.append(info("counts", counts))
        checks.append(
            info("members", [fmt_perm(p) for p in enumerate_geom(matrix, args.n)])
        )
    else:  # centro
        counts = centro_geom_counts(matrix, args.n)
        checks.append(info("even-centro-counts", counts[1:], detail="sizes 2..2n"))
    report = Report.build(
        f"grid-{args.check}", {"matrix": str(matrix), "n": args.n}, checks
    )
    return _emit_report(args, report)


def _cmd_atomic(args) -> int:
    spec = parse_class_spec(args.spec)
    if args.sigma is not None:
        sigma = parse_permutation(args.sigma)
        witness = rc_witness(spec, sigma, args.bound)
        checks = [
            check(
                "witness-found",
                witness.found,
                "a member containing sigma and rc(sigma)",
                str(witness),
                detail="absence is evidence only up to the bound",
            )
        ]
        report = Report.build(
            "atomic", {"class": str(spec), "sigma": fmt_perm(sigma), "bound": args.bound}, checks
        )
        return _emit_report(args, report)
    runner = generated_by_centro_up_to if args.centro else is_rc_atomic_up_to
    sweep = runner(spec, args.max_sigma, args.bound)
    checks = [
        check(
            "all-witnesses-found",
            sweep.all_found,
            f"witnesses for every member of size <= {args.max_sigma}",
            "all found" if sweep.all_found else
            "missing for " + ", ".join(fmt_perm(r.sigma) for r in sweep.failures),
            detail="absence is evidence only up to the bound",
        ),
        info("witnesses", [str(w) for w in sweep.witnesses[:20]]),
    ]
    report = Report.build(
        "atomic",
        {"class": str(spec), "max_sigma": args.max_sigma, "bound": args.bound,
         "mode": "centro" if args.centro else "rc-witness"},
        checks,
    )
    return _emit_report(args, report)


def _cmd_verify(args) -> int:
    guard = VERIFY_GUARDS[args.target]
    if args.max is not None and guard is not None and args.max > guard:
        refused = _refuse(args, f"verify {args.target} is guarded at --max {guard}")
        if refused is not None:
            return refused
    jobs = max(args.jobs, 1)
    if args.target == "table1":
        report = harness.verify_table1(args.max if args.max is not None else 12, jobs=jobs)
    elif args.target == "table2":
        report = harness.verify_table2(args.max if args.max is not None else 7, jobs=jobs)
    elif args.target == "table3":
        report = harness.verify_table3(args.max if args.max is not None else 10, jobs=jobs)
    else:
        report = harness.verify_examples(jobs=jobs)
    return _emit_report(args, report)


def _cmd_scan(args) -> int:
    if args.max_n > GUARD_CLASS_N:
        refused = _refuse(args, f"scans are guarded at max-n {GUARD_CLASS_N}")
        if refused is not None:
            return refused
    report = harness.conjecture_scan(args.spec, args.max_n)
    return _emit_report(args, report)


if __name__ == "__main__":
    sys.exit(main())
