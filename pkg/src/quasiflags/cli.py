"""Command-line front end: kostant, poincare, genfunc, cells, verify.

All commands print one machine-readable document to stdout (json by
default; csv and latex render the same rows).  Identical invocations
produce byte-identical output.  Exit codes: 0 ok, 1 a theorem identity
failed, 2 usage error, 3 only conjecture-level checks failed (without
--strict).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cells as cells_mod
from . import cohomology, suites
from .kostant import DEFAULT_WEIGHT_CAP, kostant_partitions, stats
from .rootdata import ResourceCapError, dim_flag, height, two_rho


class UsageError(Exception):
    pass


def _parse_vector(text, rank, what):
    try:
        vec = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--{what} must be comma-separated integers, got {text!r}")
    if len(vec) != rank:
        raise UsageError(f"--{what} must have {rank} coordinates, got {len(vec)}")
    if any(a < 0 for a in vec):
        raise UsageError(f"--{what} coordinates must be nonnegative")
    return vec


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quasiflags",
        description="Exact invariants of quasiflag spaces and their identity suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=False, alpha=False, gamma=False):
        p.add_argument("--n", type=int, required=True, help="rank parameter, n >= 2")
        if degree:
            p.add_argument("--degree", type=int, required=True,
                           help="total-degree bound for series")
        if alpha:
            p.add_argument("--alpha", type=str, required=True,
                           help="comma-separated coroot coordinates a1,...,a_{n-1}")
        if gamma:
            p.add_argument("--gamma", type=str, required=True,
                           help="comma-separated coroot coordinates")
        p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
        p.add_argument("--cap", type=int, default=DEFAULT_WEIGHT_CAP,
                       help="enumeration cap (default 12)")

    p = sub.add_parser("kostant", help="list the Kostant partitions of gamma")
    common(p, gamma=True)

    p = sub.add_parser("poincare", help="Poincare polynomial of one quasiflag space")
    common(p, alpha=True)
    p.add_argument("--shifted", action="store_true",
                   help="recenter around degree zero (polynomial in q)")

    p = sub.add_parser("genfunc", help="closed-form generating function coefficients")
    common(p, degree=True)

    p = sub.add_parser("cells", help="torus fixed-point cells for one alpha")
    common(p, alpha=True)
    p.add_argument("--dims", action="store_true",
                   help="include the conjectured cell dimension column")

    p = sub.add_parser("verify", help="run identity suites")
    common(p, degree=True)
    p.add_argument("--suite", default="all",
                   help="one of %s or 'all'" % "|".join(suites.SUITE_NAMES))
    p.add_argument("--strict", action="store_true",
                   help="treat conjecture-level failures as hard failures")
    return parser


def cmd_kostant(args):
    gamma = _parse_vector(args.gamma, args.n - 1, "gamma")
    rows = []
    for kappa in kostant_partitions(gamma, cap=args.cap):
        weight, norm, summands = stats(kappa)
        rows.append(
            {
                "partition": kappa.to_json(),
                "weight": list(weight),
                "norm": norm,
                "summands": summands,
            }
        )
    doc = {
        "command": "kostant",
        "params": {"n": args.n, "gamma": list(gamma), "cap": args.cap},
        "rows": rows,
    }
    return doc, 0


def cmd_poincare(args):
    alpha = _parse_vector(args.alpha, args.n - 1, "alpha")
    if args.shifted:
        poly = cohomology.shifted_poincare(alpha, cap=args.cap)
    else:
        poly = cohomology.laumon_poincare(alpha, cap=args.cap)
    doc = {
        "command": "poincare",
        "params": {
            "n": args.n,
            "alpha": list(alpha),
            "shifted": bool(args.shifted),
            "cap": args.cap,
        },
        "result": {
            "poly": poly.to_json(),
            "pretty": poly.pretty(),
            "dimension": dim_flag(args.n) + 2 * height(alpha),
            "euler": poly.eval_at_one(),
        },
    }
    return doc, 0


def cmd_genfunc(args):
    min_degree = height(two_rho(args.n))
    if args.degree < min_degree:
        raise UsageError(
            f"--degree must be at least |2rho| = {min_degree} for n={args.n}"
        )
    series = cohomology.generating_function(args.n, args.degree)
    doc = {
        "command": "genfunc",
        "params": {"n": args.n, "degree": args.degree},
        "result": {"series": series.to_json()},
    }
    return doc, 0


def cmd_cells(args):
    alpha = _parse_vector(args.alpha, args.n - 1, "alpha")
    rows = []
    for cell in cells_mod.enumerate_cells(args.n, alpha, cap=args.cap):
        row = {
            "w": list(cell.w.perm),
            "length": cell.w.length,
            "kappa0": cell.kappa0.to_json(),
            "kappaInf": cell.kappaInf.to_json(),
        }
        if args.dims:
            row["d_conjectured"] = cells_mod.conjectured_dim(cell)
        rows.append(row)
    doc = {
        "command": "cells",
        "params": {
            "n": args.n,
            "alpha": list(alpha),
            "dims": bool(args.dims),
            "cap": args.cap,
        },
        "rows": rows,
    }
    return doc, 0


def cmd_verify(args):
    if args.suite != "all" and args.suite not in suites.SUITE_NAMES:
        raise UsageError(
            "unknown suite %r (expected %s or 'all')"
            % (args.suite, "|".join(suites.SUITE_NAMES))
        )
    reports = suites.run_suites(
        args.n, args.degree, suite=args.suite, cap=args.cap
    )
    code = suites.exit_code(reports, strict=args.strict)
    doc = {
        "command": "verify",
        "params": {
            "n": args.n,
            "degree": args.degree,
            "suite": args.suite,
            "strict": bool(args.strict),
            "cap": args.cap,
        },
        "suites": [r.to_json() for r in reports],
        "summary": {
            "status": "PASS" if code == 0 else "FAIL",
            "theorem_failures": sum(len(r.theorem_failures()) for r in reports),
            "conjecture_failures": sum(
                len(r.conjecture_failures()) for r in reports
            ),
            "exit_code": code,
        },
    }
    return doc, code


def _flatten_rows(doc):
    """Uniform tabular view of a document, for csv and latex."""
    command = doc["command"]
    if command == "kostant":
        header = ["partition", "weight", "norm", "summands"]
        rows = [
            [
                json.dumps(r["partition"], sort_keys=True),
                json.dumps(r["weight"]),
                r["norm"],
                r["summands"],
            ]
            for r in doc["rows"]
        ]
    elif command == "poincare":
        header = ["exponent", "coefficient"]
        rows = [[e, c] for e, c in doc["result"]["poly"]]
    elif command == "genfunc":
        header = ["alpha", "poly"]
        rows = [
            [json.dumps(alpha), json.dumps(poly)]
            for alpha, poly in doc["result"]["series"]
        ]
    elif command == "cells":
        header = ["w", "length", "kappa0", "kappaInf"]
        if doc["params"]["dims"]:
            header.append("d_conjectured")
        rows = []
        for r in doc["rows"]:
            row = [
                json.dumps(r["w"]),
                r["length"],
                json.dumps(r["kappa0"], sort_keys=True),
                json.dumps(r["kappaInf"], sort_keys=True),
            ]
            if doc["params"]["dims"]:
                row.append(r["d_conjectured"])
            rows.append(row)
    elif command == "verify":
        header = ["suite", "case", "category", "status"]
        rows = []
        for rep in doc["suites"]:
            for entry in rep["entries"]:
                rows.append(
                    [
                        rep["suite"],
                        json.dumps(entry["case"], sort_keys=True),
                        entry["category"],
                        entry["status"],
                    ]
                )
    else:  # pragma: no cover
        raise ValueError(command)
    return header, rows


def _csv_cell(value):
    text = str(value)
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def render(doc, fmt):
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    header, rows = _flatten_rows(doc)
    if fmt == "csv":
        lines = [",".join(header)]
        lines.extend(",".join(_csv_cell(v) for v in row) for row in rows)
        return "\n".join(lines)
    if fmt == "latex":
        lines = ["\\begin{tabular}{%s}" % ("l" * len(header))]
        lines.append(" & ".join(header) + " \\\\")
        lines.append("\\hline")
        esc = lambda v: str(v).replace("_", "\\_").replace("{", "\\{").replace("}", "\\}")
        lines.extend(" & ".join(esc(v) for v in row) + " \\\\" for row in rows)
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    raise ValueError(fmt)  # pragma: no cover


COMMANDS = {
    "kostant": cmd_kostant,
    "poincare": cmd_poincare,
    "genfunc": cmd_genfunc,
    "cells": cmd_cells,
    "verify": cmd_verify,
}


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return 2
    try:
        doc, code = COMMANDS[args.command](args)
    except (UsageError, ResourceCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(doc, args.format), file=out)
    return code


def console_main():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()
