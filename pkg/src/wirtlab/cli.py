"""Command-line front end.

    wirtlab coeffs --m 3
    wirtlab verify-wirtinger --m 2 --input series.json --sandwich
    wirtlab verify-wirtinger --m 3 --random 1000 --degree 8 --seed 1
    wirtlab curve-report --input curve.json [--emit-points 200 --close]
    wirtlab convex-report --support h.json --m 3 [--all]
    wirtlab sweep --degree 6 --count 300 --seed 0 --m 3

Exit status: 0 when every audited inequality holds, 2 when any fails, 1 for
usage errors, malformed input or an unmet hypothesis (the gate is named).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import report
from .convexgeom import (
    SupportFunction,
    lin_tsai_audit,
    random_convex,
    reverse_isoperimetric_audit,
    support_points,
    thm32_audit,
)
from .curvegeom import PlaneCurve, curve_audit, curve_points, identity_checks, simplicity_check
from .errors import GateError, NonSimpleCurveError, WirtlabError
from .exactcoeff import coefficient_table
from .spectral import TrigSeries, random_series
from .wirtinger import audit

EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _dump_json(obj, out):
    json.dump(obj, out, indent=2, default=_json_default)
    out.write("\n")


def _write_csv(header, rows, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row])


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise WirtlabError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise WirtlabError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _overall(reports) -> str:
    if not report.all_ok(reports):
        return report.FAIL
    if reports and all(r.verdict == report.EQUALITY for r in reports):
        return report.EQUALITY
    return report.PASS


def emit_plot_data(obj, n: int, out, close: bool = False) -> None:
    """Boundary samples of a curve or convex body as CSV (columns depend on the type)."""
    if n < 3:
        raise UsageError("--emit-points needs at least 3 points")
    if isinstance(obj, SupportFunction):
        header, rows = support_points(obj, n, close)
    else:
        header, rows = curve_points(obj, n, close)
    _write_csv(header, rows, out)


# ---------------------------------------------------------------------------


def cmd_coeffs(args, out) -> int:
    tab = coefficient_table(args.m)
    if args.format == "json":
        _dump_json(tab.to_dict(), out)
    else:
        rows = []
        for k in range(tab.m + 1):
            rows.append([
                k,
                tab.c[k],
                tab.lam[k] if k < tab.m else "",
                tab.S[k] if k < tab.m else "",
            ])
        _write_csv(["k", "c", "lambda", "S"], rows, out)
    return EXIT_OK


def cmd_verify_wirtinger(args, out) -> int:
    forms = args.form
    if args.input is not None:
        f = TrigSeries.from_dict(_load_json(args.input), "series")
        a = audit(f, args.m, forms, args.sandwich)
        nonneg = [r for r in a.reports if r.name.startswith("nonnegativity")]
        verdict = report.FAIL if not a.ok else _overall(nonneg)
        doc = a.to_dict()
        doc["verdict"] = verdict
        _dump_json(doc, out)
        return EXIT_OK if a.ok else EXIT_FAIL

    rng = np.random.default_rng(args.seed)
    rows, failures, equalities = [], 0, 0
    worst = 0.0
    for i in range(args.random):
        deg = int(rng.integers(1, args.degree + 1))
        f = random_series(deg, rng)
        a = audit(f, args.m, forms, args.sandwich)
        vals = [v for v in (a.form_a, a.form_b, a.form_c) if v is not None]
        err = max(abs(v - a.certificate) for v in vals) / a.scale
        worst = max(worst, err)
        failures += not a.ok
        equalities += a.equality_flag
        rows.append({
            "index": i,
            "degree": deg,
            "certificate": a.certificate,
            "equality_flag": a.equality_flag,
            "verdict": report.FAIL if not a.ok else report.PASS,
        })
    _dump_json({
        "m": args.m,
        "count": args.random,
        "degree": args.degree,
        "seed": args.seed,
        "failures": failures,
        "equality_cases": equalities,
        "max_scaled_disagreement": worst,
        "instances": rows,
    }, out)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_curve_report(args, out) -> int:
    c = PlaneCurve.from_dict(_load_json(args.input))
    if args.emit_points is not None:
        emit_plot_data(c, args.emit_points, out, args.close)
        return EXIT_OK
    if not simplicity_check(c, args.grid):
        raise NonSimpleCurveError(f"simplicity check failed at resolution n={args.grid}")
    a = curve_audit(c)
    a.reports = a.chain_a() + a.chain_b()
    idents = identity_checks(c, n_check=args.grid, audit=a)
    ok = a.ok and all(i.ok for i in idents)
    doc = {
        "audit": a.to_dict(),
        "identities": [i.to_dict() for i in idents],
        "verdict": _overall(a.reports) if ok else report.FAIL,
    }
    _dump_json(doc, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_convex_report(args, out) -> int:
    sf = SupportFunction.from_dict(_load_json(args.support))
    if args.emit_points is not None:
        emit_plot_data(sf, args.emit_points, out, args.close)
        return EXIT_OK
    orders = range(1, args.m + 1) if args.all else [args.m]
    t32 = [thm32_audit(sf, m) for m in orders]
    lt = lin_tsai_audit(sf)
    rev = reverse_isoperimetric_audit(sf)
    reports = [a.report for a in t32] + lt.reports + rev.reports
    _dump_json({
        "deficit_bounds": [a.to_dict() for a in t32],
        "lin_tsai": lt.to_dict(),
        "reverse_isoperimetric": rev.to_dict(),
        "verdict": _overall(reports),
    }, out)
    return EXIT_OK if report.all_ok(reports) else EXIT_FAIL


def cmd_sweep(args, out) -> int:
    header = ["index", "seed", "D", f"bound_slack_m{args.m}", "lin_tsai", "lin_tsai_stability",
              "reverse_k5", "reverse_k3", "reverse_k2", "bernstein_mettler_k3",
              "bernstein_mettler_k2", "gage", "verdict"]
    rows, failed = [], False
    for i in range(args.count):
        seed = args.seed + i
        sf = random_convex(args.degree, seed, args.margin)
        t = thm32_audit(sf, args.m)
        lt = lin_tsai_audit(sf)
        rev = reverse_isoperimetric_audit(sf)
        reps = [t.report] + lt.reports + rev.reports
        ok = report.all_ok(reps)
        failed |= not ok
        rows.append([i, seed, t.D] + [r.slack for r in reps] + [report.PASS if ok else report.FAIL])
    _write_csv(header, rows, out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wirtlab", description="Audit higher-order Wirtinger and isoperimetric inequalities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("coeffs", help="exact coefficient table for order m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("verify-wirtinger", help="audit the order-m functionals of a series")
    s.add_argument("--m", type=int, required=True)
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="series JSON file ('-' for stdin)")
    src.add_argument("--random", type=int, metavar="COUNT", help="audit COUNT random zero-mean series")
    s.add_argument("--degree", type=int, default=8, help="max degree for --random")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--form", choices=["a", "b", "c", "all"], default="all")
    s.add_argument("--sandwich", action="store_true", help="also audit the two-sided refinements")
    s.set_defaults(func=cmd_verify_wirtinger)

    s = sub.add_parser("curve-report", help="isoperimetric and Sachs chains for a closed curve")
    s.add_argument("--input", required=True)
    s.add_argument("--grid", type=int, default=256, help="polygon resolution for the simplicity check")
    s.add_argument("--emit-points", type=int, metavar="N", help="write N boundary samples as CSV instead")
    s.add_argument("--close", action="store_true", help="repeat the first point at the end")
    s.set_defaults(func=cmd_curve_report)

    s = sub.add_parser("convex-report", help="deficit bounds for a convex body given by its support function")
    s.add_argument("--support", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--all", action="store_true", help="audit every order 1..m")
    s.add_argument("--emit-points", type=int, metavar="N")
    s.add_argument("--close", action="store_true")
    s.set_defaults(func=cmd_convex_report)

    s = sub.add_parser("sweep", help="CSV of slacks over random convex bodies")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--margin", type=float, default=0.3)
    s.set_defaults(func=cmd_sweep)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "random", None) is not None and args.random < 1:
            raise UsageError("--random needs a positive count")
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except GateError as exc:
        msg = str(exc)
        print(f"error: {msg}" if msg.startswith(exc.gate) else f"error: {exc.gate}: {msg}", file=sys.stderr)
        return EXIT_ERROR
    except WirtlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
