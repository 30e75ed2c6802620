"""Command-line front end.

Subcommands: ``eval``, ``verify``, ``scan``, ``surface``, ``campaign``.
Exit status is 0 when everything passes, 1 on a verification failure and
2 on a usage error. Floats are written in shortest round-trip form.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import os
import sys

from .formulas import Params, classify_sign, denominator, f_prime, f_value, h_closed, h_separable
from .kernel import Rect, surface_grid
from .quadrature import DEFAULT_SPEC, QuadSpec, h_double_integral
from .specfun import Interval
from .verify import (
    DEFAULT_A_VALUES,
    DEFAULT_X_MAX,
    DEFAULT_X_MIN,
    DEFAULT_X_STEP,
    ToleranceOverride,
    campaign,
    scan_monotonicity,
    verify_identities,
    x_grid_from_range,
)

OUT_DIR_ENV = "GAUSSMONO_OUT_DIR"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SCAN_COLUMNS = ["x", "a", "f", "h", "f_prime", "sign_expected", "sign_observed", "consistent"]
REPORT_COLUMNS = ["check_name", "x", "a", "lhs", "rhs", "abs_err", "rel_err",
                  "tolerance", "rel_tolerance", "passed", "note"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _quad_spec(args) -> QuadSpec:
    kw = {}
    if args.abs_tol is not None:
        kw["abs_tol"] = args.abs_tol
    if args.rel_tol is not None:
        kw["rel_tol"] = args.rel_tol
    return dataclasses.replace(DEFAULT_SPEC, **kw)


def _override(args) -> ToleranceOverride:
    return ToleranceOverride(args.abs_tol, args.rel_tol)


def _params(args) -> Params:
    try:
        return Params(args.x, args.a)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


# --- subcommands -----------------------------------------------------------

def eval_record(p: Params, spec: QuadSpec = DEFAULT_SPEC) -> dict:
    hd = h_double_integral(p, spec)
    return {
        "x": p.x,
        "a": p.a,
        "f": f_value(p),
        "denominator": denominator(p),
        "h_closed": h_closed(p),
        "h_separable": h_separable(p),
        "h_double_integral": hd.value,
        "h_double_integral_err": hd.err_estimate,
        "h_double_integral_converged": hd.converged,
        "f_prime": f_prime(p),
        "h_sign": classify_sign(p),
    }


def cmd_eval(args) -> tuple[int, str]:
    rec = eval_record(_params(args), _quad_spec(args))
    if args.format == "json":
        text = _json(rec)
    elif args.format == "csv":
        text = _csv(list(rec), [list(rec.values())])
    else:
        text = "".join(f"{k:>28}  {fmt(v)}\n" for k, v in rec.items())
    return EXIT_OK, text


def cmd_verify(args) -> tuple[int, str]:
    p = _params(args)
    reports = verify_identities(p, _quad_spec(args), _override(args))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = _json({"x": p.x, "a": p.a, "passed": ok,
                      "reports": [r.as_dict() for r in reports]})
    elif args.format == "csv":
        text = _csv(REPORT_COLUMNS, [[getattr(r, c) for c in REPORT_COLUMNS] for r in reports])
    else:
        text = _report_table(reports)
        text += f"{sum(r.passed for r in reports)}/{len(reports)} checks passed\n"
    return (EXIT_OK if ok else EXIT_FAIL), text


def _report_table(reports) -> str:
    lines = [f"{'check':<36} {'x':>6} {'a':>6} {'lhs':>24} {'rhs':>24} {'abs_err':>10} status"]
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        note = f"  [{r.note}]" if r.note and not r.passed else ""
        lines.append(f"{r.check_name:<36} {r.x:>6g} {r.a:>6g} {r.lhs:>24.17g} {r.rhs:>24.17g} "
                     f"{r.abs_err:>10.2e} {status}{note}")
    return "\n".join(lines) + "\n"


def _grid(args) -> list[float]:
    try:
        return x_grid_from_range(args.x_min, args.x_max, args.step)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_scan(args) -> tuple[int, str]:
    if not (math.isfinite(args.a) and args.a > 0):
        raise UsageError(f"--a must be finite and > 0, got {args.a!r}")
    report = scan_monotonicity(args.a, _grid(args))
    rows = [[getattr(r, c) for c in SCAN_COLUMNS] for r in report.rows]
    if args.format == "csv":
        text = _csv(SCAN_COLUMNS, rows)
    elif args.format == "json":
        text = _json({
            "a": report.a,
            "monotone_consistent": report.monotone_consistent,
            "worst_violation": report.worst_violation,
            "coverage": report.coverage,
            "rows": [dict(zip(SCAN_COLUMNS, r)) for r in rows],
        })
    else:
        verdict = "consistent" if report.monotone_consistent else "INCONSISTENT"
        text = (f"a = {report.a!r}: {verdict}; {report.coverage}; "
                f"worst violation {report.worst_violation!r}\n")
    return (EXIT_OK if report.monotone_consistent else EXIT_FAIL), text


def cmd_surface(args) -> tuple[int, str]:
    p = _params(args)
    if not (math.isfinite(args.extent) and args.extent > 0):
        raise UsageError(f"--extent must be finite and > 0, got {args.extent!r}")
    if args.n < 2:
        raise UsageError(f"--n must be >= 2, got {args.n}")
    m = min(p.x, p.ax)
    region = Rect(Interval(-args.extent, args.extent), Interval(-args.extent, args.extent))
    overlays = [
        ("core_square", Rect(Interval(-m, m), Interval(-m, m))),
        ("integration_rectangle", Rect(p.interval, p.interval)),
    ]
    try:
        grid = surface_grid(region, args.n, args.n, overlays)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    if args.format == "csv":
        buf = io.StringIO()
        buf.write("u,v,gamma\n")
        mat = grid.as_matrix()
        for i, u in enumerate(grid.u):
            for j, v in enumerate(grid.v):
                buf.write(f"{float(u)!r},{float(v)!r},{float(mat[i, j])!r}\n")
        text = buf.getvalue()
    elif args.format == "json":
        text = _json({
            "x": p.x,
            "a": p.a,
            "region": region.as_dict(),
            "n_u": grid.n_u,
            "n_v": grid.n_v,
            "u": [float(t) for t in grid.u],
            "v": [float(t) for t in grid.v],
            "values": [float(t) for t in grid.values],
            "overlays": [{"label": lab, "rect": r.as_dict()} for lab, r in grid.overlays],
        })
    else:
        pos = int((grid.values > 0).sum())
        neg = int((grid.values < 0).sum())
        lines = [f"gamma on [-{args.extent!r}, {args.extent!r}]^2, {grid.n_u}x{grid.n_v} lattice: "
                 f"{pos} positive, {neg} negative, {grid.values.size - pos - neg} zero"]
        for lab, r in grid.overlays:
            lines.append(f"  {lab}: u {list(r.bounds[:2])}, v {list(r.bounds[2:])}")
        text = "\n".join(lines) + "\n"
    return EXIT_OK, text


def _a_values(raw: str) -> list[float]:
    try:
        vals = [float(t) for t in raw.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"--a-values must be a comma-separated list of numbers: {raw!r}") from exc
    if not vals:
        raise UsageError("--a-values must not be empty")
    if any(not math.isfinite(v) or v <= 0 for v in vals):
        raise UsageError("--a-values entries must be finite and > 0")
    return vals


def cmd_campaign(args) -> tuple[int, str]:
    a_values = _a_values(args.a_values) if args.a_values is not None else list(DEFAULT_A_VALUES)
    res = campaign(a_values, _grid(args), _quad_spec(args), _override(args))
    if args.format == "json":
        text = _json({
            "summary": {**res.counts, "all_passed": res.all_passed, "text": res.summary},
            "scans": [{"a": s.a, "monotone_consistent": s.monotone_consistent,
                       "worst_violation": s.worst_violation, "coverage": s.coverage}
                      for s in res.scans],
            "reports": [r.as_dict() for r in res.reports],
        })
    elif args.format == "csv":
        text = _csv(REPORT_COLUMNS, [[getattr(r, c) for c in REPORT_COLUMNS] for r in res.reports])
    else:
        failed = [r for r in res.reports if not r.passed]
        text = res.summary + "\n"
        if failed:
            text += _report_table(failed)
        for s in res.scans:
            if not s.monotone_consistent:
                text += f"scan a={s.a!r} inconsistent, worst violation {s.worst_violation!r}\n"
    return (EXIT_OK if res.all_passed else EXIT_FAIL), text


# --- wiring ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussmono", description="Evaluate and cross-check the monotonicity formulas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, default_format):
        sp.add_argument("--format", choices=["json", "csv", "human"], default=default_format)
        sp.add_argument("--out", default=None,
                        help=f"write output to this file (relative paths resolve against ${OUT_DIR_ENV})")

    def tols(sp):
        sp.add_argument("--abs-tol", type=float, default=None)
        sp.add_argument("--rel-tol", type=float, default=None)

    def xrange_(sp):
        sp.add_argument("--x-min", type=float, default=DEFAULT_X_MIN)
        sp.add_argument("--x-max", type=float, default=DEFAULT_X_MAX)
        sp.add_argument("--step", type=float, default=DEFAULT_X_STEP)

    sp = sub.add_parser("eval", help="print f, h in all forms, f' and the denominator")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--a", type=float, required=True)
    tols(sp)
    common(sp, "human")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify", help="run the identity checks at one (x, a)")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--a", type=float, required=True)
    tols(sp)
    common(sp, "human")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="sign and monotonicity scan along an x grid")
    sp.add_argument("--a", type=float, required=True)
    xrange_(sp)
    common(sp, "csv")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("surface", help="gamma sampled on a square with overlay rectangles")
    sp.add_argument("--x", type=float, default=1.0)
    sp.add_argument("--a", type=float, default=1.4)
    sp.add_argument("--extent", type=float, default=1.6)
    sp.add_argument("--n", type=int, default=161)
    common(sp, "csv")
    sp.set_defaults(func=cmd_surface)

    sp = sub.add_parser("campaign", help="full verification campaign")
    sp.add_argument("--a-values", default=None, help="comma-separated list of a values")
    xrange_(sp)
    tols(sp)
    common(sp, "human")
    sp.set_defaults(func=cmd_campaign)
    return parser


def _resolve_out(path: str) -> str:
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"gaussmono {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        target = _resolve_out(args.out)
        with open(target, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
