"""Verification campaign: identity checks, sign scans and their reports."""

from __future__ import annotations

import math
import statistics
from dataclasses import asdict, dataclass, field

from .formulas import (
    IdentityId,
    Params,
    as_params,
    classify_sign,
    f_prime,
    f_value,
    h_closed,
    h_separable,
    reduction_identity_sides,
)
from .quadrature import (
    DEFAULT_SPEC,
    QuadSpec,
    h_double_integral,
    h_tilde_integrals,
    integrate_decomposition,
)

NEAR_ZERO_ABS = 1e-12
FD_REL_TOL = 1e-6
FD_SMALL_DERIV = 1e-8
FD_ABS_TOL = 1e-10
# |f(x_{i+1}) - f(x_i)| at or below this is not used to judge monotonicity
F_DIFF_FLOOR = 1e-13

DEFAULT_A_VALUES = (0.25, 0.5, 0.8, 1.0, 1.25, 1.4, 2.0, 4.0)
DEFAULT_X_MIN, DEFAULT_X_MAX, DEFAULT_X_STEP = 0.1, 3.0, 0.05


@dataclass
class VerificationReport:
    check_name: str
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tolerance: float
    rel_tolerance: float
    passed: bool
    x: float = math.nan
    a: float = math.nan
    note: str = ""

    @classmethod
    def compare(cls, name, lhs, rhs, tolerance, rel_tolerance=0.0, p=None, note="",
                force_fail=False) -> "VerificationReport":
        lhs, rhs = float(lhs), float(rhs)
        abs_err = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs))
        rel_err = abs_err / scale if scale > 0 else 0.0
        x, a = (p.x, p.a) if p is not None else (math.nan, math.nan)
        rep = cls(name, lhs, rhs, abs_err, rel_err, float(tolerance), float(rel_tolerance),
                  False, x, a, note)
        rep.passed = rep.recheck() and not force_fail
        return rep

    def allowed(self) -> float:
        return max(self.tolerance, self.rel_tolerance * max(abs(self.lhs), abs(self.rhs)))

    def recheck(self) -> bool:
        """Recompute the pass rule from the stored fields."""
        if "non-converged" in self.note:
            return False
        return abs(self.lhs - self.rhs) <= self.allowed()

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class ScanRow:
    x: float
    a: float
    f: float
    h: float
    f_prime: float
    sign_expected: int
    sign_observed: int
    consistent: bool


@dataclass
class ScanReport:
    a: float
    rows: list[ScanRow]
    monotone_consistent: bool
    worst_violation: float
    bad_differences: int = 0

    @property
    def coverage(self) -> str:
        xs = [r.x for r in self.rows]
        return f"x in [{min(xs)!r}, {max(xs)!r}] ({len(xs)} grid points)"


@dataclass
class CampaignResult:
    scans: list[ScanReport]
    reports: list[VerificationReport]
    summary: str
    counts: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return self.counts.get("failed", 1) == 0


def _sign(t: float) -> int:
    return (t > 0) - (t < 0)


@dataclass(frozen=True)
class ToleranceOverride:
    """Replaces the per-check absolute and/or relative tolerances when set."""

    abs_tol: float | None = None
    rel_tol: float | None = None

    def apply(self, tol: float, rel: float) -> tuple[float, float]:
        return (tol if self.abs_tol is None else self.abs_tol,
                rel if self.rel_tol is None else self.rel_tol)


def _quad_note(*results) -> str:
    bad = [r for r in results if not r.converged]
    if not bad:
        return ""
    return "non-converged quadrature (max_panels exhausted)"


def finite_difference_step(x: float) -> float:
    step = 1e-5 * max(1.0, x)
    # keep x - step inside the domain
    return min(step, 0.5 * x)


def f_central_difference(p: Params) -> float:
    p = as_params(p)
    step = finite_difference_step(p.x)
    hi = f_value(Params(p.x + step, p.a))
    lo = f_value(Params(p.x - step, p.a))
    return (hi - lo) / (2.0 * step)


def verify_identities(p: Params, spec: QuadSpec = DEFAULT_SPEC,
                      override: ToleranceOverride | None = None) -> list[VerificationReport]:
    """Run every identity check at one parameter point.

    Non-converged quadratures fail their own reports; the remaining checks
    still run.
    """
    p = as_params(p)
    ov = override or ToleranceOverride()
    reports = []

    def add(name, lhs, rhs, tol, rel, note=""):
        tol, rel = ov.apply(tol, rel)
        reports.append(VerificationReport.compare(name, lhs, rhs, tol, rel, p, note))

    hc = h_closed(p)
    add("h_closed_vs_h_separable", hc, h_separable(p), 1e-14, 1e-11)

    hd = h_double_integral(p, spec)
    add("h_closed_vs_h_double_integral", hc, hd.value, 1e-10, 1e-9, _quad_note(hd))

    t1, t2 = h_tilde_integrals(p, spec)
    add("h_tilde_uv_vs_h_tilde_vu", t1.value, t2.value,
        t1.err_estimate + t2.err_estimate, 1e-9, _quad_note(t1, t2))
    add("h_tilde_uv_vs_h_closed", t1.value, hc, 1e-10, 1e-9, _quad_note(t1))
    add("h_tilde_vu_vs_h_closed", t2.value, hc, 1e-10, 1e-9, _quad_note(t2))
    add("gamma_symmetrized_vs_h_tilde_mean", hd.value, 0.5 * (t1.value + t2.value),
        hd.err_estimate + 0.5 * (t1.err_estimate + t2.err_estimate), 1e-9,
        _quad_note(hd, t1, t2))

    for ident in IdentityId:
        lhs, rhs = reduction_identity_sides(ident, p)
        add(f"reduction_{ident.value}", lhs, rhs, 1e-14, 1e-12)

    fp = f_prime(p)
    fd = f_central_difference(p)
    if abs(fp) > FD_SMALL_DERIV:
        add("f_prime_vs_finite_difference", fp, fd, 0.0, FD_REL_TOL)
    else:
        add("f_prime_vs_finite_difference", fp, fd, FD_ABS_TOL, FD_REL_TOL)

    core, strips = integrate_decomposition(p, spec)
    core_note = _quad_note(core)
    add("decomposition_core_square_zero", core.value, 0.0,
        core.err_estimate + NEAR_ZERO_ABS, 0.0, core_note)
    expected = _sign(p.a - 1.0)
    for i, s in enumerate(strips):
        # rhs clips the strip value onto the expected side of zero, so the
        # error is the distance by which it lands on the wrong side
        clipped = max(s.value, 0.0) if expected > 0 else min(s.value, 0.0)
        add(f"decomposition_strip{i + 1}_sign", s.value, clipped,
            s.err_estimate + NEAR_ZERO_ABS, 0.0, _quad_note(s) or "rhs: value clipped to sign(a-1)")
    pieces = core.value + math.fsum(s.value for s in strips)
    add("decomposition_additivity", pieces, hd.value,
        hd.err_estimate + core.err_estimate + sum(s.err_estimate for s in strips), 0.0,
        _quad_note(hd, core, *strips))
    return reports


def _validate_grid(x_grid) -> list[float]:
    xs = [float(x) for x in x_grid]
    if not xs:
        raise ValueError("x grid must not be empty")
    if any(not math.isfinite(x) or x <= 0 for x in xs):
        raise ValueError("x grid values must be finite and positive")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("x grid must be strictly increasing")
    return xs


def scan_monotonicity(a: float, x_grid, spec: QuadSpec | None = None) -> ScanReport:
    """Classify the sign of h along ``x_grid`` and check that f moves accordingly.

    When ``spec`` is given the sign of every row is also confirmed with the
    double-integral form of h.
    """
    if isinstance(a, bool) or not math.isfinite(a) or a <= 0:
        raise ValueError(f"a must be finite and > 0, got {a!r}")
    xs = _validate_grid(x_grid)
    expected = _sign(a - 1.0)
    rows = []
    worst = 0.0
    for x in xs:
        p = Params(x, a)
        h = h_closed(p)
        observed = classify_sign(p)
        consistent = observed == expected
        if spec is not None and expected != 0:
            hd = h_double_integral(p, spec)
            consistent = consistent and hd.converged and _sign(hd.value) == expected
        if not consistent:
            worst = max(worst, abs(h))
        rows.append(ScanRow(x, a, f_value(p), h, f_prime(p), expected, observed, consistent))

    bad = 0
    for r0, r1 in zip(rows, rows[1:]):
        diff = r1.f - r0.f
        if expected == 0:
            ok = diff == 0.0 or abs(diff) <= F_DIFF_FLOOR
        else:
            ok = abs(diff) <= F_DIFF_FLOOR or _sign(diff) == expected
        if not ok:
            bad += 1
            worst = max(worst, abs(diff))
    monotone = bad == 0 and all(r.consistent for r in rows)
    return ScanReport(float(a), rows, monotone, worst, bad)


def x_grid_from_range(x_min: float, x_max: float, step: float) -> list[float]:
    """Inclusive arithmetic grid, rounded to 12 decimals so values print cleanly."""
    if not (math.isfinite(x_min) and math.isfinite(x_max) and math.isfinite(step)):
        raise ValueError("grid bounds must be finite")
    if x_min <= 0 or step <= 0 or x_max < x_min:
        raise ValueError("need 0 < x_min <= x_max and step > 0")
    n = int(math.floor((x_max - x_min) / step + 1e-9)) + 1
    return [round(x_min + i * step, 12) for i in range(n)]


def default_x_grid() -> list[float]:
    return x_grid_from_range(DEFAULT_X_MIN, DEFAULT_X_MAX, DEFAULT_X_STEP)


def campaign_points(a_values, x_grid) -> list[Params]:
    """Every a value paired with the smallest, median and largest x."""
    xs = sorted(set(x_grid))
    picks = sorted({xs[0], statistics.median_low(xs), xs[-1]})
    return [Params(x, a) for a in sorted(set(a_values)) for x in picks]


def campaign(a_values, x_grid, spec: QuadSpec = DEFAULT_SPEC,
             override: ToleranceOverride | None = None) -> CampaignResult:
    a_values = [float(a) for a in a_values]
    if not a_values:
        raise ValueError("a_values must not be empty")
    for a in a_values:
        if not math.isfinite(a) or a <= 0:
            raise ValueError(f"a values must be finite and > 0, got {a!r}")
    xs = _validate_grid(x_grid)

    reports = []
    for p in campaign_points(a_values, xs):
        reports.extend(verify_identities(p, spec, override))
    reports.sort(key=lambda r: (r.a, r.x, r.check_name))
    scans = [scan_monotonicity(a, xs) for a in sorted(set(a_values))]

    n_pass = sum(r.passed for r in reports)
    n_scan_ok = sum(s.monotone_consistent for s in scans)
    counts = {
        "total": len(reports) + len(scans),
        "passed": n_pass + n_scan_ok,
        "failed": (len(reports) - n_pass) + (len(scans) - n_scan_ok),
        "identity_checks": len(reports),
        "identity_passed": n_pass,
        "scans": len(scans),
        "scans_consistent": n_scan_ok,
    }
    lines = [
        f"identity checks: {n_pass}/{len(reports)} passed "
        f"at {len(campaign_points(a_values, xs))} parameter points",
        f"monotonicity scans: {n_scan_ok}/{len(scans)} consistent, "
        f"a in {sorted(set(a_values))}, {scans[0].coverage}",
        f"total: {counts['total']}, passed: {counts['passed']}, failed: {counts['failed']}",
    ]
    return CampaignResult(scans, reports, "\n".join(lines), counts)
