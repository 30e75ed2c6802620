"""Acceptance suite: one PASS/FAIL line per criterion.

Each criterion is a function returning ``(passed, detail)``. The pytest
wrappers record the line and assert on it; the lines are echoed in the
terminal summary (see ``conftest.py``) and also when the module is run
as a script.
"""

import csv
import io
import subprocess
import sys

import numpy as np
import pytest

from gaussmono.formulas import (
    IdentityId,
    Params,
    classify_sign,
    f_prime,
    f_small_x_limit,
    f_value,
    h_closed,
    h_separable,
    reduction_identity_sides,
)
from gaussmono.kernel import (
    antisymmetry_residual,
    decompose_rectangle,
    symmetrization_scale,
    symmetrize_check,
)
from gaussmono.quadrature import (
    QuadSpec,
    h_double_integral,
    h_integrand,
    h_tilde_integrals,
    integrate_1d,
    integrate_2d,
)
from gaussmono.specfun import Interval, erf_core, gaussian_moment
from gaussmono.verify import default_x_grid

from oracle_values import ERF_TABLE, F_VALUES

X_GRID = [0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0]
A_GRID = [0.25, 0.5, 0.8, 1.0, 1.25, 1.4, 2.0, 4.0]
GRID = [(x, a) for x in X_GRID for a in A_GRID]

RESULTS = {}


def _random_params(n, seed):
    rng = np.random.default_rng(seed)
    return [Params(float(rng.uniform(0.1, 3.0)), float(rng.uniform(0.2, 4.0))) for _ in range(n)]


def criterion_1():
    worst = 0.0
    for x, a in GRID:
        p = Params(x, a)
        hc = h_closed(p)
        hd = h_double_integral(p)
        allowed = max(1e-10, 1e-9 * abs(hc))
        if not hd.converged:
            return False, f"quadrature did not converge at x={x}, a={a}"
        worst = max(worst, abs(hc - hd.value) / allowed)
    return worst <= 1.0, f"worst |h_closed - h_double| / allowed = {worst:.3g} over {len(GRID)} points"


def criterion_2():
    worst = 0.0
    for x, a in GRID:
        p = Params(x, a)
        hc, hs = h_closed(p), h_separable(p)
        allowed = max(1e-14, 1e-11 * abs(hc))
        worst = max(worst, abs(hc - hs) / allowed)
    return worst <= 1.0, f"worst |h_closed - h_separable| / allowed = {worst:.3g}"


def criterion_3():
    worst_pair = 0.0
    for p in _random_params(50, 31):
        g = h_double_integral(p)
        t1, t2 = h_tilde_integrals(p)
        if not (g.converged and t1.converged and t2.converged):
            return False, f"quadrature did not converge at {p}"
        for r, s in ((t1, t2), (t1, g), (t2, g)):
            worst_pair = max(worst_pair, abs(r.value - s.value) / (r.err_estimate + s.err_estimate))
    rng = np.random.default_rng(37)
    u, v = rng.uniform(-10, 10, (2, 10_000))
    gm, mean = symmetrize_check(u, v)
    sym = float(np.max(np.abs(gm - mean) / symmetrization_scale(u, v)))
    anti = int(np.count_nonzero(antisymmetry_residual(u, v)))
    ok = worst_pair <= 1.0 and sym <= 1e-14 and anti == 0
    return ok, (f"pair gap / combined estimate <= {worst_pair:.3g}; symmetrization rel <= {sym:.3g}; "
                f"antisymmetry nonzero residuals = {anti}")


def criterion_4():
    worst = 0.0
    params = _random_params(200, 41)
    for ident in IdentityId:
        for p in params:
            lhs, rhs = reduction_identity_sides(ident, p)
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
    return worst <= 1e-12, f"worst rel err over A-D x 200 = {worst:.3g}"


def _monotone(a, grid, sign):
    ps = [Params(x, a) for x in grid]
    hs = [h_closed(p) for p in ps]
    fs = [f_value(p) for p in ps]
    diffs = np.diff(fs)
    if sign > 0:
        return all(h > 0 for h in hs) and bool(np.all(diffs > 0))
    return all(h < 0 for h in hs) and bool(np.all(diffs < 0))


def criterion_5():
    grid = default_x_grid()
    ps = [Params(x, 1.0) for x in grid]
    flat = all(abs(f_value(p)) <= 1e-14 for p in ps)
    zero_h = all(h_closed(p) == 0.0 or classify_sign(p) == 0 for p in ps)
    inc = all(_monotone(a, grid, 1) for a in (1.4, 2.0))
    dec = all(_monotone(a, grid, -1) for a in (0.5, 0.25))
    ok = flat and zero_h and inc and dec
    return ok, f"a=1 flat={flat} h~0={zero_h}; a=1.4,2 increasing={inc}; a=0.5,0.25 decreasing={dec}"


def criterion_6():
    spec = QuadSpec()
    d1 = decompose_rectangle(Params(1.0, 1.0))
    core1 = integrate_2d(h_integrand, d1.core, spec)
    p = Params(1.0, 1.4)
    d = decompose_rectangle(p)
    core = integrate_2d(h_integrand, d.core, spec)
    strips = [integrate_2d(h_integrand, s, spec) for s in d.strips]
    full = integrate_2d(h_integrand, d.full, spec)
    total = core.value + sum(s.value for s in strips)
    budget = full.err_estimate + core.err_estimate + sum(s.err_estimate for s in strips)
    ok = (abs(core1.value) <= 1e-12
          and all(s.value >= -1e-12 for s in strips)
          and h_closed(p) > 0 and full.value > 0
          and abs(total - full.value) <= budget)
    return ok, (f"core(a=1)={core1.value:.3g}; strips(a=1.4)={[round(s.value, 12) for s in strips]}; "
                f"h={h_closed(p):.6g}; |pieces - full|={abs(total - full.value):.3g} <= {budget:.3g}")


def criterion_7():
    worst = 0.0
    checked = 0
    for x, a in GRID:
        if a == 1.0:
            continue
        p = Params(x, a)
        fp = f_prime(p)
        if abs(fp) <= 1e-8:
            continue
        step = 1e-5 * max(1.0, x)
        fd = (f_value(Params(x + step, a)) - f_value(Params(x - step, a))) / (2 * step)
        worst = max(worst, abs(fp - fd) / abs(fp))
        checked += 1
    return worst <= 1e-6, f"worst rel err = {worst:.3g} at {checked} points"


def _moment_integrand(k):
    return lambda t: t**k * np.exp(-t * t)


def criterion_8():
    worst_erf = 0.0
    for x, ref in ERF_TABLE:
        ref = float(ref)
        got = erf_core(x)
        worst_erf = max(worst_erf, 0.0 if ref == 0.0 and got == 0.0 else abs(got - ref) / abs(ref))
    spec = QuadSpec(abs_tol=1e-15, rel_tol=1e-13, max_panels=512)
    rng = np.random.default_rng(43)
    worst_mom = 0.0
    for _ in range(100):
        lo, hi = sorted(float(t) for t in rng.uniform(-5, 5, 2))
        iv = Interval(lo, hi)
        for k in range(6):
            quad = integrate_1d(_moment_integrand(k), iv, spec).value
            m = gaussian_moment(k, iv)
            allowed = max(1e-14, 1e-11 * abs(quad))
            worst_mom = max(worst_mom, abs(m - quad) / allowed)
    ok = worst_erf <= 1e-14 and worst_mom <= 1.0
    return ok, f"erf worst rel = {worst_erf:.3g}; moments worst err / allowed = {worst_mom:.3g}"


def criterion_9():
    gaps, drift = {}, 0.0
    for a in (0.5, 1.0, 2.0):
        got = f_value(Params(1e-3, a))
        ref = float(F_VALUES[(0.001, a)])
        gaps[a] = max(abs(got - f_small_x_limit(a)), abs(ref - f_small_x_limit(a)))
        drift = max(drift, abs(got - ref))
    ok = max(gaps.values()) <= 5e-3 and drift <= 1e-12
    detail = ", ".join(f"a={a}: {g:.3g}" for a, g in gaps.items())
    return ok, f"gaps to 1-a {detail}; |f - 50-digit oracle| <= {drift:.3g}"


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "gaussmono", *args], capture_output=True, text=True)


def criterion_10():
    header = "x,a,f,h,f_prime,sign_expected,sign_observed,consistent"
    c1, c2 = _cli("campaign"), _cli("campaign")
    s1, s2 = _cli("scan", "--a", "1.4"), _cli("scan", "--a", "1.4")
    rows = list(csv.DictReader(io.StringIO(s1.stdout)))
    ok = (c1.returncode == 0 and s1.returncode == 0
          and s1.stdout.split("\n", 1)[0] == header
          and len(rows) > 0 and all(r["consistent"] == "true" for r in rows)
          and c1.stdout == c2.stdout and s1.stdout == s2.stdout)
    return ok, (f"campaign exit={c1.returncode}; scan rows={len(rows)} all consistent="
                f"{all(r['consistent'] == 'true' for r in rows)}; bit-identical="
                f"{c1.stdout == c2.stdout and s1.stdout == s2.stdout}")


CRITERIA = [
    (1, "closed form equals double integral", criterion_1),
    (2, "separable moment form", criterion_2),
    (3, "interchange, symmetrization, antisymmetry", criterion_3),
    (4, "reduction identities A-D", criterion_4),
    (5, "sign and monotonicity by a", criterion_5),
    (6, "rectangle decomposition at x=1", criterion_6),
    (7, "derivative relation", criterion_7),
    (8, "special functions", criterion_8),
    (9, "small-x limit", criterion_9),
    (10, "CLI contract", criterion_10),
]


def _line(num, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d} ({title}): {detail}"


@pytest.mark.parametrize("num, title, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(num, title, fn):
    ok, detail = fn()
    line = _line(num, title, ok, detail)
    RESULTS[num] = line
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        failed += not ok
        print(_line(num, title, ok, detail))
    sys.exit(1 if failed else 0)
