"""Adaptive Gauss-Legendre quadrature on intervals and rectangles.

Each panel is integrated with an ``n``-point Gauss-Legendre rule and with
the ``n // 2``-point rule on the same panel; their difference is the local
error estimate. The panel with the largest estimate is split (bisected in
1D, quadrisected in 2D) until the summed estimate meets the tolerance or
the panel budget runs out. Integrands must accept numpy arrays.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .kernel import Rect, gamma, gamma_tilde, decompose_rectangle
from .formulas import Params, as_params
from .specfun import Interval

_EPS = np.finfo(float).eps
# multiple of eps * sum|w f| added to every panel estimate to cover roundoff
_ROUNDOFF_FACTOR = 50.0


@dataclass(frozen=True)
class QuadSpec:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_panels: int = 4096
    panel_order: int = 20

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if int(self.max_panels) != self.max_panels or self.max_panels < 1:
            raise ValueError(f"max_panels must be an integer >= 1, got {self.max_panels}")
        if int(self.panel_order) != self.panel_order or self.panel_order < 2:
            raise ValueError(f"panel_order must be an integer >= 2, got {self.panel_order}")

    def target(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_SPEC = QuadSpec()


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    evaluations: int
    converged: bool
    panels: int = 1


def legendre_nodes_weights(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.

    Newton's method runs on ``P_n`` evaluated through the three-term
    recurrence, started from the Tricomi approximation to each root.
    Nodes come back sorted ascending and exactly antisymmetric.
    """
    if n < 1:
        raise ValueError(f"need at least one node, got {n}")
    return _legendre_cached(int(n))


@lru_cache(maxsize=None)
def _legendre_cached(n: int) -> tuple[np.ndarray, np.ndarray]:
    # iterate in extended precision where the platform has it, then round once
    ld = np.longdouble
    m = (n + 1) // 2
    i = np.arange(1, m + 1, dtype=ld)
    # Tricomi initial guess for the positive roots, largest first
    x = np.cos(ld(np.pi) * (i - ld(0.25)) / (n + ld(0.5))) * (1 - ld(n - 1) / (8 * ld(n) ** 3))
    tol = 4 * np.finfo(ld).eps
    for _ in range(100):
        p, dp = _legendre_eval(n, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) <= tol:
            break
    p, dp = _legendre_eval(n, x)
    w = 2 / ((1 - x * x) * dp * dp)
    x = x.astype(float)
    w = w.astype(float)

    # mirror the positive half so symmetry is exact
    if n % 2:
        x[-1] = 0.0
        nodes = np.concatenate([-x, x[-2::-1]])
        weights = np.concatenate([w, w[-2::-1]])
    else:
        nodes = np.concatenate([-x, x[::-1]])
        weights = np.concatenate([w, w[::-1]])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _legendre_eval(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p0 = np.ones_like(x)
    p1 = x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    if n == 1:
        return p1, np.ones_like(x)
    dp = n * (x * p1 - p0) / (x * x - 1)
    return p1, dp


def _values(integrand, *coords) -> np.ndarray:
    out = np.asarray(integrand(*coords), dtype=float)
    if out.shape != coords[0].shape:
        out = np.broadcast_to(out, coords[0].shape)
    return out


class _Rule1D:
    def __init__(self, order: int):
        self.xh, self.wh = legendre_nodes_weights(order)
        self.xl, self.wl = legendre_nodes_weights(max(1, order // 2))
        self.evals = len(self.xh) + len(self.xl)

    def panel(self, f, lo: float, hi: float) -> tuple[float, float]:
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        fh = _values(f, mid + half * self.xh)
        fl = _values(f, mid + half * self.xl)
        high = half * float(np.dot(self.wh, fh))
        low = half * float(np.dot(self.wl, fl))
        resabs = abs(half) * float(np.dot(self.wh, np.abs(fh)))
        return high, abs(high - low) + _ROUNDOFF_FACTOR * _EPS * resabs


class _Rule2D:
    def __init__(self, order: int):
        xh, wh = legendre_nodes_weights(order)
        xl, wl = legendre_nodes_weights(max(1, order // 2))
        self.uh, self.vh = np.meshgrid(xh, xh, indexing="ij")
        self.wh = np.outer(wh, wh)
        self.ul, self.vl = np.meshgrid(xl, xl, indexing="ij")
        self.wl = np.outer(wl, wl)
        self.evals = self.wh.size + self.wl.size

    def panel(self, f, u0: float, u1: float, v0: float, v1: float) -> tuple[float, float]:
        hu, mu = 0.5 * (u1 - u0), 0.5 * (u1 + u0)
        hv, mv = 0.5 * (v1 - v0), 0.5 * (v1 + v0)
        jac = hu * hv
        fh = _values(f, mu + hu * self.uh, mv + hv * self.vh)
        fl = _values(f, mu + hu * self.ul, mv + hv * self.vl)
        high = jac * float(np.sum(self.wh * fh))
        low = jac * float(np.sum(self.wl * fl))
        resabs = abs(jac) * float(np.sum(self.wh * np.abs(fh)))
        return high, abs(high - low) + _ROUNDOFF_FACTOR * _EPS * resabs


def _adapt(first, split, evaluate, spec: QuadSpec, evals_per_panel: int) -> QuadResult:
    # priority refinement; the counter breaks ties so runs are reproducible
    value, err = evaluate(first)
    heap = [(-err, 0, first, value, err)]
    counter = 1
    total_val, total_err = value, err
    evaluations = evals_per_panel
    while total_err > spec.target(total_val):
        n_after = len(heap) - 1 + len(split(heap[0][2]))
        if n_after > spec.max_panels:
            break
        _, _, region, v_old, e_old = heapq.heappop(heap)
        total_val -= v_old
        total_err -= e_old
        for child in split(region):
            v, e = evaluate(child)
            evaluations += evals_per_panel
            heapq.heappush(heap, (-e, counter, child, v, e))
            counter += 1
            total_val += v
            total_err += e
    # re-sum in canonical order so drift from the running updates is removed
    items = sorted(heap, key=lambda it: it[1])
    total_val = math.fsum(it[3] for it in items)
    total_err = math.fsum(it[4] for it in items)
    converged = total_err <= spec.target(total_val)
    return QuadResult(total_val, total_err, evaluations, converged, len(items))


def integrate_1d(integrand: Callable, iv: Interval, spec: QuadSpec = DEFAULT_SPEC) -> QuadResult:
    """Adaptive integral of ``integrand`` over ``iv``.

    ``converged`` is only set when the summed error estimate meets
    ``max(abs_tol, rel_tol * |value|)``; exhausting ``max_panels`` returns
    the best value with ``converged=False``.
    """
    if not isinstance(iv, Interval):
        iv = Interval(*iv)
    rule = _Rule1D(spec.panel_order)
    if iv.lo == iv.hi:
        return QuadResult(0.0, 0.0, 1, True, 1)

    def evaluate(seg):
        return rule.panel(integrand, *seg)

    def split(seg):
        lo, hi = seg
        mid = 0.5 * (lo + hi)
        return [(lo, mid), (mid, hi)]

    return _adapt((iv.lo, iv.hi), split, evaluate, spec, rule.evals)


def integrate_2d(integrand: Callable, r: Rect, spec: QuadSpec = DEFAULT_SPEC) -> QuadResult:
    """Adaptive tensor-product integral of ``integrand(u, v)`` over ``r``."""
    rule = _Rule2D(spec.panel_order)
    if r.u.lo == r.u.hi or r.v.lo == r.v.hi:
        return QuadResult(0.0, 0.0, 1, True, 1)

    def evaluate(box):
        return rule.panel(integrand, *box)

    def split(box):
        u0, u1, v0, v1 = box
        um = 0.5 * (u0 + u1)
        vm = 0.5 * (v0 + v1)
        return [(u0, um, v0, vm), (u0, um, vm, v1), (um, u1, v0, vm), (um, u1, vm, v1)]

    return _adapt((r.u.lo, r.u.hi, r.v.lo, r.v.hi), split, evaluate, spec, rule.evals)


def _gauss_weight(u, v):
    return np.exp(-u * u) * np.exp(-v * v)


def h_integrand(u, v):
    """Integrand of the double-integral form of h: ``phi(u) phi(v) gamma(u, v)``."""
    return _gauss_weight(u, v) * gamma(u, v)


def h_tilde_integrand(u, v):
    return _gauss_weight(u, v) * gamma_tilde(u, v)


def h_tilde_swapped_integrand(u, v):
    return _gauss_weight(u, v) * gamma_tilde(v, u)


def _square(p: Params) -> Rect:
    side = Interval(-p.x, p.a * p.x)
    return Rect(side, side)


def h_double_integral(p: Params, spec: QuadSpec = DEFAULT_SPEC) -> QuadResult:
    """h as the integral of ``phi(u) phi(v) gamma(u, v)`` over ``[-x, a x]^2``."""
    p = as_params(p)
    return integrate_2d(h_integrand, _square(p), spec)


def h_tilde_integrals(p: Params, spec: QuadSpec = DEFAULT_SPEC) -> tuple[QuadResult, QuadResult]:
    """The unsymmetrized kernel integrated with arguments in both orders."""
    p = as_params(p)
    sq = _square(p)
    return integrate_2d(h_tilde_integrand, sq, spec), integrate_2d(h_tilde_swapped_integrand, sq, spec)


def integrate_decomposition(p: Params, spec: QuadSpec = DEFAULT_SPEC) -> tuple[QuadResult, list[QuadResult]]:
    """Integrate the h integrand over the core square and each strip separately."""
    p = as_params(p)
    dec = decompose_rectangle(p)
    core = integrate_2d(h_integrand, dec.core, spec)
    strips = [integrate_2d(h_integrand, s, spec) for s in dec.strips]
    return core, strips
