"""Scalar formulas: f, its denominator, the sign expression h and friends.

With ``D(x) = x (Phi(ax) + Phi(x))`` the quotient rule gives
``f'(x) = h(x) / D(x)**2`` where ``h`` is the three-term expression
evaluated by :func:`h_closed`. :func:`h_separable` is the same quantity
rewritten through Gaussian moments on ``[-x, a x]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .specfun import Interval, capital_phi, gaussian_moment, phi, phi_prime

# |h| below this multiple of the summed term magnitudes has no trustworthy sign
INDETERMINATE_BAND = 1e-13


@dataclass(frozen=True)
class Params:
    """The pair ``(x, a)``; both strictly positive and finite."""

    x: float
    a: float

    def __post_init__(self):
        for name in ("x", "a"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, (int, float)):
                raise TypeError(f"{name} must be a real number, got {val!r}")
            if not math.isfinite(val) or val <= 0:
                raise ValueError(f"{name} must be finite and > 0, got {val!r}")
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "a", float(self.a))

    @property
    def ax(self) -> float:
        return self.a * self.x

    @property
    def interval(self) -> Interval:
        return Interval(-self.x, self.ax)


def as_params(p) -> Params:
    if isinstance(p, Params):
        return p
    return Params(*p)


class IdentityId(str, Enum):
    A_derivative_term = "A_derivative_term"
    B_phi_sum = "B_phi_sum"
    C_phi_diff = "C_phi_diff"
    D_xphi_sum = "D_xphi_sum"


def phi_difference(p: Params) -> float:
    """``phi(a x) - phi(x)`` as ``phi(x) * expm1((1 - a^2) x^2)``."""
    p = as_params(p)
    return phi(p.x) * math.expm1((1.0 - p.a) * (1.0 + p.a) * p.x * p.x)


def phi_sum(p: Params) -> float:
    """``Phi(a x) + Phi(x)``."""
    p = as_params(p)
    return capital_phi(p.ax) + capital_phi(p.x)


def denominator(p: Params) -> float:
    p = as_params(p)
    return p.x * phi_sum(p)


def f_value(p: Params) -> float:
    """``(phi(a x) - phi(x)) / (x (Phi(a x) + Phi(x)))``; exactly 0 when a == 1."""
    p = as_params(p)
    return phi_difference(p) / denominator(p)


def f_small_x_limit(a: float) -> float:
    """Limit of f as x -> 0+, namely ``1 - a``."""
    if isinstance(a, bool) or not math.isfinite(a) or a <= 0:
        raise ValueError(f"a must be finite and > 0, got {a!r}")
    return 1.0 - a


def h_terms(p: Params) -> tuple[float, float, float]:
    """The three signed summands of h, in the order they are displayed."""
    p = as_params(p)
    x, ax = p.x, p.ax
    s = phi_sum(p)
    d = phi_difference(p)
    t1 = (ax * phi_prime(ax) - x * phi_prime(x)) * s
    t2 = -d * s
    t3 = -d * (ax * phi(ax) + x * phi(x))
    return t1, t2, t3


def h_closed(p: Params) -> float:
    t1, t2, t3 = h_terms(p)
    return t1 + t2 + t3


def h_scale(p: Params) -> float:
    return sum(abs(t) for t in h_terms(p))


def classify_sign(p: Params) -> int:
    """Sign of h, or 0 when |h| sits inside the indeterminate band."""
    t = h_terms(p)
    h = sum(t)
    if abs(h) <= INDETERMINATE_BAND * sum(abs(v) for v in t):
        return 0
    return 1 if h > 0 else -1


def moments(p: Params, orders=(0, 1, 2, 3)) -> dict[int, float]:
    p = as_params(p)
    iv = p.interval
    return {k: gaussian_moment(k, iv) for k in orders}


def h_separable(p: Params) -> float:
    """``4 (M3 M0 - M1 M2)`` with Gaussian moments over ``[-x, a x]``."""
    m = moments(p)
    return 4.0 * (m[3] * m[0] - m[1] * m[2])


def f_prime(p: Params) -> float:
    p = as_params(p)
    d = denominator(p)
    return h_closed(p) / (d * d)


def reduction_identity_sides(ident: IdentityId, p: Params) -> tuple[float, float]:
    """Left side from phi/Phi closed forms, right side from Gaussian moments."""
    ident = IdentityId(ident)
    p = as_params(p)
    x, ax = p.x, p.ax
    if ident is IdentityId.A_derivative_term:
        m = moments(p, (1, 3))
        return ax * phi_prime(ax) - x * phi_prime(x), -4.0 * m[1] + 4.0 * m[3]
    if ident is IdentityId.B_phi_sum:
        return phi_sum(p), gaussian_moment(0, p.interval)
    if ident is IdentityId.C_phi_diff:
        return phi_difference(p), -2.0 * gaussian_moment(1, p.interval)
    m = moments(p, (0, 2))
    return ax * phi(ax) + x * phi(x), m[0] - 2.0 * m[2]
