"""The two-dimensional kernels and the rectangle decomposition.

``gamma(u, v) = 2 (u + v) (u - v)**2`` is the symmetrized form of
``gamma_tilde(u, v) = 4 (u**3 - u v**2)``. It flips sign under
``(u, v) -> (-u, -v)``, vanishes on ``u = v`` and ``u = -v`` and is
positive above the anti-diagonal. Functions accept scalars or numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .formulas import Params, as_params
from .specfun import Interval


@dataclass(frozen=True)
class Rect:
    u: Interval
    v: Interval

    @classmethod
    def from_bounds(cls, u0, u1, v0, v1) -> "Rect":
        return cls(Interval(u0, u1), Interval(v0, v1))

    @property
    def area(self) -> float:
        return self.u.width * self.v.width

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        return self.u.lo, self.u.hi, self.v.lo, self.v.hi

    def contains(self, u, v, tol: float = 0.0):
        return (
            (u >= self.u.lo - tol) & (u <= self.u.hi + tol)
            & (v >= self.v.lo - tol) & (v <= self.v.hi + tol)
        )

    def within(self, other: "Rect") -> bool:
        return (other.u.lo <= self.u.lo and self.u.hi <= other.u.hi
                and other.v.lo <= self.v.lo and self.v.hi <= other.v.hi)

    def as_dict(self) -> dict:
        return {"u": [self.u.lo, self.u.hi], "v": [self.v.lo, self.v.hi]}


@dataclass(frozen=True)
class Decomposition:
    """Origin-symmetric core square plus the sign-definite strips around it."""

    full: Rect
    core: Rect
    strips: tuple[Rect, ...]
    strip_sign: int

    @property
    def pieces(self) -> tuple[Rect, ...]:
        return (self.core, *self.strips)

    def locate(self, u: float, v: float, tol: float = 1e-12) -> int:
        """Index into :attr:`pieces` of the first piece containing ``(u, v)``, or -1."""
        for i, piece in enumerate(self.pieces):
            if piece.contains(u, v, tol):
                return i
        return -1


@dataclass
class SurfaceGrid:
    """Samples of gamma on a regular lattice, stored row-major (u outer, v inner)."""

    region: Rect
    n_u: int
    n_v: int
    u: np.ndarray
    v: np.ndarray
    values: np.ndarray
    overlays: list[tuple[str, Rect]] = field(default_factory=list)

    def value(self, i: int, j: int) -> float:
        return float(self.values[i * self.n_v + j])

    def as_matrix(self) -> np.ndarray:
        return self.values.reshape(self.n_u, self.n_v)


def gamma(u, v):
    return 2.0 * (u + v) * (u - v) ** 2


def gamma_tilde(u, v):
    return 4.0 * (u**3 - u * v**2)


def symmetrize_check(u, v):
    """Pair ``(gamma(u, v), mean of gamma_tilde in both argument orders)``."""
    return gamma(u, v), 0.5 * (gamma_tilde(u, v) + gamma_tilde(v, u))


def symmetrization_scale(u, v):
    """Sum of the monomial magnitudes that enter either side of the symmetrization.

    Rounding error of both sides is a few ulps of this, while ``gamma``
    itself can be far smaller near ``u = v`` and ``u = -v``.
    """
    au, av = np.abs(u), np.abs(v)
    return 4.0 * (au + av) * (au * au + av * av)


def antisymmetry_residual(u, v):
    return gamma(u, v) + gamma(-u, -v)


def sign_region(u, v):
    """Sign of gamma read off from the factors: 0 on ``u = v`` or ``u = -v``."""
    s = np.sign(np.asarray(u) + np.asarray(v)) * (np.asarray(u) != np.asarray(v))
    if np.ndim(s) == 0:
        return int(s)
    return s.astype(int)


def decompose_rectangle(p: Params) -> Decomposition:
    """Split ``[-x, a x]^2`` into the square ``[-m, m]^2`` and two strips.

    ``m = min(x, a x)``. For ``a > 1`` the strips sit at ``u >= x`` and
    ``v >= x``; for ``a < 1`` they are the mirror images at ``u <= -a x``
    and ``v <= -a x``. gamma has the sign of ``a - 1`` inside every strip.
    """
    p = as_params(p)
    x, ax = p.x, p.ax
    full = Rect(Interval(-x, ax), Interval(-x, ax))
    m = min(x, ax)
    core = Rect(Interval(-m, m), Interval(-m, m))
    if p.a > 1:
        strips = (
            Rect(Interval(x, ax), Interval(-x, ax)),
            Rect(Interval(-x, x), Interval(x, ax)),
        )
        sign = 1
    elif p.a < 1:
        strips = (
            Rect(Interval(-x, -ax), Interval(-x, ax)),
            Rect(Interval(-ax, ax), Interval(-x, -ax)),
        )
        sign = -1
    else:
        strips = ()
        sign = 0
    return Decomposition(full, core, strips, sign)


def symmetric_lattice(iv: Interval, n: int) -> np.ndarray:
    """``n`` equispaced points on ``iv``, endpoints included.

    Built from integer offsets about the midpoint so a lattice on an
    origin-symmetric interval is exactly antisymmetric.
    """
    k = 2.0 * np.arange(n) - (n - 1)
    t = iv.midpoint + 0.5 * iv.width * (k / (n - 1))
    t[0], t[-1] = iv.lo, iv.hi
    return t


def surface_grid(region: Rect, n_u: int, n_v: int, overlays=()) -> SurfaceGrid:
    for name, n in (("n_u", n_u), ("n_v", n_v)):
        if int(n) != n or n < 2:
            raise ValueError(f"{name} must be an integer >= 2, got {n!r}")
    if region.u.width <= 0 or region.v.width <= 0:
        raise ValueError("surface region must have positive width in both directions")
    overlays = list(overlays)
    for label, r in overlays:
        if not r.within(region):
            raise ValueError(f"overlay {label!r} extends outside the sampled region")
    u = symmetric_lattice(region.u, int(n_u))
    v = symmetric_lattice(region.v, int(n_v))
    uu, vv = np.meshgrid(u, v, indexing="ij")
    values = gamma(uu, vv).ravel()
    return SurfaceGrid(region, int(n_u), int(n_v), u, v, values, overlays)
