"""Numerical verification of a symmetry-based monotonicity argument.

The function ``f(x) = (phi(a x) - phi(x)) / (x (Phi(a x) + Phi(x)))`` with
``phi(x) = exp(-x**2)`` increases in ``x`` for ``a > 1`` and decreases for
``a < 1``. This package evaluates the sign expression ``h`` behind ``f'``
in closed form, through Gaussian moments and as a double integral of the
kernel ``gamma(u, v) = 2 (u + v) (u - v)**2``, and cross-checks them.
"""

from .formulas import (
    IdentityId,
    Params,
    classify_sign,
    denominator,
    f_prime,
    f_small_x_limit,
    f_value,
    h_closed,
    h_separable,
    reduction_identity_sides,
)
from .kernel import (
    Decomposition,
    Rect,
    SurfaceGrid,
    antisymmetry_residual,
    decompose_rectangle,
    gamma,
    gamma_tilde,
    sign_region,
    surface_grid,
    symmetrize_check,
)
from .quadrature import (
    QuadResult,
    QuadSpec,
    h_double_integral,
    h_tilde_integrals,
    integrate_1d,
    integrate_2d,
    integrate_decomposition,
)
from .specfun import Interval, capital_phi, erf_core, gaussian_moment, phi, phi_prime
from .verify import (
    ScanReport,
    ScanRow,
    VerificationReport,
    campaign,
    scan_monotonicity,
    verify_identities,
)

__version__ = "0.1.0"
