"""
Gaussian kernel, error function and moments
===========================================

Walk through the scalar building blocks: the kernel exp(-x^2), its
primitive, and closed-form moments over a finite interval.
"""

import numpy as np

from gaussmono.quadrature import integrate_1d
from gaussmono.specfun import Interval, capital_phi, erf_core, erfc_core, gaussian_moment, phi

# the kernel is unnormalized, so phi(0) is exactly one
print("phi(0) =", phi(0.0), " phi(1) =", phi(1.0))

# erf switches from a power series to a continued fraction for erfc at 2.5
for x in (0.5, 1.0, 2.5, 3.0, 5.0):
    print(f"erf({x}) = {erf_core(x)!r:24}  erfc({x}) = {erfc_core(x)!r}")

# the primitive of phi is sqrt(pi)/2 * erf
print("capital_phi(inf-ish) =", capital_phi(8.0), " sqrt(pi)/2 =", np.sqrt(np.pi) / 2)

# moments by recurrence against adaptive quadrature on the same interval
iv = Interval(-1.0, 1.4)
for k in range(6):
    quad = integrate_1d(lambda t, k=k: t**k * np.exp(-t * t), iv)
    m = gaussian_moment(k, iv)
    print(f"M_{k}[-1, 1.4] = {m!r:24} quadrature gap = {abs(m - quad.value):.2e}")

# odd moments over a symmetric interval vanish
print("M_3[-2, 2] =", gaussian_moment(3, Interval(-2.0, 2.0)))
