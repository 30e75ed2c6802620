"""
Sign of the derivative across a
===============================

Scan f over an x grid for several a. Above a = 1 the derivative
numerator h is positive and f rises; below it f falls; at a = 1 f is
identically zero.
"""

import numpy as np

from gaussmono.verify import default_x_grid, scan_monotonicity

grid = default_x_grid()
for a in (0.25, 0.5, 1.0, 1.4, 2.0):
    rep = scan_monotonicity(a, grid)
    f = np.array([r.f for r in rep.rows])
    signs = sorted({r.sign_observed for r in rep.rows})
    print(f"a = {a:4}: f from {f[0]:+.6f} to {f[-1]:+.6f}, signs of h {signs}, "
          f"consistent = {rep.monotone_consistent}")

# near x = 0 f approaches 1 - a
rep = scan_monotonicity(2.0, [1e-3, 1e-2, 1e-1])
print("a = 2, small x:", [round(r.f, 6) for r in rep.rows])
