"""
Surface data for the kernel
===========================

Sample gamma(u, v) on a lattice and check the structure a contour plot
would show: zero lines on the diagonals and odd symmetry through the
origin. The CLI ``surface`` command writes the same data as CSV or JSON.
"""

import numpy as np

from gaussmono.kernel import Rect, gamma, surface_grid

region = Rect.from_bounds(-1.6, 1.6, -1.6, 1.6)
overlays = [("core_square", Rect.from_bounds(-1, 1, -1, 1)),
            ("integration_rectangle", Rect.from_bounds(-1, 1.4, -1, 1.4))]
g = surface_grid(region, 161, 161, overlays)
mat = g.as_matrix()

print("lattice", mat.shape, "range", mat.min(), mat.max())
print("odd symmetry exact:", np.array_equal(mat, -mat[::-1, ::-1]))
print("zero on u = v:", np.all(np.diag(mat) == 0.0))
print("zero on u = -v:", np.all(np.diag(mat[:, ::-1]) == 0.0))

# fraction of the integration rectangle where gamma is positive
u = np.linspace(-1, 1.4, 241)
uu, vv = np.meshgrid(u, u, indexing="ij")
print("positive share of [-1, 1.4]^2:", float(np.mean(gamma(uu, vv) > 0)))

# coarse text rendering of the sign pattern, v increasing upward
for j in range(160, -1, -20):
    print("".join("+" if mat[i, j] > 0 else "-" if mat[i, j] < 0 else "0" for i in range(0, 161, 10)))
