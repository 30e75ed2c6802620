"""
Splitting the integration square
================================

The integrand phi(u) phi(v) gamma(u, v) is odd under (u, v) -> (-u, -v),
so its integral over the centred square vanishes. What remains lives
on two strips where gamma has a single sign.
"""

from gaussmono.formulas import Params, h_closed
from gaussmono.kernel import decompose_rectangle
from gaussmono.quadrature import h_integrand, integrate_2d

for a in (1.0, 1.4, 0.5):
    p = Params(1.0, a)
    d = decompose_rectangle(p)
    core = integrate_2d(h_integrand, d.core)
    print(f"a = {a}: full {d.full.as_dict()}")
    print(f"  core {d.core.as_dict()} -> {core.value:.3e}")
    parts = core.value
    for s in d.strips:
        r = integrate_2d(h_integrand, s)
        parts += r.value
        print(f"  strip {s.as_dict()} -> {r.value:+.12f}")
    print(f"  pieces sum {parts:+.12f}   h closed {h_closed(p):+.12f}")
