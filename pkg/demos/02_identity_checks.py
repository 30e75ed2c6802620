"""
Checking the identities at one parameter point
==============================================

Evaluate f and its derivative numerator h several ways at a single
(x, a) and print the comparison table that ``verify`` produces.
"""

from gaussmono.formulas import Params, f_prime, f_value, h_closed, h_separable, h_terms
from gaussmono.quadrature import h_double_integral
from gaussmono.verify import verify_identities

p = Params(x=1.0, a=1.4)

# three-term closed form, its summands, and the moment form
print("h terms     :", h_terms(p))
print("h closed    :", h_closed(p))
print("h separable :", h_separable(p))

# the double integral over [-x, a x]^2 carries its own error estimate
r = h_double_integral(p)
print(f"h integral  : {r.value!r} +- {r.err_estimate:.1e} ({r.panels} panels)")

print("f  =", f_value(p), " f' =", f_prime(p))

# every report carries both sides and the tolerance it was judged against
for rep in verify_identities(p):
    flag = "ok  " if rep.passed else "FAIL"
    print(f"{flag} {rep.check_name:40} abs_err={rep.abs_err:.2e} tol={rep.allowed():.1e}")
