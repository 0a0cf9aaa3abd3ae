"""
Building the map and checking its Jacobian
==========================================

F = (P, Q) is assembled from a handful of auxiliary polynomials in x, y.
Its Jacobian determinant is a sum of three squares, and t = f = 0 has no
real solution, so j(P, Q) > 0 on the whole plane.
"""
from fractions import Fraction

from pinchukmaps import build_core, verify_jacobian_identity, verify_positivity
from pinchukmaps.pinchuk import positivity_chain

core = build_core()
print("deg P =", core.P.total_degree(), " terms:", len(core.P))
print("deg Q =", core.Q.total_degree(), " terms:", len(core.Q))

# F(1, 1) and the h-coordinate there
print("F(1,1) =", core.image(1, 1), " h(1,1) =", core.h_at(1, 1))

print("j(P,Q) == t^2 + (t + f(13 + 15h))^2 + f^2 :", verify_jacobian_identity(core))
print(positivity_chain())
print("positivity certified:", verify_positivity(core))

# a few values of the Jacobian, just to look at them
j = core.jacobian()
for pt in [(0, 0), (1, 1), (Fraction(-3, 2), Fraction(2, 5))]:
    print(pt, "->", j.eval({"x": pt[0], "y": pt[1]}))
