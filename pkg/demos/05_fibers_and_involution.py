"""
Fibers and the involution tau
=============================

Every preimage is rebuilt from its h-coordinate, a real root of R(p, q, T).
Off the asymptotic variety there are exactly two, and swapping them is
the involution tau.
"""
from fractions import Fraction

from pinchukmaps import fiber, tau
from pinchukmaps.fibers import expected_count

for target in [(0, 0), (0, 208), (0, -1), (1, 0), (Fraction(-1), Fraction(-163, 4)), (-1, -50)]:
    res = fiber(*target)
    print(target, res.classification, "count", res.count, "expected", expected_count(*target))
    for pt in res.points:
        print("    ", pt.as_json()["x_approx"], pt.as_json()["y_approx"], pt.branch)

print("tau(1, 0) =", tau(1, 0).as_json())
other = tau(Fraction(1, 2), Fraction(3))
print("tau(1/2, 3) ~", other.as_json()["x_approx"], other.as_json()["y_approx"])
back = tau(other)
print("tau(tau(1/2, 3)) =", back.x, back.y)
