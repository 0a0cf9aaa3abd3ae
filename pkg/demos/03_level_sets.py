"""
Level sets P = c
================

For c outside {-1, 0} the curve P = c is parametrized by h.  Q has a pole
at h = c and finite limits at h = -1 +/- sqrt(1 + c); those limits are
the asymptotic values over the vertical line P = c.
"""
from pinchukmaps.levelset import asymptotic_values, level_samples, level_zero_components, poles
from pinchukmaps.ratfn import to_decimal

for c in (3, 8, 2, -2):
    print("c =", c)
    for p in poles(c):
        print("   pole", p.location, p.kind)
    if c > -1:
        for h, q in asymptotic_values(c):
            print("   Q ->", q, "~", to_decimal(q), "as h ->", h)

for h, x, y, Q in level_samples(3, 4):
    print(h, x, y, Q)

lz = level_zero_components()
print("P = 0 has", lz.component_count, "components; t-curve at t = 1, -1:",
      lz.t_curve.point(1), lz.t_curve.point(-1))
