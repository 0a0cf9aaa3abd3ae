"""
The asymptotic variety
======================

A curve in the (P, Q) plane traced by s -> (s^2 + 2s, Q(s)).  Points on it
have one preimage (or none at the two special points), points off it two.
Writes avariety.csv next to the working directory and, if matplotlib is
around, a plot.
"""
import csv
from fractions import Fraction

from pinchukmaps import avariety

ap = avariety.param_asymptotic()
print("P(s) =", ap.P_of_s)
print("Q(s) =", ap.Q_of_s)

for name, pt in [("(0,0)", (0, 0)), ("(0,208)", (0, 208)), ("(0,-1)", (0, -1)),
                 ("closure point", avariety.CLOSURE_POINT)]:
    print(name, avariety.classify_point(*pt), "W =", avariety.W_at(*pt))

crit = avariety.singular_points()
print("singular on curve:", crit.on_curve, " closure only:", crit.closure_only)

rows = avariety.curve_rows(Fraction(-3), Fraction(1), Fraction(1, 20))
with open("avariety.csv", "w", newline="") as fh:
    w = csv.writer(fh)
    w.writerow(["s", "P", "Q"])
    w.writerows([[str(v) for v in r] for r in rows])
print(len(rows), "rows written to avariety.csv")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    P = [float(r[1]) for r in rows]
    Q = [float(r[2]) for r in rows]
    plt.plot(P, Q)
    plt.plot([0, 0, -1], [0, 208, -163 / 4], "o")
    plt.xlabel("P")
    plt.ylabel("Q")
    plt.savefig("avariety.png")
