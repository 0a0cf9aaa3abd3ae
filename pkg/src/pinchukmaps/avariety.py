"""The asymptotic variety of the map: implicit equation, parametrization, membership.

The curve is cut out (up to one extra point of its Zariski closure) by

    W(P, Q) = (Q - (345/4)P^2 - 231P - 104)^2 - (P + 1)^3 (75P + 104)^2

and is traced once by s -> (s^2 + 2s, Q(s)) with

    Q(s) = (345/4)P^2 + 231P + 104 + (s + 1)^3 (75P + 104),  P = s^2 + 2s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qpoly import MPoly, UniPoly, as_rat
from .ratfn import QuadNum

PQ = ("P", "Q")

OFF = "off"
ON_CURVE = "on_curve"
CLOSURE_ONLY = "closure_only"

SINGULAR_POINT = (Fraction(-1), Fraction(-163, 4))
CLOSURE_POINT = (Fraction(-104, 75), Fraction(-18928, 375))


@lru_cache(maxsize=None)
def implicit_poly() -> MPoly:
    P, Q = MPoly.gens(PQ)
    branch = Q - Fraction(345, 4) * P * P - 231 * P - 104
    return branch * branch - (P + 1) ** 3 * (75 * P + 104) ** 2


def W_at(p, q):
    return implicit_poly().eval({"P": p, "Q": q})


@dataclass(frozen=True)
class AsymParam:
    P_of_s: UniPoly
    Q_of_s: UniPoly

    def point(self, s) -> tuple:
        return self.P_of_s(s), self.Q_of_s(s)


@lru_cache(maxsize=None)
def param_asymptotic() -> AsymParam:
    """Polynomial parametrization; the + branch of (P + 1)^(3/2) = (s + 1)^3."""
    s = UniPoly.x()
    P = s * s + 2 * s
    Q = Fraction(345, 4) * P * P + 231 * P + 104 + (s + 1) ** 3 * (75 * P + 104)
    ap = AsymParam(P, Q)
    if not param_identity_holds(ap):
        raise AssertionError("W(P(s), Q(s)) is not identically zero")
    return ap


def param_identity_holds(ap: AsymParam) -> bool:
    """W(P(s), Q(s)) == 0 as a polynomial in s."""
    W = implicit_poly()
    acc = UniPoly([])
    for (i, j), c in W.terms.items():
        acc = acc + (ap.P_of_s ** i) * (ap.Q_of_s ** j) * c
    return acc.is_zero()


def curve_parameters(p) -> list:
    """Real s with s^2 + 2s = p, i.e. -1 +/- sqrt(1 + p) (Fraction or QuadNum)."""
    p = as_rat(p)
    if p < -1:
        return []
    root = QuadNum.sqrt(1 + p)
    if isinstance(root, Fraction):
        return sorted({-1 + root, -1 - root})
    return [-1 + root, -1 - root]


def classify_point(p, q) -> str:
    p, q = as_rat(p), as_rat(q)
    if W_at(p, q) != 0:
        return OFF
    ap = param_asymptotic()
    for s in curve_parameters(p):
        if ap.Q_of_s(s) == q:
            return ON_CURVE
    return CLOSURE_ONLY


@dataclass(frozen=True)
class CriticalPoints:
    on_curve: list
    closure_only: list


def singular_points() -> CriticalPoints:
    """Points where W and its gradient vanish, split by membership in the curve.

    dW/dQ = 0 forces Q = (345/4)P^2 + 231P + 104; then W = 0 reduces to
    (P + 1)^3 (75P + 104)^2 = 0.
    """
    W = implicit_poly()
    dP, dQ = W.diff("P"), W.diff("Q")
    on, closure = [], []
    for p in (Fraction(-1), Fraction(-104, 75)):
        q = Fraction(345, 4) * p * p + 231 * p + 104
        pt = {"P": p, "Q": q}
        if W.eval(pt) != 0 or dP.eval(pt) != 0 or dQ.eval(pt) != 0:
            continue
        (on if classify_point(p, q) == ON_CURVE else closure).append((p, q))
    return CriticalPoints(on, closure)


def gradient_at(p, q) -> tuple:
    W = implicit_poly()
    pt = {"P": as_rat(p), "Q": as_rat(q)}
    return W.diff("P").eval(pt), W.diff("Q").eval(pt)


def curve_rows(start, stop, step) -> list:
    """(s, P(s), Q(s)) for s = start, start + step, ... up to and including stop."""
    start, stop, step = as_rat(start), as_rat(stop), as_rat(step)
    if step <= 0:
        raise ValueError("step must be positive")
    if stop < start:
        raise ValueError("--to must not be below --from")
    ap = param_asymptotic()
    rows = []
    s = start
    while s <= stop:
        P, Q = ap.point(s)
        rows.append((s, P, Q))
        s += step
    return rows
