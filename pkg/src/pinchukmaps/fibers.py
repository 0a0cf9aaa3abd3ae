"""Exact preimages F^{-1}(p, q) for rational targets.

Off the lines P = 0 and P = -1 every preimage is recovered from its
h-coordinate r, a real root of the sextic R(p, q, T), through

    x = (p - r)(r + 1) / (p - 2r - r^2)^2,   y = (p - 2r - r^2)^2 (p - r - r^2) / (p - r)^2.

R is linear in Q with Q-part -Q (T - P)^2, so every admissible root gives a
point with Q = q exactly; no tolerance is involved anywhere.  The lines
P = 0 and P = -1 carry one extra branch each where f vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import avariety
from .fieldext import derive_R
from .pinchuk import PinchukCore, build_core
from .qpoly import MPoly, UniPoly, as_rat
from .ratfn import RatFn, rf_eq, to_decimal
from .levelset import compose_with
from .uniroots import AlgNum, alg_image, alg_sign_at, real_roots

Number = Union[Fraction, AlgNum]

GENERIC = "generic-h"
LEVEL0_T = "level0-tcurve"
LEVELM1_H = "levelm1-hcurve"

#: Q on the f = 0, h = -1 branch is -t^2 - u(0, -1) = -t^2 - 163/4.
LEVELM1_OFFSET = Fraction(163, 4)


class NotInvolutionDomain(ValueError):
    """The point maps onto the asymptotic variety, where tau is undefined."""


@dataclass(frozen=True)
class FiberPoint:
    x: Number
    y: Number
    branch: str
    h_value: Number
    target: tuple

    def same_point(self, other) -> bool:
        ox, oy = (other.x, other.y) if isinstance(other, FiberPoint) else other
        return _num_eq(self.x, ox) and _num_eq(self.y, oy)

    def as_json(self) -> dict:
        return {
            "x": _exact(self.x),
            "y": _exact(self.y),
            "h": _exact(self.h_value),
            "branch": self.branch,
            "x_approx": to_decimal(self.x),
            "y_approx": to_decimal(self.y),
            "h_approx": to_decimal(self.h_value),
        }


@dataclass(frozen=True)
class FiberResult:
    target: tuple
    points: tuple
    classification: str

    @property
    def count(self) -> int:
        return len(self.points)


def _num_eq(a, b) -> bool:
    if isinstance(a, AlgNum):
        return a == b
    if isinstance(b, AlgNum):
        return b == a
    return as_rat(a) == as_rat(b)


def _exact(v) -> str:
    if isinstance(v, AlgNum):
        if v.is_rational():
            return str(v.lo)
        return f"root of {v.defpoly} in [{v.lo}, {v.hi}]"
    return str(as_rat(v))


def _branch_identities_hold(core: PinchukCore) -> dict:
    """Both f = 0 branches satisfy their stated level, h-value and Q-profile."""
    t = MPoly.var("t", ("t",))
    one = RatFn.const(1, ("t",))
    checks = {}
    x0, y0 = RatFn(MPoly.const(-1, ("t",)), t), RatFn(-t * (t + 1))
    checks["tcurve_P"] = rf_eq(compose_with(core.P, x0, y0), 0 * one)
    checks["tcurve_h"] = rf_eq(compose_with(core.h, x0, y0), 0 * one)
    checks["tcurve_Q"] = rf_eq(compose_with(core.Q_base, x0, y0), RatFn(-t * t))
    x1, y1 = RatFn(-(1 + t), t * t), RatFn(-t * t)
    checks["m1_P"] = rf_eq(compose_with(core.P, x1, y1), -1 * one)
    checks["m1_h"] = rf_eq(compose_with(core.h, x1, y1), -1 * one)
    checks["m1_f"] = rf_eq(compose_with(core.f, x1, y1), 0 * one)
    checks["m1_Q"] = rf_eq(compose_with(core.Q_base, x1, y1), RatFn(-t * t) - LEVELM1_OFFSET)
    return checks


@lru_cache(maxsize=None)
def branch_report() -> dict:
    report = _branch_identities_hold(build_core())
    if not all(report.values()):
        raise AssertionError(f"f = 0 branch identities failed: {report}")
    return report


def _point_from_h(p: Fraction, r, target) -> FiberPoint:
    g = UniPoly([p, -2, -1])           # p - 2r - r^2
    pm = UniPoly([p, -1])              # p - r
    x = alg_image(r, pm * UniPoly([1, 1]), g * g)
    y = alg_image(r, g * g * UniPoly([p, -1, -1]), pm * pm)
    h = r.simplify() if isinstance(r, AlgNum) else r
    return FiberPoint(_simp(x), _simp(y), GENERIC, h, target)


def _simp(v):
    return v.simplify() if isinstance(v, AlgNum) else v


def _square_roots(value: Fraction) -> list:
    """Both real square roots of a positive rational, as exact numbers."""
    rts = real_roots(UniPoly([-value, 0, 1]))
    return [r.simplify() for r in rts]


def _generic_points(p: Fraction, q: Fraction, target) -> list:
    sextic = derive_R().specialize(p, q)
    pts = []
    for r in real_roots(sextic):
        if alg_sign_at(UniPoly([p, -2, -1]), r) == 0 or alg_sign_at(UniPoly([p, -1]), r) == 0:
            continue
        pts.append(_point_from_h(p, r, target))
    return pts


def fiber(p, q) -> FiberResult:
    return _fiber(as_rat(p), as_rat(q))


@lru_cache(maxsize=512)
def _fiber(p: Fraction, q: Fraction) -> FiberResult:
    branch_report()
    target = (p, q)
    pts = _generic_points(p, q, target)
    if p == 0 and q < 0:
        for t in _square_roots(-q):
            x = alg_image(t, UniPoly([-1]), UniPoly([0, 1]))
            y = alg_image(t, UniPoly([0, -1, -1]))
            pts.append(FiberPoint(_simp(x), _simp(y), LEVEL0_T, Fraction(0), target))
    if p == -1 and q < -LEVELM1_OFFSET:
        for t in _square_roots(-q - LEVELM1_OFFSET):
            x = alg_image(t, UniPoly([-1, -1]), UniPoly([0, 0, 1]))
            y = alg_image(t, UniPoly([0, 0, -1]))
            pts.append(FiberPoint(_simp(x), _simp(y), LEVELM1_H, Fraction(-1), target))
    return FiberResult(target, tuple(pts), avariety.classify_point(p, q))


def expected_count(p, q) -> int:
    p, q = as_rat(p), as_rat(q)
    cls = avariety.classify_point(p, q)
    if cls != avariety.ON_CURVE:
        return 2
    if (p, q) in ((Fraction(0), Fraction(0)), avariety.SINGULAR_POINT):
        return 0
    return 1


def image(x, y, core: PinchukCore | None = None) -> tuple:
    return (core or build_core()).image(x, y)


def tau(x, y=None) -> FiberPoint:
    """The other preimage of F(x, y), for rational (x, y) or a FiberPoint."""
    if isinstance(x, FiberPoint):
        point = x
        target = point.target
        coords = (point.x, point.y)
    else:
        coords = (as_rat(x), as_rat(y))
        target = image(*coords)
    if avariety.classify_point(*target) == avariety.ON_CURVE:
        raise NotInvolutionDomain(f"F({coords[0]}, {coords[1]}) lies on the asymptotic variety")
    fib = fiber(*target)
    if fib.count != 2:
        raise NotInvolutionDomain(f"fiber over {target} has {fib.count} points")
    others = [pt for pt in fib.points if not pt.same_point(coords)]
    if len(others) != 1:
        raise AssertionError("input point not found in its own fiber")
    return others[0]
