"""Rational parametrizations of the level sets P = c.

For c outside {-1, 0} the level set is swept out by h via

    x(h) = (c - h)(h + 1) / (c - 2h - h^2)^2
    y(h) = (c - 2h - h^2)^2 (c - h - h^2) / (c - h)^2

with a pole at h = c where Q diverges and, for c > -1, two further poles at
h = -1 +/- sqrt(1 + c) where Q has finite limits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .pinchuk import PinchukCore, build_core
from .qpoly import MPoly, as_rat
from .ratfn import Limit, QuadNum, RatFn, rf_eq, rf_limit_at, rf_subst

H = ("h",)
TU = ("t",)


class LevelError(ValueError):
    """Level value outside the domain of the generic parametrization."""


@dataclass(frozen=True)
class Pole:
    location: object  # Fraction or QuadNum
    kind: str  # "divergent" or "finite"


@dataclass(frozen=True)
class LevelParam:
    c: Fraction
    x_of_h: RatFn
    y_of_h: RatFn
    excluded: tuple = field(default_factory=tuple)

    def point(self, h) -> tuple:
        pt = {"h": as_rat(h)}
        return self.x_of_h.eval(pt), self.y_of_h.eval(pt)


def _param_rfs(c: Fraction) -> tuple:
    h = MPoly.var("h", H)
    g = c - 2 * h - h * h
    x = RatFn((c - h) * (h + 1), g * g)
    y = RatFn(g * g * (c - h - h * h), (c - h) * (c - h))
    return x, y


def compose_with(poly: MPoly, x_of: RatFn, y_of: RatFn) -> RatFn:
    return rf_subst(RatFn(poly), {"x": x_of, "y": y_of})


def param_level(c, core: PinchukCore | None = None, check: bool = True) -> LevelParam:
    c = as_rat(c)
    if c in (0, -1):
        raise LevelError(f"level c={c} needs a different parametrization (c must avoid -1 and 0)")
    core = core or build_core()
    x, y = _param_rfs(c)
    if check:
        hvar = RatFn.var("h", H)
        if not rf_eq(compose_with(core.P, x, y), RatFn.const(c, H)):
            raise AssertionError(f"P does not reduce to {c} along the parametrization")
        if not rf_eq(compose_with(core.h, x, y), hvar):
            raise AssertionError("h does not reduce to the parameter")
    return LevelParam(c, x, y, tuple(poles(c)))


def poles(c) -> list:
    """Pole at h = c (Q diverges) and, for c > -1, at h = -1 +/- sqrt(1 + c)."""
    c = as_rat(c)
    if c in (0, -1):
        raise LevelError(f"level c={c} is excluded")
    out = [Pole(c, "divergent")]
    if c > -1:
        root = QuadNum.sqrt(1 + c)
        for loc in (-1 + root, -1 - root):
            out.append(Pole(loc.simplify() if isinstance(loc, QuadNum) else loc, "finite"))
    return sorted(out, key=lambda p: float(p.location), reverse=True)


def q_on_level(c, core: PinchukCore | None = None) -> RatFn:
    """Q along P = c as a rational function of h."""
    core = core or build_core()
    x, y = _param_rfs(as_rat(c))
    if as_rat(c) in (0, -1):
        raise LevelError(f"level c={c} is excluded")
    return compose_with(core.Q, x, y)


def limit_on_level(c, s, core: PinchukCore | None = None) -> Limit:
    return rf_limit_at(q_on_level(c, core), s)


def asymptotic_values(c, core: PinchukCore | None = None, cross_check: bool = True) -> list:
    """[(pole, finite limit of Q)] at the two finite-asymptote poles of P = c."""
    c = as_rat(c)
    if not c > -1 or c == 0:
        raise LevelError("asymptotic values need c > -1 and c != 0")
    qc = q_on_level(c, core)
    out = []
    for pole in poles(c):
        if pole.kind != "finite":
            continue
        lim = rf_limit_at(qc, pole.location)
        if lim.is_pole:
            raise AssertionError(f"expected a finite limit at {pole.location}")
        out.append((pole.location, lim.value))
    if cross_check:
        from .avariety import param_asymptotic

        ap = param_asymptotic()
        for loc, val in out:
            # the pole at h corresponds to the curve parameter s = -2 - h
            if ap.Q_of_s(-2 - loc) != val or ap.P_of_s(-2 - loc) != c:
                raise AssertionError(f"asymptotic value at {loc} is off the curve parametrization")
    return out


@dataclass(frozen=True)
class TCurve:
    """The two components of P = 0 on which h vanishes identically."""

    x_of_t: RatFn
    y_of_t: RatFn
    q_of_t: RatFn

    def point(self, t) -> tuple:
        pt = {"t": as_rat(t)}
        return self.x_of_t.eval(pt), self.y_of_t.eval(pt)


@dataclass(frozen=True)
class LevelZero:
    h_curve: LevelParam
    t_curve: TCurve
    report: dict

    @property
    def component_count(self) -> int:
        # h ranges over three intervals cut at -2 and 0; t over two cut at 0
        return 3 + 2


def level_zero_components(core: PinchukCore | None = None) -> LevelZero:
    core = core or build_core()
    x, y = _param_rfs(Fraction(0))
    hvar = RatFn.var("h", H)
    h_curve = LevelParam(Fraction(0), x, y, (Pole(Fraction(0), "excluded"), Pole(Fraction(-2), "excluded")))
    t = MPoly.var("t", TU)
    xt = RatFn(MPoly.const(-1, TU), t)
    yt = RatFn(-t * (t + 1))
    qt = RatFn(-t * t)
    report = {
        "h_curve_P_zero": rf_eq(compose_with(core.P, x, y), RatFn.const(0, H)),
        "h_curve_h_param": rf_eq(compose_with(core.h, x, y), hvar),
        "t_curve_P_zero": rf_eq(compose_with(core.P, xt, yt), RatFn.const(0, TU)),
        "t_curve_h_zero": rf_eq(compose_with(core.h, xt, yt), RatFn.const(0, TU)),
        "t_curve_Q": rf_eq(compose_with(core.Q_base, xt, yt), qt),
        "t_curve_t_consistent": rf_eq(compose_with(core.t, xt, yt), RatFn(t)),
    }
    if not all(report.values()):
        raise AssertionError(f"level-zero identities failed: {report}")
    return LevelZero(h_curve, TCurve(xt, yt, qt), report)


def sample_parameters(c, count: int) -> list:
    """``count`` rational h values avoiding the poles of P = c, deterministic."""
    c = as_rat(c)
    bad = set()
    if c in (0, -1):
        raise LevelError(f"level c={c} is excluded")
    for p in poles(c):
        if isinstance(p.location, Fraction):
            bad.add(p.location)
    out = []
    k = 0
    while len(out) < count:
        # 0, 1/2, -1/2, 1, -1, 3/2, ...
        cand = Fraction((k + 1) // 2, 2) * (1 if k % 2 else -1) if k else Fraction(0)
        k += 1
        if cand not in bad:
            out.append(cand)
    return out


def level_samples(c, count: int, core: PinchukCore | None = None) -> list:
    """Rows (h, x, y, Q) with exact rational entries."""
    core = core or build_core()
    lp = param_level(c, core)
    rows = []
    for h in sample_parameters(c, count):
        x, y = lp.point(h)
        Q = core.Q.eval({"x": x, "y": y})
        rows.append((h, x, y, Q))
    return rows
