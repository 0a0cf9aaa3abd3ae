"""A Pinchuk map and its one-parameter family of shifts.

Every map in the family shares the first component ``P``; the second
component is ``Q_base + S(P)`` for a univariate rational polynomial ``S``.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qpoly import MPoly, UniPoly, as_rat, compose_uni_into, jacobian2, lagrange_interpolate

XY = ("x", "y")
FH = ("f", "h")

#: u(f, h) = 170fh + 91h^2 + 195fh^2 + 69h^3 + 75fh^3 + (75/4)h^4
U_FH = MPoly(FH, {
    (1, 1): 170,
    (0, 2): 91,
    (1, 2): 195,
    (0, 3): 69,
    (1, 3): 75,
    (0, 4): Fraction(75, 4),
})


class IdentityFailure(AssertionError):
    """A polynomial identity that must hold by construction did not."""


@dataclass(frozen=True)
class PinchukCore:
    t: MPoly
    h: MPoly
    f: MPoly
    P: MPoly
    q: MPoly
    u: MPoly
    Q: MPoly
    S: UniPoly = dataclasses.field(default_factory=lambda: UniPoly([]))

    @property
    def Q_base(self) -> MPoly:
        return self.q - self.u

    def image(self, x, y) -> tuple:
        pt = {"x": as_rat(x), "y": as_rat(y)}
        return self.P.eval(pt), self.Q.eval(pt)

    def h_at(self, x, y) -> Fraction:
        return self.h.eval({"x": as_rat(x), "y": as_rat(y)})

    def jacobian(self) -> MPoly:
        return jacobian2(self.P, self.Q, "x", "y")

    def sos(self) -> MPoly:
        """t^2 + (t + f(13 + 15h))^2 + f^2."""
        t, f, h = self.t, self.f, self.h
        return t * t + (t + f * (13 + 15 * h)) ** 2 + f * f

    def check_invariants(self) -> None:
        x, y = MPoly.gens(XY)
        t = x * y - 1
        checks = {
            "t": self.t == t,
            "h": self.h == t * (x * t + 1),
            "f": self.f == (x * t + 1) ** 2 * (t * t + y),
            "P": self.P == self.f + self.h,
            "q": self.q == -(t * t) - 6 * t * self.h * (self.h + 1),
            "u": self.u == U_FH.subst({"f": self.f, "h": self.h}),
            "Q": self.Q == self.q - self.u + compose_uni_into(self.S, self.P),
        }
        bad = [k for k, ok in checks.items() if not ok]
        if bad:
            raise IdentityFailure(f"constructor identities failed: {bad}")


@lru_cache(maxsize=None)
def build_core() -> PinchukCore:
    """The base map (S = 0), with all constructor identities checked."""
    x, y = MPoly.gens(XY)
    t = x * y - 1
    xt1 = x * t + 1
    h = t * xt1
    f = xt1 * xt1 * (t * t + y)
    P = f + h
    q = -(t * t) - 6 * t * h * (h + 1)
    u = U_FH.subst({"f": f, "h": h})
    core = PinchukCore(t=t, h=h, f=f, P=P, q=q, u=u, Q=q - u)
    core.check_invariants()
    return core


def build_family(S) -> PinchukCore:
    """Family member with second component Q_base + S(P)."""
    S = S if isinstance(S, UniPoly) else UniPoly(S)
    base = build_core()
    if S.is_zero():
        return base
    core = dataclasses.replace(base, Q=base.Q + compose_uni_into(S, base.P), S=S)
    core.check_invariants()
    return core


def verify_jacobian_identity(core: PinchukCore) -> bool:
    """j(P, Q) minus the sum-of-squares expression expands to zero."""
    return (core.jacobian() - core.sos()).is_zero()


def positivity_chain() -> dict:
    """Mechanize the argument that t and f never vanish together on R^2.

    Works in Q[x, y, t] with t a free symbol: setting t = 0 in the factored
    form of f leaves y; then y = 0 turns t = xy - 1 into the constant -1.
    """
    x, y, T = MPoly.gens(("x", "y", "T"))
    f_in_t = (x * T + 1) ** 2 * (T * T + y)
    zero = MPoly.const(0, ("x", "y", "T"))
    f_at_t0 = f_in_t.subst({"x": x, "y": y, "T": zero})
    t_def = x * y - 1
    t_at_y0 = t_def.subst({"x": x, "y": zero, "T": T})
    step1 = f_at_t0 == y
    step2 = t_at_y0.is_constant() and t_at_y0.constant_value() != 0
    return {
        "f_given_t0": str(f_at_t0),
        "t_given_y0": str(t_at_y0),
        "t0_forces_f_eq_y": step1,
        "y0_forces_t_nonzero_constant": step2,
        "inconsistent": step1 and step2,
    }


def verify_positivity(core: PinchukCore) -> bool:
    """SOS identity plus inconsistency of {t = 0, f = 0}.

    The SOS is a sum of three squares, so it can only vanish where t, f and
    t + f(13 + 15h) all vanish, which needs t = f = 0.
    """
    if not verify_jacobian_identity(core):
        return False
    x, y = MPoly.gens(XY)
    if core.t != x * y - 1 or core.f != (x * core.t + 1) ** 2 * (core.t ** 2 + y):
        return False
    return positivity_chain()["inconsistent"]


def sample_levels(count: int) -> list:
    """Level values 2, 3, 4, ... and the pole-free parameter h = c + 1 on each."""
    return [(Fraction(c), Fraction(c + 1)) for c in range(2, 2 + count)]


def level_point(c: Fraction, h: Fraction) -> tuple:
    """Point on P = c with h-coordinate h, from the level-set parametrization."""
    g = c - 2 * h - h * h
    x = (c - h) * (h + 1) / (g * g)
    y = g * g * (c - h - h * h) / ((c - h) ** 2)
    return x, y


def recover_S(F1: PinchukCore, F2: PinchukCore) -> UniPoly:
    """The unique S with Q2 - Q1 = S(P), by interpolation on level sets."""
    if F1.P != F2.P:
        raise ValueError("maps do not share the first component")
    diff = F2.Q - F1.Q
    if diff.is_zero():
        return UniPoly([])
    bound = int(diff.total_degree()) // int(F1.P.total_degree())
    samples = []
    for c, h in sample_levels(bound + 2):
        x, y = level_point(c, h)
        pt = {"x": x, "y": y}
        if F1.P.eval(pt) != c:
            raise IdentityFailure(f"sample point off level {c}")
        samples.append((c, diff.eval(pt)))
    S = lagrange_interpolate(samples[:-1])
    extra_c, extra_v = samples[-1]
    if S(extra_c) != extra_v:
        raise IdentityFailure("extra interpolation node disagrees; not a shift by S(P)")
    if compose_uni_into(S, F1.P) != diff:
        raise IdentityFailure("S(P) does not reproduce Q2 - Q1")
    return S
