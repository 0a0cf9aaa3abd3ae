"""Formal quotients of polynomials, quadratic surds, and limits at poles.

Rational functions are never reduced to lowest terms; two of them are equal
when their cross-multiplied difference is the zero polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Mapping, Union

from .qpoly import MPoly, UniPoly, UniverseError, as_rat, format_rat


class QuadNum:
    """a + b*sqrt(d) with rational a, b and a non-square integer d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        d = int(d)
        r = math.isqrt(d) if d >= 0 else -1
        if r * r == d:
            raise ValueError(f"{d} is a perfect square")
        self.a = as_rat(a)
        self.b = as_rat(b)
        self.d = d

    @staticmethod
    def sqrt(value) -> Union[Fraction, "QuadNum"]:
        """Nonnegative square root; a Fraction when the radicand is a rational square."""
        value = as_rat(value)
        if value < 0:
            raise ValueError("square root of a negative rational")
        # sqrt(n/m) = sqrt(n*m)/m
        n, m = value.numerator, value.denominator
        nm = n * m
        r = math.isqrt(nm)
        if r * r == nm:
            return Fraction(r, m)
        # pull out small square factors to keep d canonical for moderate inputs
        scale = 1
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
            while nm % (p * p) == 0:
                nm //= p * p
                scale *= p
        return QuadNum(0, Fraction(scale, m), nm)

    def _coerce(self, other):
        if isinstance(other, QuadNum):
            if other.d == self.d or other.b == 0:
                return QuadNum(other.a, other.b, self.d)
            # sqrt(d2) = (k / d1) sqrt(d1) when d1 d2 = k^2
            k = math.isqrt(self.d * other.d)
            if k * k != self.d * other.d:
                raise ValueError(f"mixing sqrt({self.d}) and sqrt({other.d})")
            return QuadNum(other.a, other.b * Fraction(k, self.d), self.d)
        if isinstance(other, (int, Fraction)):
            return QuadNum(other, 0, self.d)
        return NotImplemented

    def is_rational(self) -> bool:
        return self.b == 0

    def simplify(self):
        return self.a if self.b == 0 else self

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic number")
        num = self * o.conjugate()
        return QuadNum(num.a / n, num.b / n, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return QuadNum(1, 0, self.d) / (self ** -k)
        result, base = QuadNum(1, 0, self.d), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sign(self) -> int:
        """Exact sign (only meaningful for d > 0)."""
        if self.d < 0:
            raise ValueError("sign of a non-real number")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadNum):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            try:
                o = self._coerce(other)
            except ValueError:
                # sqrt(d1)/sqrt(d2) irrational: equal only if both parts vanish
                return False
            return (self.a, self.b) == (o.a, o.b)
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        # b sqrt(d) is determined by the sign of b and b^2 d
        return hash((self.a, self.b > 0, self.b * self.b * self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def minimal_polynomial(self) -> UniPoly:
        """Monic rational polynomial of least degree with this number as a root."""
        if self.b == 0:
            return UniPoly([-self.a, 1])
        return UniPoly([self.norm(), -2 * self.a, 1])

    def to_decimal(self, digits: int = 12) -> str:
        with localcontext() as ctx:
            ctx.prec = digits + 20
            val = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            val += Decimal(self.b.numerator) / Decimal(self.b.denominator) * Decimal(self.d).sqrt()
        return format_decimal(val, digits)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        if self.b == 0:
            return format_rat(self.a)
        return f"{format_rat(self.a)} + {format_rat(self.b)}*sqrt({self.d})"

    def __repr__(self):
        return f"QuadNum({self})"


def format_decimal(value, digits: int = 12) -> str:
    """Render a Fraction or Decimal with ``digits`` significant digits."""
    if isinstance(value, Fraction):
        with localcontext() as ctx:
            ctx.prec = digits + 20
            value = Decimal(value.numerator) / Decimal(value.denominator)
    return format(value, f".{digits}g")


def to_decimal(value, digits: int = 12) -> str:
    """Decimal approximation of a Fraction, QuadNum or algebraic number."""
    if hasattr(value, "to_decimal"):
        return value.to_decimal(digits)
    return format_decimal(as_rat(value), digits)


class RatFn:
    """num/den over a shared variable universe; den never the zero polynomial."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(1, num.universe)
        if num.universe != den.universe:
            raise UniverseError("numerator and denominator universes differ")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @property
    def universe(self) -> tuple:
        return self.num.universe

    @classmethod
    def const(cls, value, universe) -> "RatFn":
        return cls(MPoly.const(value, universe))

    @classmethod
    def var(cls, name: str, universe) -> "RatFn":
        return cls(MPoly.var(name, universe))

    def _coerce(self, other) -> "RatFn":
        if isinstance(other, RatFn):
            if other.universe != self.universe:
                raise UniverseError("rational functions live in different universes")
            return other
        if isinstance(other, MPoly):
            if other.universe != self.universe:
                raise UniverseError("rational functions live in different universes")
            return RatFn(other)
        if isinstance(other, (int, Fraction)):
            return RatFn.const(other, self.universe)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("negative power of the zero function")
            return RatFn(self.den ** -k, self.num ** -k)
        return RatFn(self.num ** k, self.den ** k)

    def equals(self, other) -> bool:
        o = self._coerce(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def eval(self, point: Mapping[str, object]):
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval(point) / d

    def subst(self, bindings: Mapping[str, "RatFn"]) -> "RatFn":
        return rf_subst(self, bindings)

    def univariate(self, name: str | None = None) -> tuple:
        """(num, den) as UniPolys, requiring at most one occurring variable."""
        names = set(self.num.variables()) | set(self.den.variables())
        if name is None:
            if len(names) > 1:
                raise ValueError(f"not univariate: {sorted(names)}")
            name = names.pop() if names else self.universe[0]
        elif names - {name}:
            raise ValueError(f"not univariate in {name!r}: {sorted(names)}")
        return self.num.to_unipoly(name), self.den.to_unipoly(name)

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFn({self})"


def rf_arith(op: str, a: RatFn, b: RatFn) -> RatFn:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_eq(a: RatFn, b) -> bool:
    return a.equals(b)


def as_ratfn(value, universe) -> RatFn:
    if isinstance(value, RatFn):
        return value
    if isinstance(value, MPoly):
        return RatFn(value)
    return RatFn.const(value, universe)


def _poly_homog_subst(poly: MPoly, order: tuple, nums: list, dens: list, degs: list,
                      universe: tuple, cache: dict) -> MPoly:
    """Sum of c * prod num_i^e_i den_i^(D_i - e_i) over the terms of poly.

    ``poly`` lives in the universe ``order``; the result is the polynomial
    numerator of poly(num/den) over the common denominator prod den_i^D_i.
    """
    if not order:
        return MPoly.const(poly.constant_value() if poly.terms else 0, universe)
    head, rest = order[0], order[1:]
    level = len(order)
    coeffs = poly.collect(head)
    result = MPoly.const(0, universe)
    D = degs[0]
    for k, c in enumerate(coeffs):
        if not c.terms:
            continue
        inner = MPoly._raw(rest, {e[1:]: v for e, v in c.terms.items()})
        sub = _poly_homog_subst(inner, rest, nums[1:], dens[1:], degs[1:], universe, cache)
        key = (level, k)
        weight = cache.get(key)
        if weight is None:
            weight = nums[0] ** k * dens[0] ** (D - k)
            cache[key] = weight
        result = result + sub * weight
    return result


def rf_subst(a: RatFn, bindings: Mapping[str, object]) -> RatFn:
    """Compose a rational function with rational-function bindings."""
    occurring = tuple(v for v in a.universe
                      if v in set(a.num.variables()) | set(a.den.variables()))
    missing = [v for v in occurring if v not in bindings]
    if missing:
        raise KeyError(f"unbound variables {missing}")
    targets = [bindings[v] for v in occurring]
    universe = None
    for t in targets:
        if isinstance(t, (RatFn, MPoly)):
            universe = t.universe
            break
    if universe is None:
        universe = a.universe
    targets = [as_ratfn(t, universe) for t in targets]
    for t in targets:
        if t.universe != universe:
            raise UniverseError("binding targets must share one universe")
    degs = [max(a.num.degree_in(v) if a.num.terms else 0,
                a.den.degree_in(v) if a.den.terms else 0) for v in occurring]
    nums = [t.num for t in targets]
    dens = [t.den for t in targets]
    cache: dict = {}
    num = _poly_homog_subst(a.num.embed(occurring), occurring, nums, dens, degs, universe, cache)
    den = _poly_homog_subst(a.den.embed(occurring), occurring, nums, dens, degs, universe, cache)
    if den.is_zero():
        raise ZeroDivisionError("substitution makes the denominator identically zero")
    return RatFn(num, den)


@dataclass(frozen=True)
class Limit:
    """Outcome of a one-sided-agnostic limit: a finite value or a pole of some order."""

    kind: str  # "finite" or "pole"
    value: object = None
    order: int = 0

    @property
    def is_pole(self) -> bool:
        return self.kind == "pole"


def _strip_factor(p: UniPoly, m: UniPoly) -> tuple:
    k = 0
    while not p.is_zero():
        q, r = divmod(p, m)
        if not r.is_zero():
            break
        p, k = q, k + 1
    return p, k


def rf_limit_at(a: RatFn, s) -> Limit:
    """Limit of a univariate rational function as its variable tends to s.

    ``s`` is a Fraction or a QuadNum; for a QuadNum the common factor removed
    is its rational minimal polynomial, so both conjugates are cancelled.
    """
    num, den = a.univariate()
    if isinstance(s, QuadNum) and s.is_rational():
        s = s.a
    m = s.minimal_polynomial() if isinstance(s, QuadNum) else UniPoly([-as_rat(s), 1])
    num, kn = _strip_factor(num, m)
    den, kd = _strip_factor(den, m)
    if kd > kn:
        return Limit("pole", order=kd - kn)
    if kn > kd:
        return Limit("finite", value=Fraction(0))
    value = num(s) / den(s)
    if isinstance(value, QuadNum):
        value = value.simplify()
    return Limit("finite", value=value)
