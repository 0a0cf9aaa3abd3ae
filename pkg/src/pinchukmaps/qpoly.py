"""Sparse multivariate and dense univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` throughout; nothing here ever
touches floating point.  An :class:`MPoly` lives in a fixed, ordered variable
universe and stores its terms as a dict mapping exponent tuples to nonzero
coefficients.  Values are treated as immutable once built.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]

#: Total degree of the zero polynomial.
NEG_INF = -math.inf


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"not an exact rational: {value!r}")


_RAT_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rat(text: str) -> Fraction:
    """Parse ``[-]digits[/digits]``; anything else raises ValueError."""
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rat(value: Fraction) -> str:
    return str(Fraction(value))


class UniverseError(ValueError):
    """Operands live in different variable universes."""


class MPoly:
    """Sparse polynomial in a fixed ordered tuple of variables."""

    __slots__ = ("universe", "terms")

    def __init__(self, universe: Iterable[str], terms: Mapping | None = None):
        universe = tuple(universe)
        if len(set(universe)) != len(universe):
            raise ValueError(f"repeated variable in universe {universe}")
        n = len(universe)
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for universe {universe}")
            coeff = as_rat(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.universe = universe
        self.terms = clean

    @classmethod
    def _raw(cls, universe: tuple, terms: dict) -> "MPoly":
        obj = cls.__new__(cls)
        obj.universe = universe
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def const(cls, value: Scalar, universe: Iterable[str]) -> "MPoly":
        universe = tuple(universe)
        value = as_rat(value)
        terms = {(0,) * len(universe): value} if value else {}
        return cls._raw(universe, terms)

    @classmethod
    def var(cls, name: str, universe: Iterable[str]) -> "MPoly":
        universe = tuple(universe)
        if name not in universe:
            raise KeyError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in universe)
        return cls._raw(universe, {exps: Fraction(1)})

    @classmethod
    def gens(cls, universe: Iterable[str]) -> tuple:
        universe = tuple(universe)
        return tuple(cls.var(v, universe) for v in universe)

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.universe), Fraction(0))

    def total_degree(self):
        """Maximum total degree over all terms; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str):
        i = self._index(name)
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def variables(self) -> tuple:
        """Variables that actually occur."""
        used = [False] * len(self.universe)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for v, u in zip(self.universe, used) if u)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def _index(self, name: str) -> int:
        try:
            return self.universe.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} (universe {self.universe})") from None

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.universe != self.universe:
                raise UniverseError(f"universe mismatch: {self.universe} vs {other.universe}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.universe)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MPoly._raw(self.universe, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.universe, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, k: Scalar) -> "MPoly":
        k = as_rat(k)
        if not k:
            return MPoly._raw(self.universe, {})
        return MPoly._raw(self.universe, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        res: dict = {}
        get = res.get
        n = len(self.universe)
        if n == 1:
            for (e1,), c1 in b.items():
                for (e2,), c2 in a.items():
                    k = (e1 + e2,)
                    res[k] = get(k, 0) + c1 * c2
        elif n == 2:
            for (e1, f1), c1 in b.items():
                for (e2, f2), c2 in a.items():
                    k = (e1 + e2, f1 + f2)
                    res[k] = get(k, 0) + c1 * c2
        else:
            for e1, c1 in b.items():
                for e2, c2 in a.items():
                    k = tuple(x + y for x, y in zip(e1, e2))
                    res[k] = get(k, 0) + c1 * c2
        return MPoly._raw(self.universe, {e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a natural number")
        result = MPoly.const(1, self.universe)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.universe)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.universe == other.universe and self.terms == other.terms

    def __hash__(self):
        return hash((self.universe, frozenset(self.terms.items())))

    # calculus and structure

    def diff(self, name: str) -> "MPoly":
        i = self._index(name)
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                terms[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return MPoly._raw(self.universe, terms)

    def collect(self, name: str) -> list:
        """Coefficients by power of ``name``; entry i multiplies name**i.

        The coefficients keep the full universe with ``name`` absent.
        """
        i = self._index(name)
        if not self.terms:
            return []
        buckets: list = [dict() for _ in range(self.degree_in(name) + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + (0,) + e[i + 1:]] = c
        return [MPoly._raw(self.universe, b) for b in buckets]

    def embed(self, universe: Iterable[str]) -> "MPoly":
        """Re-express in a universe containing every variable that occurs."""
        universe = tuple(universe)
        pos = []
        for i, v in enumerate(self.universe):
            if v in universe:
                pos.append(universe.index(v))
            else:
                pos.append(None)
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(universe)
            for i, k in enumerate(e):
                if k:
                    if pos[i] is None:
                        raise KeyError(f"variable {self.universe[i]!r} missing from {universe}")
                    new[pos[i]] = k
            terms[tuple(new)] = c
        return MPoly._raw(universe, terms)

    def eval(self, point: Mapping[str, object]):
        """Evaluate at a point; values may be any exact ring elements."""
        missing = [v for v in self.variables() if v not in point]
        if missing:
            raise KeyError(f"unbound variables {missing}")
        values = [point.get(v, 0) for v in self.universe]
        powers: list = [dict() for _ in self.universe]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = values[i] ** k
                        powers[i][k] = p
                    term = term * p
            total = total + term
        return total

    def subst(self, bindings: Mapping[str, "MPoly"]) -> "MPoly":
        """Compose: replace every occurring variable by an MPoly of a common universe."""
        occurring = self.variables()
        missing = [v for v in occurring if v not in bindings]
        if missing:
            raise KeyError(f"unbound variables {missing}")
        targets = [bindings[v] for v in occurring]
        if not targets:
            target_universe = next(iter(bindings.values())).universe if bindings else self.universe
            return MPoly.const(self.constant_value(), target_universe)
        target_universe = targets[0].universe
        for t in targets:
            if t.universe != target_universe:
                raise UniverseError("binding targets must share one universe")
        reduced = self.embed(occurring)
        return _horner_subst(reduced, targets, target_universe)

    def to_unipoly(self, name: str | None = None) -> "UniPoly":
        occ = self.variables()
        if name is None:
            if len(occ) > 1:
                raise ValueError(f"not univariate: {occ}")
            name = occ[0] if occ else self.universe[0]
        if any(v != name for v in occ):
            raise ValueError(f"not univariate in {name!r}: {occ}")
        if not self.terms:
            return UniPoly([])
        i = self._index(name)
        coeffs = [Fraction(0)] * (self.degree_in(name) + 1)
        for e, c in self.terms.items():
            coeffs[e[i]] = c
        return UniPoly(coeffs)

    # text form

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = " ".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.universe, e) if k
            )
            parts.append(f"{format_rat(c)} * {mono}" if mono else format_rat(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"MPoly({self.universe!r}, '{self}')"

    @classmethod
    def parse(cls, text: str, universe: Iterable[str]) -> "MPoly":
        """Inverse of ``str``: terms ``c * x^a y^b`` joined by `` + ``."""
        universe = tuple(universe)
        text = text.strip()
        if text == "0":
            return cls._raw(universe, {})
        terms = {}
        for chunk in text.split(" + "):
            if " * " in chunk:
                coeff_text, mono = chunk.split(" * ", 1)
            elif re.match(r"^\s*-?\d+(/\d+)?\s*$", chunk):
                coeff_text, mono = chunk, ""
            else:
                coeff_text, mono = "1", chunk
            exps = [0] * len(universe)
            for factor in mono.split():
                name, _, power = factor.partition("^")
                if name not in universe:
                    raise ValueError(f"unknown variable {name!r} in {chunk!r}")
                exps[universe.index(name)] += int(power) if power else 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + parse_rat(coeff_text)
        return cls(universe, terms)


def _horner_subst(poly: MPoly, targets: list, universe: tuple) -> MPoly:
    """Nested Horner evaluation of ``poly`` (universe == occurring vars) at ``targets``."""
    if len(poly.universe) == 0:
        return MPoly.const(poly.constant_value() if poly.terms else 0, universe)
    head = poly.universe[0]
    rest = poly.universe[1:]
    coeffs = poly.collect(head)
    result = MPoly._raw(universe, {})
    for c in reversed(coeffs):
        result = result * targets[0]
        if c.terms:
            inner = MPoly._raw(rest, {e[1:]: v for e, v in c.terms.items()})
            result = result + _horner_subst(inner, targets[1:], universe)
    return result


# functional surface


def mp_arith(op: str, a: MPoly, b=None) -> MPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown operation {op!r}")


def mp_total_degree(a: MPoly):
    return a.total_degree()


def mp_diff(a: MPoly, v: str) -> MPoly:
    return a.diff(v)


def mp_subst(a: MPoly, bindings: Mapping[str, MPoly]) -> MPoly:
    return a.subst(bindings)


def mp_collect(a: MPoly, v: str) -> list:
    return a.collect(v)


def mp_eval(a: MPoly, point: Mapping[str, object]):
    return a.eval(point)


def jacobian2(p: MPoly, q: MPoly, v1: str, v2: str) -> MPoly:
    """Determinant of the 2x2 Jacobian matrix of (p, q) in (v1, v2)."""
    if p.universe != q.universe:
        raise UniverseError("jacobian2 operands must share a universe")
    return p.diff(v1) * q.diff(v2) - p.diff(v2) * q.diff(v1)


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> "UniPoly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_rat(r), 1])
        return p

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly._raw([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly._raw([c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) - 1 < db:
            return UniPoly([]), UniPoly(rem)
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lc
            quot[k] = c
            if c:
                for j, cb in enumerate(other.coeffs):
                    rem[k + j] -= c * cb
        return UniPoly._raw(quot), UniPoly._raw(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, value):
        """Horner evaluation; ``value`` may be any ring element supporting + and *."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return UniPoly._raw([c / lc for c in self.coeffs])

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly([])
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def primitive_integer(self) -> "UniPoly":
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return UniPoly._raw([Fraction(i // g) for i in ints])

    def to_mpoly(self, name: str, universe: Iterable[str] | None = None) -> MPoly:
        universe = tuple(universe) if universe is not None else (name,)
        i = universe.index(name)
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * len(universe)
                e[i] = k
                terms[tuple(e)] = c
        return MPoly._raw(universe, terms)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            parts.append(f"{format_rat(c)} * {mono}" if mono else format_rat(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly([{', '.join(format_rat(c) for c in self.coeffs)}])"


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def uni_xgcd(a: UniPoly, b: UniPoly):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1]), UniPoly([])
    t0, t1 = UniPoly([]), UniPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lc()
    return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)


def lagrange_interpolate(points: Sequence[tuple]) -> UniPoly:
    """Unique polynomial of degree < len(points) through the given (x, y) pairs."""
    xs = [as_rat(p[0]) for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = UniPoly([])
    for i, (xi, yi) in enumerate(points):
        basis = UniPoly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly([-xj, 1])
                denom *= xi - xj
        result = result + basis * (as_rat(yi) / denom)
    return result


def compose_uni_into(S: UniPoly, poly: MPoly) -> MPoly:
    """S(poly) as an MPoly in poly's universe."""
    acc = MPoly.const(0, poly.universe)
    for c in reversed(S.coeffs):
        acc = acc * poly + c
    return acc
