"""Exact real roots of univariate rational polynomials.

Real roots are isolated with Sturm sequences over the rationals and carried
around as :class:`AlgNum` values (square-free defining polynomial plus an
isolating interval).  Also provides Rabin's irreducibility test over GF(p),
used to certify that a specialization of the degree-six relation does not
factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Union

from .qpoly import UniPoly, as_rat, format_rat, uni_gcd, uni_xgcd

Number = Union[Fraction, "AlgNum"]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def squarefree_part(f: UniPoly) -> UniPoly:
    """f / gcd(f, f'): same distinct roots, all simple (monic)."""
    if f.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    if f.degree() == 0:
        return UniPoly([1])
    g = uni_gcd(f, f.derivative())
    return (f // g).monic()


def squarefree_decomposition(f: UniPoly) -> list:
    """Yun's algorithm: [(a_k, k)] with f = lc * prod a_k^k, a_k monic square-free coprime."""
    if f.is_zero():
        raise ValueError("decomposition of the zero polynomial")
    out = []
    f = f.monic()
    if f.degree() == 0:
        return out
    d = f.derivative()
    a = uni_gcd(f, d)
    b = f // a
    c = d // a
    k = 1
    while b.degree() > 0:
        dd = c - b.derivative()
        g = uni_gcd(b, dd)
        if g.degree() > 0:
            out.append((g, k))
        b = b // g
        c = dd // g
        k += 1
    return out


def _content_free(p: UniPoly) -> UniPoly:
    """Integer coefficients, scaled by a positive constant (signs preserved)."""
    q = p.primitive_integer()
    return q if _sign(p.lc()) == _sign(q.lc()) else -q


def sturm_sequence(f: UniPoly) -> list:
    """Sturm chain of f, each member rescaled by a positive constant."""
    if f.is_zero():
        return []
    seq = [_content_free(f)]
    d = f.derivative()
    if not d.is_zero():
        seq.append(_content_free(d))
    while len(seq) > 1:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(_content_free(-r))
    return seq


def _variations(seq: list, x) -> int:
    signs = [s for s in (_sign(p(x)) for p in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _variations_at_infinity(seq: list, positive: bool) -> int:
    signs = []
    for p in seq:
        s = _sign(p.lc())
        if not positive and p.degree() % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(f: UniPoly, a, b) -> int:
    """Distinct real roots of f strictly inside (a, b)."""
    a, b = as_rat(a), as_rat(b)
    if not a < b:
        raise ValueError("sturm_count needs a < b")
    g = squarefree_part(f)
    if g(a) == 0 or g(b) == 0:
        raise ValueError("interval endpoint is a root; perturb the endpoint")
    seq = sturm_sequence(g)
    return _variations(seq, a) - _variations(seq, b)


def _count_open(g: UniPoly, seq: list, lo: Fraction, hi: Fraction) -> int:
    """Roots of square-free g in (lo, hi); endpoints may be roots."""
    if g(lo) == 0 or g(hi) == 0:
        h = g
        for e in (lo, hi):
            if h(e) == 0:
                h = h // UniPoly([-e, 1])
        if h.degree() < 1:
            return 0
        return _count_open(h, sturm_sequence(h), lo, hi)
    return _variations(seq, lo) - _variations(seq, hi)


def cauchy_bound(f: UniPoly) -> Fraction:
    lc = f.lc()
    return 1 + max((abs(c / lc) for c in f.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi


class AlgNum:
    """A real algebraic number: square-free defining polynomial and isolating interval.

    Either ``lo == hi`` (the number is that rational) or the defining
    polynomial has exactly one root in the open interval ``(lo, hi)`` and
    nonzero values of opposite sign at both endpoints.
    """

    __slots__ = ("defpoly", "lo", "hi")

    def __init__(self, defpoly: UniPoly, lo, hi):
        self.defpoly = defpoly
        self.lo = as_rat(lo)
        self.hi = as_rat(hi)

    @classmethod
    def rational(cls, value) -> "AlgNum":
        v = as_rat(value)
        return cls(UniPoly([-v, 1]), v, v)

    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.lo

    def simplify(self) -> Number:
        return self.lo if self.is_rational() else self

    def bisect(self) -> "AlgNum":
        if self.is_rational():
            return self
        f, lo, hi = self.defpoly, self.lo, self.hi
        mid = (lo + hi) / 2
        sm = _sign(f(mid))
        if sm == 0:
            return AlgNum(UniPoly([-mid, 1]), mid, mid)
        if sm == _sign(f(lo)):
            return AlgNum(f, mid, hi)
        return AlgNum(f, lo, mid)

    def refine(self, width) -> "AlgNum":
        width = as_rat(width)
        if width <= 0:
            raise ValueError("width must be positive")
        if self.is_rational() or self.hi - self.lo <= width:
            return self
        lo, hi = _shrink(self.defpoly, self.lo, self.hi, width)
        if lo == hi:
            return AlgNum(UniPoly([-lo, 1]), lo, lo)
        return AlgNum(self.defpoly, lo, hi)

    def sign(self) -> int:
        return alg_sign_at(UniPoly([0, 1]), self)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            if self.is_rational():
                return self.lo == other
            return self.lo < other < self.hi and self.defpoly(other) == 0
        if not isinstance(other, AlgNum):
            return NotImplemented
        if self.is_rational():
            return other == self.lo
        if other.is_rational():
            return self == other.lo
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo >= hi:
            return False
        g = uni_gcd(self.defpoly, other.defpoly)
        if g.degree() < 1:
            return False
        return _count_open(g, sturm_sequence(g), lo, hi) > 0

    def __hash__(self):
        return hash(self.lo) if self.is_rational() else hash(self.defpoly.monic())

    def compare(self, other) -> int:
        """-1, 0 or +1 as self is below, equal to or above other."""
        if self == other:
            return 0
        a = self
        b = other if isinstance(other, AlgNum) else AlgNum.rational(other)
        while True:
            if a.hi < b.lo or (a.hi == b.lo and not (a.is_rational() and b.is_rational())):
                return -1
            if b.hi < a.lo or (b.hi == a.lo and not (a.is_rational() and b.is_rational())):
                return 1
            a, b = a.bisect(), b.bisect()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __float__(self):
        r = self.refine(Fraction(1, 10 ** 20) * max(1, abs(self.lo), abs(self.hi)))
        return float((r.lo + r.hi) / 2)

    def to_decimal(self, digits: int = 12) -> str:
        if self.is_rational():
            from .ratfn import format_decimal
            return format_decimal(self.lo, digits)
        scale = max(Fraction(1), abs(self.lo), abs(self.hi))
        r = self.refine(scale / 10 ** (digits + 6))
        if r.is_rational():
            return r.to_decimal(digits)
        mid = (r.lo + r.hi) / 2
        with localcontext() as ctx:
            ctx.prec = digits + 20
            val = Decimal(mid.numerator) / Decimal(mid.denominator)
        return format(val, f".{digits}g")

    def __str__(self):
        if self.is_rational():
            return format_rat(self.lo)
        return f"root of {self.defpoly} in ({format_rat(self.lo)}, {format_rat(self.hi)})"

    def __repr__(self):
        return f"AlgNum({self})"


def _isolate_squarefree(g: UniPoly) -> list:
    """Sorted (lo, hi) pairs isolating the real roots of square-free g.

    Exact rational roots come back as (r, r); other intervals have
    non-root endpoints.
    """
    if g.degree() < 1:
        return []
    seq = sturm_sequence(g)
    B = cauchy_bound(g)
    found = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = _count_open(g, seq, lo, hi)
        if n == 0:
            continue
        if n == 1 and g(lo) != 0 and g(hi) != 0:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if g(mid) == 0:
            found.append((mid, mid))
        stack.append((lo, mid))
        stack.append((mid, hi))
    found.sort()
    return found


def _shrink(g: UniPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple:
    """Narrow an isolating interval of square-free g to at most ``width``.

    Newton steps from the midpoint, rounded to a dyadic grid and accepted
    only when a sign change confirms the root, so convergence is quadratic
    near the root; bisection takes over whenever a step is rejected.
    Returns (r, r) if an exact rational root turns up on the way.
    """
    dg = g.derivative()
    s_lo = _sign(g(lo))
    n = 4
    while hi - lo > width:
        mid = (lo + hi) / 2
        d = dg(mid)
        if d != 0:
            x = mid - g(mid) / d
            eps = (hi - lo) / n
            k = max(0, eps.denominator.bit_length() - eps.numerator.bit_length() + 3)
            x = Fraction(round(x * 2 ** k), 2 ** k)
            a, b = max(lo, x - eps), min(hi, x + eps)
            if lo < x < hi and b - a < hi - lo:
                sa, sb = _sign(g(a)), _sign(g(b))
                if sa == 0:
                    return a, a
                if sb == 0:
                    return b, b
                if sa != sb:
                    lo, hi = a, b
                    n = min(n * n, 2 ** 64)
                    continue
        sm = _sign(g(mid))
        if sm == 0:
            return mid, mid
        if sm == s_lo:
            lo = mid
        else:
            hi = mid
        n = max(4, math.isqrt(n))
    return lo, hi


def _detect_rational(g: UniPoly, lo: Fraction, hi: Fraction) -> tuple:
    """Shrink an isolating interval until a rational root would be visible; test it.

    A rational root of a primitive integer polynomial times its leading
    coefficient is an integer, so an interval narrower than 1/|lc| holds at
    most one candidate.
    """
    L = abs(g.primitive_integer().lc())
    r = AlgNum(g, lo, hi).refine(Fraction(1, 2 * L))
    if r.is_rational():
        return r.lo, r.lo
    k = math.ceil(r.lo * L)
    if k <= r.hi * L:
        cand = Fraction(k, L)
        if r.lo < cand < r.hi and g(cand) == 0:
            return cand, cand
    return lo, hi


def isolate_real_roots(f: UniPoly) -> list:
    """One RootInterval per distinct real root, ascending, with multiplicities."""
    if f.is_zero():
        raise ValueError("root isolation of the zero polynomial")
    g = squarefree_part(f)
    if g.degree() >= 1:
        g = g.primitive_integer()
    parts = squarefree_decomposition(f)
    out = []
    for lo, hi in _isolate_squarefree(g):
        if lo != hi:
            lo, hi = _detect_rational(g, lo, hi)
        mult = 0
        for factor, k in parts:
            if lo == hi:
                hit = factor(lo) == 0
            else:
                hit = _count_open(factor, sturm_sequence(factor), lo, hi) > 0
            if hit:
                mult = k
                break
        out.append(RootInterval(lo, hi, mult))
    return out


def real_roots(f: UniPoly) -> list:
    """Distinct real roots of f as AlgNums, ascending."""
    g = squarefree_part(f).primitive_integer()
    roots = []
    for ri in isolate_real_roots(f):
        if ri.is_exact:
            roots.append(AlgNum.rational(ri.lo))
        else:
            roots.append(AlgNum(g, ri.lo, ri.hi))
    return roots


def refine_root(r: AlgNum, width) -> AlgNum:
    return r.refine(width)


def interval_eval(p: UniPoly, lo: Fraction, hi: Fraction) -> tuple:
    """Enclosure of p over [lo, hi] by interval Horner evaluation."""
    acc_lo = acc_hi = Fraction(0)
    for c in reversed(p.coeffs):
        prods = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(prods) + c, max(prods) + c
    return acc_lo, acc_hi


def alg_sign_at(g: UniPoly, r) -> int:
    """Exact sign of g at a real algebraic (or rational) number."""
    if not isinstance(r, AlgNum):
        return _sign(g(as_rat(r)))
    if r.is_rational():
        return _sign(g(r.lo))
    if g.is_zero():
        return 0
    common = uni_gcd(g, r.defpoly)
    if common.degree() >= 1 and common(r.lo) * common(r.hi) < 0:
        return 0
    while True:
        lo, hi = interval_eval(g, r.lo, r.hi)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        r = r.bisect()
        if r.is_rational():
            return _sign(g(r.lo))


def _charpoly(matrix: list) -> UniPoly:
    """det(X*I - A) by the Faddeev-LeVerrier recurrence."""
    n = len(matrix)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A M + c_{n-k+1} I
        AM = [[sum(matrix[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += coeffs[n - k + 1]
        M = AM
        AM2_trace = sum(sum(matrix[i][l] * M[l][i] for l in range(n)) for i in range(n))
        coeffs[n - k] = -AM2_trace / k
    return UniPoly(coeffs)


def alg_image(r, num: UniPoly, den: UniPoly | None = None) -> Number:
    """The real number num(r)/den(r), exactly, as a Fraction or AlgNum.

    Its defining polynomial is the characteristic polynomial of
    multiplication by num/den in Q[T]/(defpoly); the right root is picked
    out by interval evaluation on ever finer enclosures of r.
    """
    den = den if den is not None else UniPoly([1])
    if not isinstance(r, AlgNum) or r.is_rational():
        v = r.lo if isinstance(r, AlgNum) else as_rat(r)
        d = den(v)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return num(v) / d
    if alg_sign_at(den, r) == 0:
        raise ZeroDivisionError("denominator vanishes at the algebraic number")
    f = r.defpoly.monic()
    common = uni_gcd(f, den)
    if common.degree() >= 1:
        f = f // common
    r = AlgNum(f, r.lo, r.hi)
    g, s, _ = uni_xgcd(den % f, f)
    if g.degree() != 0:
        raise ArithmeticError("denominator not invertible modulo the defining polynomial")
    elt = (num * s) % f
    if elt.degree() < 1:
        return elt[0]
    n = f.degree()
    cols = []
    power = UniPoly([1])
    for _ in range(n):
        col = (elt * power) % f
        cols.append([col[i] for i in range(n)])
        power = power * UniPoly([0, 1])
    matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
    cp = _charpoly(matrix)
    candidates = real_roots(cp)
    while True:
        lo, hi = interval_eval(elt, r.lo, r.hi)
        hits = [c for c in candidates if not (c.hi < lo or c.lo > hi)]
        if len(hits) == 1:
            return hits[0].simplify()
        if r.is_rational():
            return elt(r.lo)
        r = r.bisect()
        candidates = [c.bisect() for c in candidates]


# arithmetic over GF(p), coefficient lists lowest degree first


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pmod(a: list, f: list, p: int) -> list:
    a = list(a)
    df = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for j, y in enumerate(f):
            a[shift + j] = (a[shift + j] - c * y) % p
        _trim(a)
    return a


def _pgcd(a: list, b: list, p: int) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _ppowmod(base: list, e: int, f: list, p: int) -> list:
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), f, p)
    return result


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _prime_factors(n: int) -> list:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def irreducible_mod_p(f, p: int) -> bool:
    """Rabin's test: is f mod p irreducible over GF(p)?

    ``f`` is a UniPoly with integer coefficients or a list of ints, lowest
    degree first.
    """
    coeffs = list(f.coeffs) if isinstance(f, UniPoly) else [as_rat(c) for c in f]
    if any(Fraction(c).denominator != 1 for c in coeffs):
        raise ValueError("irreducible_mod_p needs integer coefficients")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    ints = [int(c) % p for c in coeffs]
    _trim(ints)
    if not coeffs or int(coeffs[-1]) % p == 0:
        raise ValueError("p divides the leading coefficient")
    n = len(ints) - 1
    if n < 1:
        return False
    inv = pow(ints[-1], -1, p)
    fm = [c * inv % p for c in ints]
    x = [0, 1]

    def frobenius_power(k: int) -> list:
        h = x
        for _ in range(k):
            h = _ppowmod(h, p, fm, p)
        return h

    full = frobenius_power(n)
    if _trim([(a - b) % p for a, b in _zip_pad(full, x)]):
        return False
    for ell in _prime_factors(n):
        h = frobenius_power(n // ell)
        diff = _trim([(a - b) % p for a, b in _zip_pad(h, x)])
        g = _pgcd(diff, fm, p)
        if len(g) != 1:
            return False
    return True


def _zip_pad(a: list, b: list) -> Iterable:
    n = max(len(a), len(b))
    return ((a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n))


def primes_below(n: int) -> list:
    return [k for k in range(2, n) if _is_prime(k)]
