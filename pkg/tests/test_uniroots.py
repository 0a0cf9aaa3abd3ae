from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from pinchukmaps.qpoly import UniPoly
from pinchukmaps.uniroots import (
    AlgNum, alg_image, alg_sign_at, interval_eval, irreducible_mod_p, isolate_real_roots,
    real_roots, refine_root, squarefree_part, sturm_count,
)

T = UniPoly.x()
QUAD = Fraction(197, 4) * T ** 2 + 104 * T + 63


def same_up_to_scale(a, b):
    return a.monic() == b.monic()


def to_sympy(f):
    t = sympy.Symbol("t")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], t)


def test_squarefree_part():
    assert same_up_to_scale(squarefree_part(T ** 4 * QUAD), T * QUAD)
    assert same_up_to_scale(squarefree_part(T ** 2 - 2 * T + 1), T - 1)
    assert same_up_to_scale(squarefree_part(T ** 3 - T), T ** 3 - T)
    with pytest.raises(ValueError):
        squarefree_part(UniPoly([]))


def test_isolate_examples(R):
    assert isolate_real_roots(QUAD) == []
    (only,) = isolate_real_roots(R.specialize(0, 0))
    assert only.lo == only.hi == 0 and only.multiplicity == 4
    roots = isolate_real_roots(R.specialize(0, 208))
    assert len(roots) == 3
    assert (roots[0].lo, roots[0].hi, roots[0].multiplicity) == (-2, -2, 1)
    assert (roots[1].lo, roots[1].hi, roots[1].multiplicity) == (0, 0, 2)
    assert roots[2].lo > 0 and roots[2].multiplicity == 1
    # -2 really annihilates the quartic cofactor
    quartic = R.specialize(0, 208) // (T ** 2)
    assert quartic(-2) == 0
    with pytest.raises(ValueError):
        isolate_real_roots(UniPoly([]))


def test_refine():
    r2 = AlgNum(T ** 2 - 2, 1, 2)
    ref = refine_root(r2, Fraction(1, 1000))
    assert ref.hi - ref.lo <= Fraction(1, 1000)
    assert ref.lo < Fraction(141421, 100000) < ref.hi or ref.lo < Fraction(1414214, 1000000) < ref.hi
    assert ref.lo ** 2 < 2 < ref.hi ** 2
    exact = AlgNum.rational(3)
    assert refine_root(exact, Fraction(1, 10)).lo == refine_root(exact, Fraction(1, 10)).hi == 3


def test_refined_0_208_root_consistent(R):
    """On P = 0, R = R(0, 0, T) - Q T^2, so Q = R(0, 0, h)/h^2 at the root."""
    pos = real_roots(R.specialize(0, 208))[-1]
    pos = refine_root(pos, Fraction(1, 10 ** 12))
    assert pos.hi - pos.lo <= Fraction(1, 10 ** 12)
    base = R.specialize(0, 0)
    lo, hi = interval_eval(base, pos.lo, pos.hi)
    dlo, dhi = pos.lo ** 2, pos.hi ** 2
    qlo, qhi = lo / dhi, hi / dlo
    assert qlo <= 208 <= qhi and qhi - qlo < Fraction(1, 10 ** 8)
    assert abs(float(pos) - 0.986825690006) < 1e-11


def test_alg_sign_at():
    assert alg_sign_at(T, AlgNum.rational(-2)) == -1
    r2 = AlgNum(T ** 2 - 2, 1, 2)
    assert alg_sign_at(T ** 2 - 2, r2) == 0
    assert alg_sign_at((T ** 2 - 2) * (T + 7), r2) == 0
    assert alg_sign_at(T - Fraction(14142, 10000), r2) == 1
    assert alg_sign_at(T - Fraction(14143, 10000), r2) == -1


def test_irreducible_mod_p(R):
    assert irreducible_mod_p(T ** 2 + 1, 3)
    assert not irreducible_mod_p(T ** 2 - 1, 7)
    assert irreducible_mod_p(4 * R.specialize(1, -1), 23)
    with pytest.raises(ValueError):
        irreducible_mod_p(3 * T ** 2 + 1, 3)


def test_irreducible_mod_p_against_sympy():
    t = sympy.Symbol("t")
    for coeffs in ([1, 1, 0, 1], [2, 0, 1, 1, 1], [1, 0, 0, 0, 0, 1], [3, 1, 4, 1, 5, 9, 2]):
        f = UniPoly(coeffs)
        for p in (2, 3, 5, 7, 11, 13):
            if coeffs[-1] % p == 0:
                continue
            oracle = sympy.Poly(list(reversed(coeffs)), t, modulus=p).is_irreducible
            assert irreducible_mod_p(f, p) == oracle


def test_sturm_count(R):
    assert sturm_count(T ** 2 - 2, 0, 2) == 1
    assert sturm_count(T ** 2 - 2, 2, 3) == 0
    assert sturm_count(squarefree_part(R.specialize(0, 0)), -10, 10) == 1
    with pytest.raises(ValueError):
        sturm_count(T ** 2 - 4, 2, 3)


def test_irreducible_fixture_has_no_rational_roots(R):
    f = 4 * R.specialize(1, -1)
    roots = isolate_real_roots(f)
    assert len(roots) <= f.degree()
    assert all(not ri.is_exact for ri in roots)


def test_alg_image_sqrt2():
    r2 = AlgNum(T ** 2 - 2, 1, 2)
    v = alg_image(r2, T + 1, T - 1)           # (s+1)/(s-1) = 3 + 2 s
    assert v == AlgNum(T ** 2 - 6 * T + 1, 5, 6)
    assert alg_image(r2, T ** 2) == 2


int_coeffs = st.lists(st.integers(-9, 9), min_size=2, max_size=7)


@settings(max_examples=60, deadline=None)
@given(int_coeffs)
def test_grid_sign_changes(coeffs):
    f = UniPoly(coeffs)
    assume(f.degree() >= 1)
    g = squarefree_part(f)
    roots = isolate_real_roots(f)
    eps = Fraction(1, 10 ** 6)
    grid = []
    for ri in roots:
        grid += [ri.lo - eps, ri.hi + eps] if ri.is_exact else [ri.lo, ri.hi]
    grid = sorted(set(grid))
    changes = sum(1 for a, b in zip(grid, grid[1:]) if g(a) * g(b) < 0)
    assert changes == len(roots)
    assert len(roots) == len(sympy.real_roots(to_sympy(f), multiple=False))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4), st.lists(st.integers(-6, 6), min_size=2, max_size=4))
def test_product_roots_union(a, b):
    f, g = UniPoly(a), UniPoly(b)
    assume(f.degree() >= 1 and g.degree() >= 1)
    mult = {}
    for poly in (f, g):
        for r in real_roots(poly):
            ri = [x for x in isolate_real_roots(poly) if x.lo <= r.lo and r.hi <= x.hi or x.lo == x.hi == r.lo]
            key = next((k for k in mult if k == r), r)
            mult[key] = mult.get(key, 0) + ri[0].multiplicity
    prod = real_roots(f * g)
    prod_iv = isolate_real_roots(f * g)
    assert len(prod) == len(mult)
    for r, ri in zip(prod, prod_iv):
        key = next(k for k in mult if k == r)
        assert mult[key] == ri.multiplicity
