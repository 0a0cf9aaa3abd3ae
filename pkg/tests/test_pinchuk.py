import dataclasses
import random
from fractions import Fraction

import pytest
import sympy

from pinchukmaps.pinchuk import (
    XY, build_core, build_family, positivity_chain, recover_S, sample_levels,
    verify_jacobian_identity, verify_positivity,
)
from pinchukmaps.qpoly import MPoly, UniPoly

sx, sy = sympy.symbols("x y")


@pytest.fixture(scope="module")
def sympy_map():
    t = sx * sy - 1
    h = t * (sx * t + 1)
    f = (sx * t + 1) ** 2 * (t ** 2 + sy)
    q = -t ** 2 - 6 * t * h * (h + 1)
    u = 170 * f * h + 91 * h ** 2 + 195 * f * h ** 2 + 69 * h ** 3 + 75 * f * h ** 3 + sympy.Rational(75, 4) * h ** 4
    return sympy.Poly(sympy.expand(f + h), sx, sy), sympy.Poly(sympy.expand(q - u), sx, sy)


def as_sympy(p: MPoly):
    return sympy.Poly.from_dict({k: sympy.Rational(v.numerator, v.denominator) for k, v in p.terms.items()}, sx, sy)


def test_degrees(core):
    assert core.P.total_degree() == 10
    assert core.Q.total_degree() == 25


def test_against_expansion_oracle(core, sympy_map):
    P, Q = sympy_map
    assert as_sympy(core.P) == P
    assert as_sympy(core.Q) == Q


def test_value_at_1_1(core):
    assert core.image(1, 1) == (1, 0)
    assert core.h_at(1, 1) == 0


def test_jacobian_identity(core):
    assert verify_jacobian_identity(core)
    assert verify_jacobian_identity(build_family([0, 0, 0, 1]))
    x = MPoly.var("x", XY)
    assert not verify_jacobian_identity(dataclasses.replace(core, Q=core.Q + x))


def test_positivity(core):
    chain = positivity_chain()
    assert chain["inconsistent"] and chain["t_given_y0"] == "-1"
    assert verify_positivity(core)
    assert verify_positivity(build_family([1, 2, 3]))
    x, y = MPoly.gens(XY)
    assert not verify_positivity(dataclasses.replace(core, P=x, Q=x * y))


def test_family():
    assert build_family([]) is build_core()
    fam = build_family([Fraction(1, 2), -5, 0, 1])
    assert fam.Q.total_degree() == 30
    P = sympy.Poly(as_sympy(build_core().P).as_expr(), sx, sy)
    oracle = as_sympy(build_core().Q) + P ** 3 - 5 * P + sympy.Rational(1, 2)
    assert as_sympy(fam.Q) == oracle
    shifted = build_family([7])
    assert shifted.Q - build_core().Q == MPoly.const(7, XY)
    # fibers of F + (0, 7) are the fibers of F moved up by 7
    for pt in ((1, 1), (Fraction(1, 2), -3)):
        p, q = build_core().image(*pt)
        assert shifted.image(*pt) == (p, q + 7)


def test_recover_S(core):
    assert recover_S(core, core).is_zero()
    S = recover_S(core, build_family([Fraction(1, 2), -5, 0, 1]))
    assert S == UniPoly([Fraction(1, 2), -5, 0, 1])


def test_recover_S_random():
    rng = random.Random(7)
    for _ in range(5):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))]
        assert recover_S(build_core(), build_family(coeffs)) == UniPoly(coeffs)


def test_recover_S_sample_levels_avoid_poles():
    for c, h in sample_levels(6):
        assert c not in (0, -1)
        assert h != c and float(h) > -1 + float(1 + c) ** 0.5


def test_invariants_under_family():
    rng = random.Random(11)
    for _ in range(10):
        S = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(0, 5))]
        fam = build_family(S)
        fam.check_invariants()
        assert verify_jacobian_identity(fam)
        assert verify_positivity(fam)


def test_jacobian_positive_at_random_points(core):
    j = core.jacobian()
    rng = random.Random(2024)
    for _ in range(100):
        pt = {"x": Fraction(rng.randint(-50, 50), rng.randint(1, 20)),
              "y": Fraction(rng.randint(-50, 50), rng.randint(1, 20))}
        assert j.eval(pt) > 0
