import random
from fractions import Fraction

import pytest

from pinchukmaps.avariety import W_at, param_asymptotic
from pinchukmaps.levelset import (
    LevelError, asymptotic_values, level_samples, level_zero_components, param_level, poles,
    q_on_level, sample_parameters,
)
from pinchukmaps.ratfn import QuadNum, rf_limit_at


def test_param_level_c3(core):
    lp = param_level(3, core)
    x, y = lp.point(Fraction(1, 2))
    assert core.image(x, y)[0] == 3
    assert core.h_at(x, y) == Fraction(1, 2)


@pytest.mark.parametrize("c", [0, -1])
def test_excluded_levels(c):
    with pytest.raises(LevelError):
        param_level(c)
    with pytest.raises(LevelError):
        poles(c)


def test_poles():
    assert [(p.location, p.kind) for p in poles(3)] == [(3, "divergent"), (1, "finite"), (-3, "finite")]
    assert [(p.location, p.kind) for p in poles(-2)] == [(-2, "divergent")]
    assert [(p.location, p.kind) for p in poles(8)] == [(8, "divergent"), (2, "finite"), (-4, "finite")]
    irr = poles(2)
    assert [p.kind for p in irr] == ["divergent", "finite", "finite"]
    assert irr[1].location == -1 + QuadNum.sqrt(3)


def test_limits_c3(core):
    qc = q_on_level(3, core)
    assert rf_limit_at(qc, Fraction(1)).value == Fraction(-4235, 4)
    # the value that makes W(3, .) vanish; confirmed by direct evaluation in test_ratfn
    assert rf_limit_at(qc, Fraction(-3)).value == Fraction(16821, 4)
    assert rf_limit_at(qc, Fraction(3)).is_pole


def test_asymptotic_values_c3(core):
    vals = dict(asymptotic_values(3, core))
    assert vals == {Fraction(1): Fraction(-4235, 4), Fraction(-3): Fraction(16821, 4)}
    assert len(set(vals.values())) == 2


def test_level_zero_boundary_from_curve():
    ap = param_asymptotic()
    values = sorted(ap.Q_of_s(s) for s in (Fraction(0), Fraction(-2)) if ap.P_of_s(s) == 0)
    assert values == [0, 208]


def test_random_levels_and_points(core):
    rng = random.Random(3)
    for _ in range(8):
        c = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
        if c in (0, -1):
            continue
        lp = param_level(c, core)
        for _ in range(3):
            h = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
            if h == c or c - 2 * h - h * h == 0:
                continue
            x, y = lp.point(h)
            assert core.P.eval({"x": x, "y": y}) == c
            assert core.h_at(x, y) == h


def test_asymptotic_values_on_curve(core):
    rng = random.Random(9)
    for _ in range(6):
        c = Fraction(rng.randint(-4, 40), rng.randint(1, 4))
        if not c > -1 or c == 0:
            continue
        for _, value in asymptotic_values(c, core):
            assert W_at(c, value) == 0


def test_level_zero():
    lz = level_zero_components()
    assert all(lz.report.values())
    assert lz.component_count == 5
    assert lz.t_curve.point(1) == (-1, -2)
    assert lz.t_curve.point(-1) == (1, 0)


def test_t_curve_images(core):
    assert core.image(-1, -2) == (0, -1)
    assert core.image(1, 0) == (0, -1)


def test_h_curve_q_positive(core):
    lz = level_zero_components(core)
    for h in (Fraction(-5), Fraction(-1, 3), Fraction(1, 7), Fraction(4)):
        x, y = lz.h_curve.point(h)
        Q = core.image(x, y)[1]
        assert Q == h ** 2 * (Fraction(197, 4) * h ** 2 + 104 * h + 63)
        assert Q > 0


def test_samples(core):
    params = sample_parameters(3, 6)
    assert len(params) == 6 and not {Fraction(3), Fraction(1), Fraction(-3)} & set(params)
    for h, x, y, Q in level_samples(3, 6, core):
        assert core.image(x, y) == (3, Q)
