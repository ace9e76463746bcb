import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad
from scipy.special import ellipe

from wirtlab.curvegeom import (
    PlaneCurve,
    area,
    centroid,
    circle,
    curvature,
    curve_audit,
    curve_points,
    ellipse,
    identity_checks,
    length,
    perturbed_circle,
    simplicity_check,
    thm31a_audit,
    thm31b_audit,
)
from wirtlab.errors import NonSimpleCurveError, RegularityError, WirtlabError
from wirtlab.spectral import TrigSeries

PI = math.pi
ELLIPSE_L = 8 * ellipe(0.75)  # perimeter of semi-axes 2, 1: 4a E(1 - b^2/a^2)


def figure_eight():
    return PlaneCurve(TrigSeries(0, [], [0, 1]), TrigSeries(0, [], [1]))


def test_ellipse_length_against_elliptic_integral():
    assert ELLIPSE_L == pytest.approx(9.688448220547677, rel=1e-14)
    L = length(ellipse(2, 1))
    assert L == pytest.approx(ELLIPSE_L, rel=1e-12)
    ref, _ = quad(lambda t: math.hypot(2 * math.sin(t), math.cos(t)), 0, 2 * PI, epsabs=1e-13, epsrel=1e-13, limit=200)
    assert L == pytest.approx(ref, rel=1e-12)


def test_ellipse_area_and_deficit():
    c = ellipse(2, 1)
    assert area(c) == pytest.approx(2 * PI, rel=1e-15)
    a = curve_audit(c)
    assert a.D == pytest.approx(ELLIPSE_L**2 - 8 * PI**2, rel=1e-12)
    assert round(a.D, 3) == 14.909


def test_ellipse_curvature_at_vertices():
    k = curvature(ellipse(2, 1), np.array([0.0, PI / 2]))
    assert k == pytest.approx([2.0, 0.25], rel=1e-14)


def test_ellipse_chains():
    a = thm31a_audit(ellipse(2, 1))
    b = thm31b_audit(ellipse(2, 1))
    assert a.ok and b.ok
    assert 0 < a.D - a.T1 < a.T2
    assert 0 < a.sachs_gap < a.reverse_sachs_rhs


@pytest.mark.parametrize("R,c", [(1.0, (0, 0)), (0.1, (3, -2)), (10.0, (-5, 7))])
def test_circle_is_extremal(R, c):
    a = curve_audit(circle(R, c))
    assert a.L == pytest.approx(2 * PI * R, rel=1e-14)
    assert a.G == pytest.approx(c, abs=1e-12 * (R + 10))
    tol = 1e-9 * a.L**2
    for v in (a.D, a.T1, a.T2, a.sachs_gap, a.reverse_sachs_rhs):
        assert abs(v) <= tol


def test_centroid_uses_arclength_measure():
    # oracle: speed-weighted mean of the samples, not the plain parameter mean
    rng = np.random.default_rng(0)
    c = perturbed_circle(rng, 4, 0.2).translate(1.5, -0.5)
    gx, gy = centroid(c)
    n = 4096
    t = 2 * PI * np.arange(n) / n
    x, y = c.point(t)
    w = c.speed(t)
    assert gx == pytest.approx(np.sum(x * w) / np.sum(w), rel=1e-12)
    assert gy == pytest.approx(np.sum(y * w) / np.sum(w), rel=1e-12)


def test_orientation_normalized():
    cw = PlaneCurve(TrigSeries(0, [2.0]), TrigSeries(0, [], [-1.0]))
    assert cw.orientation == -1
    assert cw.signed_area() == pytest.approx(2 * PI)
    assert curve_audit(cw).D == pytest.approx(curve_audit(ellipse(2, 1)).D, rel=1e-12)


def test_cross_identities():
    # D - T1 = (2pi^2/L) gap ; T1 + T2 - D = (2pi^2/L)(4/3)(rhs - gap)
    rng = np.random.default_rng(4)
    for _ in range(10):
        a = curve_audit(perturbed_circle(rng, 5, 0.3))
        k = 2 * PI**2 / a.L
        s = a.L**2
        assert abs((a.D - a.T1) - k * a.sachs_gap) <= 1e-10 * s
        assert abs((a.T1 + a.T2 - a.D) - k * 4 / 3 * (a.reverse_sachs_rhs - a.sachs_gap)) <= 1e-10 * s


def test_identity_checks_on_perturbed_circles():
    rng = np.random.default_rng(8)
    for _ in range(40):
        c = perturbed_circle(rng, int(rng.integers(2, 8)), 0.3)
        assert all(i.ok for i in identity_checks(c))


@settings(max_examples=25, deadline=None)
@given(
    st.integers(0, 2**32 - 1),
    st.floats(-PI, PI),
    st.floats(-5, 5),
    st.floats(-5, 5),
    st.floats(0.2, 5),
    st.floats(0, 2 * PI),
)
def test_invariances(seed, angle, dx, dy, s, phi):
    c = perturbed_circle(np.random.default_rng(seed), 4, 0.3)
    a = curve_audit(c)
    moved = curve_audit(c.rotate(angle).translate(dx, dy).shift(phi))
    for k in ("L", "A", "D", "T1", "T2", "sachs_gap", "reverse_sachs_rhs"):
        assert getattr(moved, k) == pytest.approx(getattr(a, k), rel=1e-9, abs=1e-9 * a.L**3)
    big = curve_audit(c.scale(s))
    assert big.L == pytest.approx(s * a.L, rel=1e-10)
    assert big.D == pytest.approx(s * s * a.D, rel=1e-9, abs=1e-12 * big.L**2)
    assert big.T1 == pytest.approx(s * s * a.T1, rel=1e-9, abs=1e-12 * big.L**2)
    assert big.sachs_gap == pytest.approx(s**3 * a.sachs_gap, rel=1e-9, abs=1e-12 * big.L**3)


def test_perturbed_circles_pass_both_chains():
    rng = np.random.default_rng(21)
    for _ in range(30):
        a = curve_audit(perturbed_circle(rng, int(rng.integers(2, 9)), 0.35))
        assert a.converged
        assert all(r.ok for r in a.chain_a() + a.chain_b())


def test_figure_eight_gated():
    c = figure_eight()
    assert c.orientation == 0
    assert not simplicity_check(c)
    with pytest.raises(NonSimpleCurveError) as exc:
        thm31a_audit(c)
    assert exc.value.gate == "simplicity check"
    assert "simplicity check failed" in str(exc.value)


def test_ellipse_is_simple():
    assert simplicity_check(ellipse(2, 1))
    assert simplicity_check(ellipse(50, 0.01))


def test_singular_curve_rejected():
    with pytest.raises(RegularityError):
        PlaneCurve(TrigSeries(0, [1.0]), TrigSeries(0, [1.0]))  # segment traversed back and forth


def test_from_dict_errors():
    with pytest.raises(WirtlabError, match="keys"):
        PlaneCurve.from_dict({"x": {}})
    with pytest.raises(WirtlabError, match=r"y\.cos"):
        PlaneCurve.from_dict({"x": {"cos": [1]}, "y": {"cos": ["a"]}})


def test_curve_points():
    header, rows = curve_points(circle(), 4)
    assert header == ["t", "x", "y", "kappa", "speed"]
    assert rows[:, 1:3] == pytest.approx(np.array([[1, 0], [0, 1], [-1, 0], [0, -1]]), abs=1e-15)
    assert np.allclose(rows[:, 3], 1.0)
    _, closed = curve_points(ellipse(2, 1), 100, close=True)
    assert len(closed) == 101 and np.array_equal(closed[0], closed[-1])
