import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wirtlab.convexgeom import (
    SupportFunction,
    lin_tsai_audit,
    random_convex,
    reconstruct_curve,
    reverse_isoperimetric_audit,
    support_geometry,
    support_points,
    thm32_audit,
)
from wirtlab.curvegeom import area, curvature, identity_checks, length
from wirtlab.errors import ConvexityError, OrderError
from wirtlab.spectral import SampleGrid, TrigSeries, differentiate_samples, grid, l2_integral, quad_trapezoid
from wirtlab.wirtinger import certificate

PI = math.pi
OVAL = SupportFunction(TrigSeries(1.0, [0, 0.2]))


def slack_oracle(sf, m):
    # odd and even bounds both reduce to a scaled order-m functional of h - mean
    h0 = TrigSeries(0.0, sf.h.cos, sf.h.sin)
    return 2 * PI / math.factorial(m) ** 2 * certificate(h0, m)


def test_disc():
    sf = SupportFunction(TrigSeries(2.5))
    L, A, rho = support_geometry(sf)
    assert L == pytest.approx(5 * PI) and A == pytest.approx(6.25 * PI)
    assert rho == TrigSeries(2.5)
    for m in range(1, 6):
        a = thm32_audit(sf, m)
        assert a.D == pytest.approx(0, abs=1e-12) and a.bound == pytest.approx(0, abs=1e-12)
        assert a.ok


def test_oval_geometry():
    L, A, rho = support_geometry(OVAL)
    assert L == pytest.approx(2 * PI, rel=1e-15)
    assert A == pytest.approx(0.94 * PI, rel=1e-15)
    assert rho.allclose(TrigSeries(1.0, [0, -0.6]))


def test_convexity_gate_reports_minimum():
    with pytest.raises(ConvexityError, match=r"-0\.2") as exc:
        SupportFunction(TrigSeries(1.0, [0, 0.4]))
    assert exc.value.gate == "convexity"


def test_oval_is_non_round_extremal():
    for m in range(2, 6):
        a = thm32_audit(OVAL, m)
        assert a.D == pytest.approx(0.24 * PI**2, rel=1e-12)
        assert a.report.verdict == "equality"
    lt = lin_tsai_audit(OVAL)
    assert abs(lt.lower_gap) < 1e-12 and abs(lt.upper) < 1e-12
    assert all(r.verdict == "equality" for r in lt.reports)
    rev = reverse_isoperimetric_audit(OVAL)
    assert rev.reports[0].verdict == "equality"
    assert PI / 6 * rev.rho_prime_sq == pytest.approx(0.24 * PI**2, rel=1e-12)


def test_high_harmonic_breaks_equality():
    sf = SupportFunction(TrigSeries(1.0, [0, 0, 0, 0.05]))
    a = thm32_audit(sf, 3)
    assert a.D > a.bound and a.report.verdict == "pass"


@pytest.mark.parametrize("m", range(1, 6))
def test_slack_matches_spectral_oracle(m):
    for seed in range(40):
        sf = random_convex(6, seed)
        a = thm32_audit(sf, m)
        assert a.slack == pytest.approx(slack_oracle(sf, m), rel=1e-9, abs=1e-3 * a.report.atol)  # 1e-12 of the scale


@pytest.mark.parametrize("m", range(1, 6))
def test_alternation_strict(m):
    for seed in range(30):
        sf = random_convex(6, 1000 + seed)
        a = thm32_audit(sf, m)
        if sf.degree > m:
            assert a.slack > a.report.atol
            assert (a.D > a.bound) if m % 2 else (a.D < a.bound)


def test_m1_is_isoperimetric():
    for seed in range(20):
        a = thm32_audit(random_convex(5, seed), 1)
        assert a.bound == 0.0 and a.slack == pytest.approx(a.D)


def test_m2_matches_lin_tsai():
    for seed in range(30):
        sf = random_convex(6, seed)
        a, lt = thm32_audit(sf, 2), lin_tsai_audit(sf)
        assert a.slack == pytest.approx(PI / 2 * lt.lower_gap, rel=1e-10, abs=1e-14)


def test_m3_matches_stability_gap():
    for seed in range(30):
        sf = random_convex(6, seed)
        a, lt = thm32_audit(sf, 3), lin_tsai_audit(sf)
        assert a.slack == pytest.approx(2 * PI / 3 * (lt.upper - lt.lower_gap), rel=1e-9, abs=1e-13)


@pytest.mark.parametrize("m", [0, 9])
def test_order_gate(m):
    with pytest.raises(OrderError):
        thm32_audit(OVAL, m)


@given(st.integers(1, 5), st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_band_limited_equality(m, seed):
    sf = random_convex(m, seed)
    a = thm32_audit(sf, m)
    assert abs(a.D - a.bound) <= 1e-9 * (1 + a.D)


def test_reverse_corpus_and_doubling():
    for seed in range(40):
        rev = reverse_isoperimetric_audit(random_convex(6, seed))
        assert rev.ok, [r for r in rev.reports if not r.ok]
        assert rev.doubling_delta <= 1e-9


def test_reverse_disc_all_zero():
    rev = reverse_isoperimetric_audit(SupportFunction(TrigSeries(3.0)))
    for r in rev.reports[:3]:
        assert abs(r.lhs) < 1e-12 and abs(r.rhs) < 1e-12
    # Gage is an equality for the disc
    assert rev.reports[-1].verdict == "equality"


def test_quadratures_against_dense_trapezoid():
    sf = random_convex(6, 3)
    rev = reverse_isoperimetric_audit(sf)
    t = grid(20000)
    r, dr = sf.rho(t), sf.rho.derivative(1)(t)
    assert rev.log_rho_prime_sq == pytest.approx(quad_trapezoid(SampleGrid((dr / r) ** 2)), rel=1e-12)
    assert rev.total_curv_sq == pytest.approx(quad_trapezoid(SampleGrid(1 / r)), rel=1e-12)


# -- reconstruction ------------------------------------------------------------


def test_reconstruct_disc():
    c = reconstruct_curve(SupportFunction(TrigSeries(2.0)))
    assert c.x.allclose(TrigSeries(0, [2.0])) and c.y.allclose(TrigSeries(0, [], [2.0]))


def test_first_harmonics_translate():
    c = reconstruct_curve(SupportFunction(TrigSeries(1.5, [0.3], [-0.7])))
    assert c.x.allclose(TrigSeries(0.3, [1.5])) and c.y.allclose(TrigSeries(-0.7, [], [1.5]))


def test_round_trip_corpus():
    for seed in range(40):
        sf = random_convex(6, seed)
        L, A, rho = support_geometry(sf)
        c = reconstruct_curve(sf)
        assert c.degree <= sf.degree + 1
        assert length(c) == pytest.approx(L, rel=1e-10)
        assert area(c) == pytest.approx(A, rel=1e-10)
        th = grid(97)
        assert curvature(c, th) == pytest.approx(1 / rho(th), rel=1e-10)
        assert all(i.ok for i in identity_checks(c))


@pytest.mark.parametrize("l", [1, 2, 3])
def test_change_of_variable(l):
    # left side from curve data only: rho = 1/kappa, d/ds = |X'|^-1 d/dt
    for seed in range(10):
        sf = random_convex(6, seed)
        c = reconstruct_curve(sf)
        t = grid(512)
        r, speed = 1 / curvature(c, t), c.speed(t)
        g = SampleGrid(r)
        for _ in range(l):
            g = SampleGrid(r / speed * differentiate_samples(g, 1).values)
        lhs = quad_trapezoid(SampleGrid(g.values**2 / r * speed))
        rhs = l2_integral(sf.rho.derivative(l))
        assert lhs == pytest.approx(rhs, rel=1e-8)


# -- corpus generator ------------------------------------------------------------


def test_random_convex_degree_zero():
    assert random_convex(0, 1).h == TrigSeries(1.0)


def test_random_convex_margin():
    sf = random_convex(2, 7, margin=0.5)
    assert float(np.min(sf.rho(grid(4096)))) >= 0.5 - 1e-12


def test_random_convex_corpus_is_convex_and_deterministic():
    for seed in range(500):
        sf = random_convex(6, seed)
        assert sf.rho_min > 0.3 - 1e-12
    assert random_convex(6, 42).h == random_convex(6, 42).h


def test_support_points_oval():
    header, rows = support_points(OVAL, 360)
    assert header[3] == "rho"
    assert rows[:, 3].min() == pytest.approx(0.4, abs=1e-12)
    _, closed = support_points(OVAL, 10, close=True)
    assert np.array_equal(closed[0], closed[-1])
