import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from wirtlab.errors import AliasingError, WirtlabError
from wirtlab.spectral import (
    SampleGrid,
    TrigSeries,
    adaptive_trapezoid,
    analyze,
    derivative,
    differentiate_samples,
    inner,
    integral,
    l2_integral,
    project_mean_zero,
    quad_trapezoid,
    random_series,
    sample,
)

coef = st.floats(-3, 3, allow_nan=False)
series = st.builds(
    lambda m, a, b: TrigSeries(m, a, b),
    coef,
    st.lists(coef, max_size=6),
    st.lists(coef, max_size=6),
)


def test_parseval_matches_trapezoid_on_500_series():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(500):
        f = random_series(int(rng.integers(1, 9)), rng, zero_mean=False)
        for k in range(3):
            g = f.derivative(k)
            exact = l2_integral(g)
            # trapezoid on 4*deg+8 points is exact for squared trig polynomials
            q = quad_trapezoid(SampleGrid(g(np.linspace(0, 2 * np.pi, 4 * f.degree + 8, endpoint=False)) ** 2))
            worst = max(worst, abs(exact - q) / (1 + exact))
    assert worst < 1e-12


def test_l2_against_scipy_quad():
    f = TrigSeries(0.5, [1.0, -0.25], [0.0, 2.0])
    ref, _ = quad(lambda t: f(t) ** 2, 0, 2 * np.pi, epsabs=1e-13, epsrel=1e-13, limit=200)
    assert l2_integral(f) == pytest.approx(ref, rel=1e-12)


def test_known_values():
    assert l2_integral(TrigSeries(0, [0, 0, 1])) == pytest.approx(math.pi)
    assert l2_integral(TrigSeries(2.0)) == pytest.approx(8 * math.pi)
    assert integral(TrigSeries(3.0, [1.0])) == pytest.approx(6 * math.pi)
    # d/dt cos 3t = -3 sin 3t
    assert derivative(TrigSeries(0, [0, 0, 1]), 1) == TrigSeries(0, [], [0, 0, -3])


@given(series, st.integers(0, 5), st.integers(0, 5))
def test_derivative_composes(f, j, k):
    assert f.derivative(j).derivative(k).allclose(f.derivative(j + k), rtol=1e-12, atol=1e-9)


@given(series)
def test_fourth_derivative_scales_harmonics(f):
    g = f.derivative(4)
    n4 = np.arange(1, f.degree + 1) ** 4
    assert np.allclose(g.cos, f.cos * n4) and np.allclose(g.sin, f.sin * n4)


@given(series)
def test_integration_by_parts(f):
    # int f'^2 = -int f f''
    assert l2_integral(f.derivative(1)) == pytest.approx(-inner(f, f.derivative(2)), rel=1e-10, abs=1e-10)


@given(series, series)
@settings(max_examples=50)
def test_product_matches_pointwise(f, g):
    t = np.linspace(0, 2 * np.pi, 37)
    assert np.allclose((f * g)(t), f(t) * g(t), atol=1e-10)


@given(series, st.floats(-4, 4))
def test_shift(f, phi):
    t = np.linspace(0, 2 * np.pi, 19)
    assert np.allclose(f.shift(phi)(t), f(t + phi), atol=1e-10)
    assert l2_integral(f.shift(phi)) == pytest.approx(l2_integral(f), rel=1e-12, abs=1e-12)


@given(series)
def test_reflect(f):
    t = np.linspace(0, 2 * np.pi, 19)
    assert np.allclose(f.reflect()(t), f(-t), atol=1e-10)


@given(series)
def test_sample_analyze_roundtrip(f):
    n = 2 * f.degree + 3
    assert analyze(sample(f, n), f.degree).allclose(f, rtol=1e-12, atol=1e-12)


@given(series)
def test_dict_and_complex_roundtrip(f):
    assert TrigSeries.from_dict(f.to_dict()) == f
    assert TrigSeries.from_complex(f.to_complex()).allclose(f)


def test_aliasing_rejected():
    with pytest.raises(AliasingError):
        analyze(sample(TrigSeries(0, [1] * 4), 8), 4)


def test_from_dict_names_field():
    with pytest.raises(WirtlabError, match="cos"):
        TrigSeries.from_dict({"mean": 0, "cos": "x", "sin": []})
    with pytest.raises(WirtlabError, match="sin"):
        TrigSeries.from_dict({"mean": 0, "cos": [1], "sin": [float("nan")]})


def test_series_is_immutable():
    f = TrigSeries(0, [1.0])
    with pytest.raises(ValueError):
        f.cos[0] = 2.0


def test_trailing_zeros_trimmed():
    assert TrigSeries(1, [1, 0, 0], [0, 0]).degree == 1
    assert project_mean_zero(TrigSeries(4, [1])).mean == 0


def test_adaptive_trapezoid_converges_on_analytic():
    # int_0^{2pi} exp(cos t) dt = 2 pi I0(1)
    ref = 2 * math.pi * 1.2660658777520082
    q = adaptive_trapezoid(lambda t: np.exp(np.cos(t)))
    assert q.converged and q.value == pytest.approx(ref, rel=1e-13)


def test_adaptive_trapezoid_vector_valued():
    q = adaptive_trapezoid(lambda t: np.stack([np.cos(t) ** 2, 1 / (2 + np.cos(t))]))
    assert q.value[0] == pytest.approx(math.pi, rel=1e-13)
    assert q.value[1] == pytest.approx(2 * math.pi / math.sqrt(3), rel=1e-12)


def test_differentiate_samples_matches_series():
    f = random_series(7, np.random.default_rng(3))
    n = 64
    for k in (1, 2, 3):
        d = differentiate_samples(sample(f, n), k)
        assert np.allclose(d.values, f.derivative(k)(d.t), atol=1e-9)
