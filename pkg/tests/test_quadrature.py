import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from kerrpulse.errors import QuadratureError
from kerrpulse.quadrature import (QuadratureSpec, integrate_1d, integrate_1d_complex,
                                  integrate_2d_complex)


def test_exponential_tail():
    val, err = integrate_1d(lambda x: math.exp(-x), 0.0, math.inf)
    assert val == pytest.approx(1.0, abs=1e-12)
    assert err <= 1e-10


def test_faster_exponential():
    assert integrate_1d(lambda x: math.exp(-2 * x), 0.0, math.inf)[0] == pytest.approx(0.5, abs=1e-12)


def test_cosine_transform_of_g_shape():
    # (1+|x|) e^{-|x|} transforms to 4 L^2, which is 1 at Omega = 1
    f = lambda x: (1 + abs(x)) * math.exp(-abs(x)) * math.cos(x)
    val, _ = integrate_1d(f, -math.inf, math.inf, points=(0.0,))
    assert val == pytest.approx(1.0, abs=1e-10)


def test_reported_bound_covers_error():
    val, err = integrate_1d(lambda x: x * x, 0.0, 3.0)
    assert abs(val - 9.0) <= max(err, 1e-14)


def test_nonconvergence_carries_estimate():
    spec = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-14, max_subdivisions=1)
    with pytest.raises(QuadratureError) as info:
        integrate_1d(lambda x: math.sin(50 * x) * math.exp(-x), 0.0, 20.0, spec)
    assert info.value.value is not None
    assert info.value.error_bound > 0


@pytest.mark.parametrize("kwargs", [dict(abs_tol=0), dict(rel_tol=-1), dict(max_subdivisions=0),
                                    dict(truncation_radius=-1.0)])
def test_spec_validation(kwargs):
    with pytest.raises(ValueError):
        QuadratureSpec(**kwargs)


@given(st.floats(1e-14, 1e-4), st.floats(0.5, 4.0))
def test_radius_keeps_tail_below_hundredth_of_tolerance(tol, decay):
    spec = QuadratureSpec(abs_tol=tol)
    assert math.exp(-decay * spec.radius(decay)) <= tol / 100 * (1 + 1e-9)


def test_explicit_radius_wins():
    assert QuadratureSpec(truncation_radius=5.0).radius(3.0) == 5.0


def test_scaled():
    s = QuadratureSpec(1e-8, 1e-6).scaled(10)
    assert (s.abs_tol, s.rel_tol) == pytest.approx((1e-7, 1e-5))


@given(st.lists(st.floats(-3, 3), min_size=1, max_size=5), st.floats(-2, 0), st.floats(0.1, 2))
def test_polynomials_exact(coeffs, a, width):
    b = a + width
    poly = np.polynomial.Polynomial(coeffs)
    exact = poly.integ()(b) - poly.integ()(a)
    assert integrate_1d(poly, a, b)[0] == pytest.approx(exact, abs=1e-10)


def test_complex_integrand():
    val, _ = integrate_1d_complex(lambda x: np.exp(1j * x), 0.0, math.pi)
    assert val == pytest.approx(2j, abs=1e-12)


def test_gaussian_2d():
    val, _ = integrate_2d_complex(lambda x, y: math.exp(-x * x - y * y) + 0j, -6, 6,
                                  QuadratureSpec(1e-10, 1e-10))
    assert val.real == pytest.approx(math.pi, rel=1e-9)
    assert abs(val.imag) < 1e-14


def test_ridge_breakpoint():
    f = lambda x, y: math.exp(-abs(x - y) * 20 - x * x) + 0j
    plain = integrate_2d_complex(f, -5, 5, QuadratureSpec(1e-9, 1e-9), ridge=True)[0]
    # int e^{-x^2} dx * int e^{-20|u|} du
    assert plain.real == pytest.approx(math.sqrt(math.pi) * 0.1, rel=1e-7)
