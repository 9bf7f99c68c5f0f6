import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, optimize

from kerrpulse import quadspec as qs
from kerrpulse.errors import RegimeError
from kerrpulse.kernel import lorentzian
from kerrpulse.oracle import numeric_ft
from kerrpulse.pulse import ConstantPhase, GaussianEnvelope, KerrParams, OptimalPhase

ENV = GaussianEnvelope(1.0)
psis = st.floats(0, 20)
omegas = st.floats(0, 20)
phases = st.floats(-2 * math.pi, 2 * math.pi)


# -- means --------------------------------------------------------------------

def test_means_linear_medium():
    p = KerrParams(0.0, 9.0, tau_r=0.1)
    m = qs.quadrature_means(p, ENV, p.kernel(), ConstantPhase(0.0), 0.0)
    assert (m.x_mean, m.y_mean) == pytest.approx((3.0, 0.0))


def test_means_pure_rotation():
    x, y = qs.mean_quadratures(1.0, math.pi / 2, 0.0)
    assert (x, y) == pytest.approx((0.0, 1.0), abs=1e-15)


def test_means_with_decay():
    p = KerrParams(0.04, 12.5, tau_r=0.1)   # psi0 = 1, mu0 = 0.02
    m = qs.quadrature_means(p, ENV, p.kernel(), ConstantPhase(0.0), 0.0)
    amp = math.sqrt(12.5) * math.exp(-0.01)
    assert (m.x_mean, m.y_mean) == pytest.approx((amp * math.cos(1), amp * math.sin(1)), rel=1e-12)
    assert m.big_phi == pytest.approx(1.0)


@given(t=st.floats(-2, 2), phi=phases, n=st.floats(0, 1e4))
def test_means_modulus(t, phi, n):
    p = KerrParams(1e-3, n, tau_r=0.1)
    m = qs.quadrature_means(p, ENV, p.kernel(), ConstantPhase(phi), t)
    mu = 0.5 * p.mu0 * ENV.rho2(t)
    assert m.x_mean**2 + m.y_mean**2 == pytest.approx(n * ENV.rho2(t) * math.exp(-2 * mu),
                                                      rel=1e-12, abs=1e-300)


# -- correlations -------------------------------------------------------------

def test_corr_vanishes_for_coherent_state():
    p = KerrParams(1e-3, 0.0, tau_r=0.1)
    c = qs.corr_rx_ry(p, ENV, p.kernel(), ConstantPhase(0.3), 0.2, np.linspace(-0.5, 0.5, 11))
    assert np.all(c.rx == 0) and np.all(c.ry == 0)
    assert c.delta_weight == 0.25


def test_corr_zero_total_phase():
    # phi = -psi(t) with the envelope frozen makes Phi = 0 at both times
    p = KerrParams.from_phase(1.0)
    tau = np.linspace(-0.3, 0.3, 13)
    c = qs.corr_rx_ry(p, ENV, p.kernel(), ConstantPhase(-1.0), 0.0, tau, frozen_envelope=True)
    assert np.max(np.abs(c.rx)) < 1e-15
    assert np.all(c.ry > 0)


def test_corr_requires_slow_regime():
    p = KerrParams.from_phase(1.0, nu=0.5)
    with pytest.raises(RegimeError):
        qs.corr_rx_ry(p, ENV, p.kernel(), ConstantPhase(0.0), 0.0, 0.1)


def test_corr_matches_inverse_transform_of_spectrum():
    # R_X(tau_r) smooth part equals (1/pi) int_0^inf (S_X - 1/4) cos(Omega) dOmega / tau_r
    p = KerrParams.from_phase(1.0, nu=10)
    phase = ConstantPhase(0.0)
    big_phi = 1.0
    f = lambda w: float(qs.spectrum_from_phase(1.0, big_phi, w)[0]) - 0.25
    inv = integrate.quad(f, 0, np.inf, weight="cos", wvar=1.0)[0] / math.pi
    c = qs.corr_rx_ry(p, ENV, p.kernel(), phase, 0.0, p.tau_r, frozen_envelope=True)
    assert float(c.rx) * p.tau_r == pytest.approx(inv, abs=1e-4)


@pytest.mark.parametrize("psi0,w0", [(0.5, 0.0), (1.0, 0.0), (2.0, 1.0)])
def test_fourier_round_trip_frozen(psi0, w0):
    p = KerrParams.from_phase(psi0, nu=10)
    k = p.kernel()
    ph = OptimalPhase(w0)
    w = np.array([0.0, 0.3, 1.0, 4.0])
    fx = lambda th: qs.corr_rx_ry(p, ENV, k, ph, 0.0, th * p.tau_r, True).rx * p.tau_r
    fy = lambda th: qs.corr_rx_ry(p, ENV, k, ph, 0.0, th * p.tau_r, True).ry * p.tau_r
    s_x, s_y = qs.spectrum(p, ENV, k, ph, 0.0, w)
    np.testing.assert_allclose(numeric_ft(fx, w, delta_weight=0.25).value, s_x, atol=1e-4)
    np.testing.assert_allclose(numeric_ft(fy, w, delta_weight=0.25).value, s_y, atol=1e-4)


def _full_envelope_gap(nu):
    p = KerrParams.from_phase(1.0, nu=nu)
    k = p.kernel()
    ph = OptimalPhase(0.0)
    w = np.array([0.0, 0.5, 1.0, 2.0])
    fx = lambda th: qs.corr_rx_ry(p, ENV, k, ph, 0.0, th * p.tau_r).rx * p.tau_r
    return float(np.max(np.abs(numeric_ft(fx, w, delta_weight=0.25).value
                               - qs.spectrum(p, ENV, k, ph, 0.0, w)[0])))


def test_full_envelope_gap_shrinks_like_inverse_square():
    g10, g100 = _full_envelope_gap(10.0), _full_envelope_gap(100.0)
    assert g100 < 1e-4
    assert math.log10(g10 / g100) == pytest.approx(2.0, abs=0.1)


# -- spectra ------------------------------------------------------------------

def test_spectrum_examples():
    assert qs.spectrum_from_phase(0.0, 0.7, 2.0) == pytest.approx((0.25, 0.25))
    s_x, _ = qs.spectrum_from_phase(1.0, math.pi / 2, 0.0)
    assert s_x == pytest.approx(1.25)
    assert qs.spectrum_from_phase(1.0, 0.4, 1e9) == pytest.approx((0.25, 0.25))


@given(psi=psis, phi=phases, w=omegas)
def test_spectrum_sum_rule_and_positivity(psi, phi, w):
    s_x, s_y = qs.spectrum_from_phase(psi, phi, w)
    assert s_x + s_y == pytest.approx(0.5 + (psi * lorentzian(w)) ** 2, rel=1e-12)
    assert s_x > 0 and s_y > 0


@given(psi=psis, phi=phases, w=omegas)
def test_quarter_turn_swaps_quadratures(psi, phi, w):
    s_x = qs.spectrum_from_phase(psi, phi, w)[0]
    s_y = qs.spectrum_from_phase(psi, phi + math.pi / 2, w)[1]
    assert s_x == pytest.approx(s_y, rel=1e-9, abs=1e-12)


def test_spectrum_wrapper_uses_slow_phase():
    p = KerrParams.from_phase(1.0)
    got = qs.spectrum(p, ENV, p.kernel(), ConstantPhase(0.2), 0.5, 0.7)
    psi = math.exp(-0.25)
    assert got == pytest.approx(qs.spectrum_from_phase(psi, psi + 0.2, 0.7))


# -- optimal phase ---------------------------------------------------------------

def test_optimal_phase_examples():
    assert qs.optimal_phase_value(1.0, 0.0) == pytest.approx(math.pi / 8 - 1.0)
    assert qs.optimal_phase_value(1.0, 1.0) == pytest.approx(0.5 * math.atan(2) - 1)
    assert qs.optimal_phase_value(1.0, 1.0) == pytest.approx(-0.446, abs=1e-3)
    assert qs.optimal_phase_value(1e-12, 0.0) == pytest.approx(math.pi / 4)


def test_optimal_phase_degenerate_flag():
    p = KerrParams.from_phase(1.0)
    choice = qs.optimal_phase(p, ENV, 50.0, 0.0)
    assert choice.degenerate and choice.phi == pytest.approx(math.pi / 4)
    assert not qs.optimal_phase(p, ENV, 0.0, 0.0).degenerate


@given(psi=st.floats(0.01, 20), w0=st.floats(0, 5))
def test_optimal_phase_minimises(psi, w0):
    f = lambda phi: float(qs.spectrum_from_phase(psi, psi + phi, w0)[0])
    phi0 = qs.optimal_phase_value(psi, w0)
    best = optimize.minimize_scalar(f, bounds=(phi0 - 1, phi0 + 1), method="bounded",
                                    options={"xatol": 1e-12}).fun
    assert f(phi0) == pytest.approx(best, abs=1e-12)
    assert f(phi0) == pytest.approx(float(qs.optimum_spectrum(psi * lorentzian(w0))[0]), rel=1e-10)


# -- optimum -----------------------------------------------------------------

def test_optimum_examples():
    assert qs.optimum_spectrum(0.0) == pytest.approx((0.25, 0.25))
    s_x, s_y = qs.optimum_spectrum(1.0)
    assert s_x == pytest.approx((math.sqrt(2) - 1) ** 2 / 4)
    assert s_y == pytest.approx((math.sqrt(2) + 1) ** 2 / 4)
    assert s_x == pytest.approx(0.0429, abs=1e-4)
    assert qs.optimum_spectrum(10.0)[0] == pytest.approx(6.2189e-4, rel=1e-4)


@given(a=st.floats(0, 1e3))
def test_minimum_uncertainty(a):
    s_x, s_y = qs.optimum_spectrum(a)
    assert s_x * s_y == pytest.approx(1 / 16, abs=1e-12)
    assert s_x <= 0.25 <= s_y


def test_optimum_monotone():
    a = np.logspace(-3, 3, 400)
    s_x, s_y = qs.optimum_spectrum(a)
    assert np.all(np.diff(s_x) < 0) and np.all(np.diff(s_y) > 0)


def test_spectrum_at_optimum_wrapper():
    p = KerrParams.from_phase(2.0)
    assert qs.spectrum_at_optimum(p, ENV, 0.0, 1.0) == pytest.approx(qs.optimum_spectrum(1.0))


# -- general frequency -------------------------------------------------------------

@given(psi=psis, w0=omegas)
def test_general_reduces_at_optimisation_frequency(psi, w0):
    got = qs.general_spectrum(psi, w0, w0)
    want = qs.optimum_spectrum(psi * lorentzian(w0))
    assert got[0] == pytest.approx(want[0], rel=1e-12)
    assert got[1] == pytest.approx(want[1], rel=1e-12)


@given(w=omegas, w0=omegas)
def test_general_shot_noise(w, w0):
    assert qs.general_spectrum(0.0, w, w0) == (0.25, 0.25)


@given(psi=psis, w=omegas, w0=omegas)
def test_general_equals_substituted_phase(psi, w, w0):
    phi0 = qs.optimal_phase_value(psi, w0)
    direct = qs.spectrum_from_phase(psi, psi + phi0, w)
    got = qs.general_spectrum(psi, w, w0)
    scale = 1 + psi**2
    assert got[0] == pytest.approx(direct[0], abs=1e-13 * scale)
    assert got[1] == pytest.approx(direct[1], abs=1e-13 * scale)


def test_argmin_at_zero_for_omega0_zero():
    grid = np.linspace(0, 4, 4001)
    for psi0 in (0.1, 0.5, 1, 2, 5, 20):
        assert np.argmin(qs.general_spectrum(psi0, grid, 0.0)[0]) == 0


def test_argmin_location_for_omega0_one():
    # minimum of a quadratic in b = psi L(Omega): b* = c / (2 (1 - a c)), a = psi L(1), c = 1/sqrt(1+a^2)
    grid = np.linspace(0, 4, 4001)
    for psi0 in (1.5, 2.0, 5.0):
        a = psi0 / 2
        c = 1 / math.sqrt(1 + a * a)
        b = c / (2 * (1 - a * c))
        expected = math.sqrt(psi0 / b - 1)
        found = grid[np.argmin(qs.general_spectrum(psi0, grid, 1.0)[0])]
        assert found == pytest.approx(expected, abs=1e-3)
    assert grid[np.argmin(qs.general_spectrum(0.5, grid, 1.0)[0])] == 0.0


def test_spectrum_series():
    p = KerrParams.from_phase(1.0)
    s = qs.spectrum_series(p, ENV, 0.0, [0, 1, 2], 0.0)
    assert s.formula_tag == "general"
    assert np.all(s.s_x > 0)
    with pytest.raises(ValueError):
        qs.SpectrumSeries(np.zeros(1), np.zeros(1), np.zeros(1), 0.0, "other")


# -- bandwidth --------------------------------------------------------------------

def test_bandwidth_examples():
    assert qs.squeezing_bandwidth(0.0) == 1.0
    assert qs.squeezing_bandwidth(1e-6) == pytest.approx(1.0, abs=1e-6)
    assert qs.bandwidth_lorentzian(1.0) == pytest.approx(0.34108, abs=1e-5)
    assert qs.squeezing_bandwidth(1.0) == pytest.approx(1.389910663524, rel=1e-10)
    assert qs.squeezing_bandwidth(100.0) == pytest.approx(math.sqrt(1 + math.sqrt(2)), abs=5e-4)


@given(psi=st.floats(1e-3, 1e4))
def test_bandwidth_half_depth(psi):
    w = qs.squeezing_bandwidth(psi)
    s_x = float(qs.general_spectrum(psi, w, 0.0)[0])
    assert s_x == pytest.approx(qs.half_depth_level(psi), abs=1e-10)


@given(psi=st.floats(1e-2, 1e3))
def test_bandwidth_closed_form_agrees(psi):
    # the explicit radical cancels digits at large psi, so stop at 1e3
    assert qs.bandwidth_closed_form(psi) == pytest.approx(qs.squeezing_bandwidth(psi), rel=1e-8)


@given(psi=st.floats(1e-9, 1e4))
def test_other_root_inadmissible(psi):
    a, b, c = qs._bandwidth_coefficients(psi)
    assert b * b - 4 * a * c > 0          # both roots real
    ell = qs.bandwidth_lorentzian(psi)
    assert a * ell * ell + b * ell + c == pytest.approx(0, abs=1e-12)
    other = c / (a * ell)                  # Vieta
    assert other > 1


def test_bandwidth_bisection_oracle():
    for psi in (0.1, 1.0, 10.0):
        level = qs.half_depth_level(psi)
        root = optimize.brentq(lambda w: float(qs.general_spectrum(psi, w, 0.0)[0]) - level, 0, 10,
                               xtol=1e-14)
        assert root == pytest.approx(qs.squeezing_bandwidth(psi), abs=1e-10)


def test_bandwidth_monotone():
    w = [qs.squeezing_bandwidth(p) for p in np.logspace(-3, 3, 200)]
    assert np.all(np.diff(w) >= 0)
    assert 1.0 <= min(w) and max(w) < math.sqrt(1 + math.sqrt(2))


def test_bandwidth_rejects_negative():
    with pytest.raises(ValueError):
        qs.squeezing_bandwidth(-0.1)
    with pytest.raises(ValueError):
        qs.bandwidth_closed_form(0.0)
