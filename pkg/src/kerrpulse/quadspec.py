"""Quadrature means, correlation functions and fluctuation spectra of the
self-phase-modulated pulse, the optimal input phase, and the width of the
sub-shot-noise band.

Frequencies here are normalized by the relaxation time, ``Omega = omega * tau_r``.
Spectra are in shot-noise units where a coherent state gives 1/4.

Most operations come in two layers: a function of the local nonlinear phase
``psi`` (pure algebra, vectorized), and a wrapper taking
``(params, envelope, ...)`` that evaluates ``psi = psi0 * rho^2(t)`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import NoRootError
from .kernel import ResponseKernel, autocorr_g, lorentzian
from .pulse import (ConstantPhase, GaussianEnvelope, KerrParams, OptimalPhase,
                    _require_exponential, _require_slow, mu_slow, psi_slow)

SHOT_NOISE = 0.25


class QuadratureMeans(NamedTuple):
    x_mean: float
    y_mean: float
    big_phi: float


class QuadratureCorrelation(NamedTuple):
    """Smooth parts of R_X, R_Y (units 1/time).

    The shot-noise term ``delta_weight * delta(tau)`` is not sampled; spectrum
    code adds its transform (exactly ``delta_weight``) analytically.
    """

    rx: np.ndarray
    ry: np.ndarray
    delta_weight: float = SHOT_NOISE


class PhaseChoice(NamedTuple):
    phi: float
    degenerate: bool


@dataclass(frozen=True)
class SpectrumSeries:
    omega_norm_grid: np.ndarray
    s_x: np.ndarray
    s_y: np.ndarray
    t_eval: float
    formula_tag: str  # "general" or "optimal-frequency"

    def __post_init__(self):
        if self.formula_tag not in ("general", "optimal-frequency"):
            raise ValueError(f"unknown formula tag {self.formula_tag!r}")


# -- means ------------------------------------------------------------------

def mean_quadratures(amplitude, big_phi, mu):
    """``(|alpha| e^{-mu} cos Phi, |alpha| e^{-mu} sin Phi)``."""
    scale = np.asarray(amplitude) * np.exp(-np.asarray(mu))
    return scale * np.cos(big_phi), scale * np.sin(big_phi)


def quadrature_means(params: KerrParams, envelope: GaussianEnvelope,
                     kernel: ResponseKernel, phase, t: float) -> QuadratureMeans:
    _require_exponential(kernel)
    psi = psi_slow(params, envelope, t)
    big_phi = psi + phase.phi(params, envelope, t)
    amp = np.sqrt(params.n_bar0) * envelope.rho(t)
    x, y = mean_quadratures(amp, big_phi, mu_slow(params, envelope, t))
    return QuadratureMeans(float(x), float(y), float(big_phi))


# -- correlations -----------------------------------------------------------

def corr_rx_ry(params: KerrParams, envelope: GaussianEnvelope, kernel: ResponseKernel,
               phase, t: float, tau, frozen_envelope: bool = False) -> QuadratureCorrelation:
    """Smooth parts of the quadrature correlation functions R_X(t, t+tau), R_Y(t, t+tau).

    With ``frozen_envelope=True`` the envelope, the phase Phi and the
    midpoint envelope in g(t, tau) are held at their values at ``t``. That is
    the approximation under which the closed-form spectra are obtained, so the
    frozen version transforms exactly into :func:`spectrum`.
    """
    _require_exponential(kernel)
    _require_slow(params)
    tau = np.asarray(tau, dtype=float)
    t2 = t + tau
    if frozen_envelope:
        t2 = np.full_like(tau, t)
        t_mid = np.full_like(tau, t)
    else:
        t_mid = t + 0.5 * tau
    psi0 = params.psi0
    rho1 = envelope.rho(t)
    rho2 = envelope.rho(t2)
    phi1 = psi_slow(params, envelope, t) + phase.phi(params, envelope, t)
    phi2 = psi_slow(params, envelope, t2) + phase.phi(params, envelope, t2)
    h = kernel.h(tau)
    g_t = envelope.rho2(t_mid) * autocorr_g(kernel, tau)
    lin = psi0 * rho1 * rho2 * h * np.sin(phi1 + phi2)
    rx = 0.25 * (-lin + psi0**2 * rho1 * rho2 * g_t * np.sin(phi1) * np.sin(phi2))
    ry = 0.25 * (lin + psi0**2 * rho1 * rho2 * g_t * np.cos(phi1) * np.cos(phi2))
    return QuadratureCorrelation(rx, ry)


# -- spectra ----------------------------------------------------------------

def spectrum_from_phase(psi, big_phi, omega_norm):
    """S_X, S_Y at local nonlinear phase ``psi`` and total phase ``big_phi``."""
    psi = np.asarray(psi, dtype=float)
    ell = lorentzian(omega_norm)
    lin = 2.0 * psi * ell * np.sin(2.0 * big_phi)
    quad = 4.0 * (psi * ell) ** 2
    s_x = 0.25 * (1.0 - lin + quad * np.sin(big_phi) ** 2)
    s_y = 0.25 * (1.0 + lin + quad * np.cos(big_phi) ** 2)
    return s_x, s_y


def spectrum(params: KerrParams, envelope: GaussianEnvelope, kernel: ResponseKernel,
             phase, t: float, omega_norm):
    """Fluctuation spectra (S_X, S_Y) for an arbitrary input phase profile."""
    _require_exponential(kernel)
    psi = psi_slow(params, envelope, t)
    return spectrum_from_phase(psi, psi + phase.phi(params, envelope, t), omega_norm)


def optimal_phase_value(psi, omega0_norm):
    """``phi0 = arctan(1 / (psi L(Omega0))) / 2 - psi``; the psi -> 0 limit gives pi/4."""
    psi = np.asarray(psi, dtype=float)
    out = 0.5 * np.arctan2(1.0, psi * lorentzian(omega0_norm)) - psi
    return out[()] if out.ndim == 0 else out


def optimal_phase(params: KerrParams, envelope: GaussianEnvelope, t: float,
                  omega0_norm: float) -> PhaseChoice:
    """Input phase minimising S_X at ``omega0_norm``.

    At ``psi(t) = 0`` every phase is equivalent; the continuous limit pi/4 is
    returned with ``degenerate=True``.
    """
    psi = float(psi_slow(params, envelope, t))
    return PhaseChoice(float(optimal_phase_value(psi, omega0_norm)), psi == 0.0)


def optimum_spectrum(psi_l):
    """(S_X, S_Y) at the optimisation frequency as functions of ``a = psi L(Omega0)``.

    ``S_X = (sqrt(1+a^2) - a)^2 / 4`` is evaluated as ``1 / (4 (sqrt(1+a^2) + a)^2)``
    to avoid cancellation at large ``a``.
    """
    a = np.asarray(psi_l, dtype=float)
    root_plus = np.hypot(1.0, a) + a
    return 0.25 / root_plus**2, 0.25 * root_plus**2


def spectrum_at_optimum(params: KerrParams, envelope: GaussianEnvelope, t: float,
                        omega0_norm: float):
    psi = psi_slow(params, envelope, t)
    return optimum_spectrum(psi * lorentzian(omega0_norm))


def general_spectrum(psi, omega_norm, omega0_norm):
    """(S_X, S_Y) at any ``omega_norm`` with the phase optimised at ``omega0_norm``.

    Written as the optimum value plus a correction proportional to
    ``L(Omega) - L(Omega0)``, so the reduction at ``Omega = Omega0`` is exact.
    """
    psi = np.asarray(psi, dtype=float)
    ell = lorentzian(omega_norm)
    ell0 = lorentzian(omega0_norm)
    a = psi * ell0
    s_x0, s_y0 = optimum_spectrum(a)
    lsum = ell + ell0
    root0 = np.hypot(1.0, a)
    pref = 0.5 * psi * (ell - ell0) / root0
    # lsum psi -/+ (1 + lsum ell0 psi^2) / root0, with the psi^2 terms cancelled
    # analytically in the X branch via root0 - a = 1 / (root0 + a)
    x_corr = lsum * psi / (root0 + a) - 1.0
    y_corr = lsum * psi * (root0 + a) + 1.0
    return s_x0 + pref * x_corr, s_y0 + pref * y_corr


def spectrum_general(params: KerrParams, envelope: GaussianEnvelope, t: float,
                     omega_norm, omega0_norm: float):
    return general_spectrum(psi_slow(params, envelope, t), omega_norm, omega0_norm)


def spectrum_series(params: KerrParams, envelope: GaussianEnvelope, t: float,
                    omega_grid: Sequence[float], omega0_norm: float) -> SpectrumSeries:
    grid = np.asarray(omega_grid, dtype=float)
    s_x, s_y = spectrum_general(params, envelope, t, grid, omega0_norm)
    return SpectrumSeries(grid, np.asarray(s_x), np.asarray(s_y), t, "general")


# -- squeezing bandwidth ----------------------------------------------------

def _bandwidth_coefficients(psi: float):
    """Coefficients (A, B, C) of ``A L^2 + B L + C = 0`` for the half-depth point."""
    root = np.hypot(1.0, psi)
    # psi - sqrt(1+psi^2) = -1 / (psi + sqrt(1+psi^2)), no cancellation
    d = 1.0 / (psi + root)
    a = -2.0 * psi * d
    c = psi * d - 1.0
    return a, 2.0, c


def bandwidth_lorentzian(psi: float) -> float:
    """Value of ``L(dOmega)`` at the half-depth frequency (Omega0 = 0 branch)."""
    if psi < 0:
        raise ValueError("psi must be non-negative")
    a, b, c = _bandwidth_coefficients(psi)
    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise NoRootError(f"negative discriminant {disc} at psi={psi}")
    # smaller positive root, rationalised so psi = 0 (a = 0) needs no special case
    ell = -2.0 * c / (b + np.sqrt(disc))
    if not 0.0 < ell <= 1.0:
        raise NoRootError(f"admissible root L={ell} outside (0, 1] at psi={psi}")
    return float(ell)


def squeezing_bandwidth(psi_t: float) -> float:
    """Half-depth width ``dOmega = tau_r * d omega`` of the squeezed band for Omega0 = 0."""
    ell = bandwidth_lorentzian(psi_t)
    return float(np.sqrt(1.0 / ell - 1.0))


def bandwidth_closed_form(psi_t: float) -> float:
    """Explicit radical for the bandwidth, ``sqrt(A / (sqrt(1 - A C) - 1) - 1)``.

    Algebraically equal to :func:`squeezing_bandwidth` for ``psi_t > 0``; it is
    kept as an independent evaluation path and loses digits as psi -> 0.
    """
    if psi_t <= 0:
        raise ValueError("closed form needs psi > 0")
    root = np.sqrt(1.0 + psi_t**2)
    a = 2.0 * psi_t * (psi_t - root)
    c = psi_t * root - psi_t**2 - 1.0
    return float(np.sqrt(a / (-1.0 + np.sqrt(1.0 - a * c)) - 1.0))


def half_depth_level(psi: float) -> float:
    """Target S_X level halfway between shot noise and the optimum (Omega0 = 0)."""
    return 0.5 * (SHOT_NOISE + float(optimum_spectrum(psi)[0]))


__all__ = [
    "SHOT_NOISE", "QuadratureMeans", "QuadratureCorrelation", "PhaseChoice",
    "SpectrumSeries", "ConstantPhase", "OptimalPhase",
    "mean_quadratures", "quadrature_means", "corr_rx_ry",
    "spectrum_from_phase", "spectrum", "optimal_phase_value", "optimal_phase",
    "optimum_spectrum", "spectrum_at_optimum", "general_spectrum",
    "spectrum_general", "spectrum_series", "bandwidth_lorentzian",
    "squeezing_bandwidth", "bandwidth_closed_form", "half_depth_level",
]
