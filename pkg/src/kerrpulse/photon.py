"""Photon-number spectral density and spectral photon correlations of a
self-phase-modulated Gaussian pulse.

Frequencies in this module are normalized by the *pulse duration*,
``Omega = omega * tau_p`` (not by tau_r as in :mod:`kerrpulse.quadspec`).
Densities and correlations are returned as multiples of the peak photon
density ``n_bar0``.

The correlation results assume a Gaussian relaxation kernel and the paraxial
expansion ``rho^2(t) ~ 1 - t^2 / tau_p^2`` of the envelope inside the phase.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np
from scipy import special

from .pulse import GaussianEnvelope, KerrParams

GL_NODES = 48


def k_gaussian(params: KerrParams, envelope: GaussianEnvelope, t, tau):
    """Temporal correlator for the Gaussian kernel, ``mu0 rho^2(t + tau/2) exp(-tau^2 / (4 tau_r^2))``."""
    tau = np.asarray(tau, dtype=float)
    return (params.mu0 * envelope.rho2(np.asarray(t) + 0.5 * tau)
            * np.exp(-tau * tau / (4.0 * params.tau_r**2)))


# -- spectral density -------------------------------------------------------

def photon_density_classical(params: KerrParams, omega_p_norm):
    """Spectral photon density (units of n_bar0) ignoring the quantum decay terms.

    ``(1 + 4 psi0^2)^{-1/2} exp(-Omega^2 / (1 + 4 psi0^2))``.  Paraxial, so
    accuracy degrades for Omega above about 2.
    """
    w = np.asarray(omega_p_norm, dtype=float)
    spread = 1.0 + 4.0 * params.psi0**2
    return np.exp(-w * w / spread) / np.sqrt(spread)


def photon_density_relaxing(params: KerrParams, omega_p_norm):
    """Spectral photon density including relaxation, via ``kappa = gamma psi0 nu^2 / 4``.

    Reduces to :func:`photon_density_classical` as kappa -> 0.
    """
    w = np.asarray(omega_p_norm, dtype=float)
    one_k = 1.0 + params.gamma * params.psi0 * params.nu**2 / 4.0
    denom = one_k**2 + 4.0 * params.psi0**2
    return np.exp(-w * w * one_k / denom) / np.sqrt(denom)


def i1_value(params: KerrParams, omega1_p_norm, omega2_p_norm):
    """Paraxial I1 (units of n_bar0): ``sqrt(n(W1) n(W2)) exp(i psi0 (W1^2 - W2^2)/(1 + 4 psi0^2))``."""
    w1 = np.asarray(omega1_p_norm, dtype=float)
    w2 = np.asarray(omega2_p_norm, dtype=float)
    mod = np.sqrt(photon_density_classical(params, w1) * photon_density_classical(params, w2))
    phase = params.psi0 * (w1 * w1 - w2 * w2) / (1.0 + 4.0 * params.psi0**2)
    return mod * np.exp(1j * phase)


def i1_diagonal(params: KerrParams, omega_p_norm):
    """Weight of the delta(W1 - W2) term on the diagonal (real, equals the classical density)."""
    return photon_density_classical(params, omega_p_norm)


# -- correlation closed form ------------------------------------------------

@dataclass(frozen=True)
class CorrClosedFormParts:
    """Auxiliary quantities of the paraxial correlation closed form at fixed (psi0, nu).

    ``beta_t`` is ``[(1 + 2 nu^2 - 4 psi0^2)^2 + 16 (1 + nu^2)^2 psi0^2]^{1/2}`` and
    ``xi`` uses the quadrant-aware arctangent so it stays continuous when
    ``1 + 2 nu^2 - 4 psi0^2`` changes sign.
    """

    psi0: float
    nu: float

    @cached_property
    def alpha_t(self) -> float:
        return float(np.sqrt(1.0 + 4.0 * self.psi0**2))

    @cached_property
    def beta_t(self) -> float:
        p, n2 = self.psi0, self.nu**2
        return float(np.hypot(1.0 + 2.0 * n2 - 4.0 * p * p, 4.0 * (1.0 + n2) * p))

    @cached_property
    def rho_aux(self) -> float:
        return float(np.hypot(1.0 + self.nu**2, 2.0 * self.psi0))

    @cached_property
    def eps(self) -> float:
        return float(-np.arctan(2.0 * self.psi0))

    @cached_property
    def xi(self) -> float:
        p, n2 = self.psi0, self.nu**2
        return float(np.arctan2(4.0 * (1.0 + n2) * p, 1.0 + 2.0 * n2 - 4.0 * p * p))

    @cached_property
    def sigma(self) -> float:
        return float(np.arctan(2.0 * self.psi0 / (1.0 + self.nu**2)))

    @property
    def prefactor(self) -> float:
        """``psi0 / (2 alpha~ sqrt(beta~))``."""
        return self.psi0 / (2.0 * self.alpha_t * np.sqrt(self.beta_t))

    def _terms(self, wa, wb, trig):
        # shared structure of (G, S) and (E, F); wa carries rho/beta, wb carries 1/rho
        a, b, r = self.alpha_t, self.beta_t, self.rho_aux
        eps, xi, sig, n2 = self.eps, self.xi, self.sigma, self.nu**2
        return ((wa * wa + wb * wb) / (2 * a) * trig(eps),
                wb * wb / (2 * r) * trig(sig),
                r * wa * wa / (2 * b) * trig(sig - xi),
                wa * wb / b * n2 * trig(xi),
                wb * wb * n2 * n2 / (2 * r * b) * trig(sig + xi))

    def g_part(self, w1, w2):
        t = self._terms(np.asarray(w1, float), np.asarray(w2, float), np.cos)
        return -t[0] - t[1] - t[2] - t[3] - t[4]

    def s_part(self, w1, w2):
        t = self._terms(np.asarray(w1, float), np.asarray(w2, float), np.sin)
        return t[0] + t[1] - t[2] + t[3] + t[4] - (self.eps + 0.5 * self.xi)

    def e_part(self, w1, w2):
        return self.g_part(w2, w1)

    def f_part(self, w1, w2):
        return self.s_part(w2, w1)

    def im_gamma(self, w1, w2):
        return (np.exp(self.g_part(w1, w2)) * np.sin(self.s_part(w1, w2))
                + np.exp(self.e_part(w1, w2)) * np.sin(self.f_part(w1, w2)))


def corr_parts(params: KerrParams) -> CorrClosedFormParts:
    return CorrClosedFormParts(params.psi0, params.nu)


def corr_closed_form(params: KerrParams, omega1_p_norm, omega2_p_norm):
    """Smooth (non-delta) part of the spectral photon correlation R(W1, W2), units of n_bar0."""
    parts = corr_parts(params)
    return -parts.prefactor * parts.im_gamma(omega1_p_norm, omega2_p_norm)


# -- band integrals ---------------------------------------------------------

class BandIntegral(NamedTuple):
    """Band-integrated correlation, split into its pieces (units of n_bar0).

    ``literal = delta_term + smooth - 1`` follows the definition with the
    subtraction of n_bar0; ``smooth`` is the nonclassical part alone.
    """

    smooth: float
    delta_term: float
    literal: float


def _delta_band(params: KerrParams, lo: float, hi: float) -> float:
    spread = 1.0 + 4.0 * params.psi0**2
    # int exp(-W^2/s)/sqrt(s) dW = (sqrt(pi)/2) [erf(hi/sqrt s) - erf(lo/sqrt s)]
    root = np.sqrt(spread)
    return float(0.5 * np.sqrt(np.pi) * (special.erf(hi / root) - special.erf(lo / root)))


def band_integral(params: KerrParams, omega_center: float, band_width: float) -> BandIntegral:
    """Double integral of R over the square band around ``omega_center``, minus n_bar0."""
    if not band_width > 0:
        raise ValueError("band_width must be positive")
    lo, hi = omega_center - 0.5 * band_width, omega_center + 0.5 * band_width
    x, w = np.polynomial.legendre.leggauss(GL_NODES)
    nodes = omega_center + 0.5 * band_width * x
    weights = 0.5 * band_width * w
    w1, w2 = np.meshgrid(nodes, nodes, indexing="ij")
    smooth = float(weights @ corr_closed_form(params, w1, w2) @ weights)
    delta = _delta_band(params, lo, hi)
    return BandIntegral(smooth, delta, delta + smooth - 1.0)


def band_integral_origin(params: KerrParams, band_width: float) -> float:
    """Simplified band correlation at Omega = 0: ``psi0 dW^2 sin(eps + xi/2) / (2 alpha~ sqrt(beta~))``."""
    if not band_width > 0:
        raise ValueError("band_width must be positive")
    parts = corr_parts(params)
    return float(parts.prefactor * band_width**2 * np.sin(parts.eps + 0.5 * parts.xi))
