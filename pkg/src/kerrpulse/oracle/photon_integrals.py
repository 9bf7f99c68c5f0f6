"""Brute-force evaluation of the double integrals behind the photon results.

Time is measured in units of tau_p and frequency is ``Omega = omega tau_p``.
With ``rho(t) = exp(-t^2/2)`` and the nonlinear phase ``psi(t) = psi0 rho^2(t)``
(paraxially ``psi0 (1 - t^2)``):

    I1 = int int rho(t1) rho(t2) e^{i[psi(t1) - psi(t2)]} e^{i(W1 t1 - W2 t2)}
    I2 = int int rho(t1) rho(t2) e^{i[psi(t1) + psi(t2)]} e^{i(W1 t1 + W2 t2)}
    I3 = same as I2 with an extra factor h~(nu (t2 - t1))

The spectral-amplitude normalisation ``1 / (2 pi tau_p^2)`` turns these into
multiples of n_bar0: the density is ``I1(W, W) / (2 pi)`` and the smooth
correlation is ``-psi0 Im(conj(I2) I3) / (4 pi^2)``.  I2 and I3 are both
symmetric under W1 <-> W2, so the symmetrised product needs one evaluation.
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, Optional

from ..pulse import KerrParams
from ..quadrature import QuadratureSpec, integrate_1d_complex, integrate_2d_complex

HALF_WIDTH = 6.0
SPEC_2D = QuadratureSpec(abs_tol=1e-9, rel_tol=1e-9, max_subdivisions=400)


def gaussian_relaxation(theta: float) -> float:
    return math.exp(-0.5 * theta * theta)


def _phase_fn(psi0: float, paraxial: bool) -> Callable[[float], float]:
    if paraxial:
        return lambda t: psi0 * (1.0 - t * t)
    return lambda t: psi0 * math.exp(-t * t)


def integrate_2d_i(params: KerrParams, which: str, omega1: float, omega2: float,
                   spec: QuadratureSpec = SPEC_2D, paraxial: bool = True,
                   relax: Optional[Callable[[float], float]] = None) -> complex:
    """Evaluate I1, I2 or I3 by nested adaptive quadrature on ``[-6, 6]^2``.

    ``relax`` replaces the Gaussian relaxation kernel in I3 (normalized time
    argument); passing ``lambda th: 1.0`` turns I3 into I2.
    """
    which = which.upper()
    if which not in ("I1", "I2", "I3"):
        raise ValueError(f"which must be I1, I2 or I3, got {which!r}")
    psi = _phase_fn(params.psi0, paraxial)
    nu = params.nu
    kern = relax or gaussian_relaxation
    sign = -1.0 if which == "I1" else 1.0

    def f(t1: float, t2: float) -> complex:
        amp = math.exp(-0.5 * (t1 * t1 + t2 * t2))
        if which == "I3":
            amp *= kern(nu * (t2 - t1))
        if amp == 0.0:
            return 0j
        return amp * cmath.exp(1j * (psi(t1) + sign * psi(t2)
                                     + omega1 * t1 + sign * omega2 * t2))

    ridge = which == "I3" and relax is None
    return integrate_2d_complex(f, -HALF_WIDTH, HALF_WIDTH, spec, ridge=ridge)[0]


def oracle_photon_density(params: KerrParams, omega: float,
                          spec: QuadratureSpec = SPEC_2D, paraxial: bool = True) -> float:
    """Spectral photon density from the 2-D I1 integral, units of n_bar0."""
    return (integrate_2d_i(params, "I1", omega, omega, spec, paraxial) / (2.0 * math.pi)).real


def oracle_photon_density_1d(params: KerrParams, omega: float,
                             spec: QuadratureSpec = QuadratureSpec(1e-12, 1e-12),
                             paraxial: bool = True) -> float:
    """Density as ``|I|^2 / (2 pi)`` with the single integral ``I = int rho e^{i(psi + W t)} dt``."""
    psi = _phase_fn(params.psi0, paraxial)
    f = lambda t: math.exp(-0.5 * t * t) * cmath.exp(1j * (psi(t) + omega * t))
    val = integrate_1d_complex(f, -HALF_WIDTH * 2, HALF_WIDTH * 2, spec)[0]
    return abs(val) ** 2 / (2.0 * math.pi)


def oracle_corr_smooth(params: KerrParams, omega1: float, omega2: float,
                       spec: QuadratureSpec = SPEC_2D, paraxial: bool = True) -> float:
    """Smooth correlation ``-psi0 Im(conj(I2) I3) / (4 pi^2)`` from 2-D quadrature."""
    i2 = integrate_2d_i(params, "I2", omega1, omega2, spec, paraxial)
    i3 = integrate_2d_i(params, "I3", omega1, omega2, spec, paraxial)
    return -params.psi0 * (i2.conjugate() * i3).imag / (4.0 * math.pi**2)
