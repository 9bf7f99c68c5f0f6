"""Response kernels of a relaxing Kerr nonlinearity.

Two kernels are supported, both written in normalized time ``theta = t / tau_r``:

* exponential (Debye relaxation): ``h~(theta) = exp(-|theta|)``
* Gaussian: ``h~(theta) = exp(-theta**2 / 2)``

Only the exponential kernel has the closed-form autocorrelation and the
Lorentzian spectra used by the quadrature-squeezing formulas.  The Gaussian
kernel enters only the photon-statistics results (see :mod:`kerrpulse.photon`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedVariantError

EXPONENTIAL = "exponential"
GAUSSIAN = "gaussian"
VARIANTS = (EXPONENTIAL, GAUSSIAN)


@dataclass(frozen=True)
class ResponseKernel:
    """Nonlinear response of the medium.

    ``tau_r`` is the relaxation time, in the same unit as every other time
    handed to the library (conventionally the pulse duration is 1).
    """

    variant: str = EXPONENTIAL
    tau_r: float = 1.0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise UnsupportedVariantError(
                f"unknown kernel variant {self.variant!r}; expected one of {VARIANTS}")
        if not self.tau_r > 0:
            raise ValueError(f"tau_r must be positive, got {self.tau_r}")

    @property
    def is_exponential(self) -> bool:
        return self.variant == EXPONENTIAL

    def h_tilde(self, theta):
        return h_tilde(self, theta)

    def h(self, tau):
        """Dimensional two-sided response ``h(tau) = h~(tau / tau_r) / tau_r``."""
        return h_tilde(self, np.asarray(tau) / self.tau_r) / self.tau_r


def h_tilde(kernel: ResponseKernel, theta):
    """Normalized response at normalized time ``theta`` (peak 1 at 0, even)."""
    theta = np.asarray(theta, dtype=float)
    if kernel.variant == EXPONENTIAL:
        out = np.exp(-np.abs(theta))
    else:
        out = np.exp(-0.5 * theta * theta)
    return out[()] if out.ndim == 0 else out


def _require_exponential(kernel: ResponseKernel, what: str) -> None:
    if kernel.variant != EXPONENTIAL:
        raise UnsupportedVariantError(
            f"{what} is only defined for the exponential kernel, got {kernel.variant!r}")


def autocorr_g(kernel: ResponseKernel, tau, tau_r: float | None = None):
    """Kernel autocorrelation ``g(tau) = (1/tau_r) int h~(theta) h~(theta + tau/tau_r) dtheta``.

    For the exponential kernel this is ``(1 + |tau|/tau_r) exp(-|tau|/tau_r) / tau_r``.
    ``tau_r`` defaults to the kernel's own relaxation time.
    """
    _require_exponential(kernel, "autocorr_g")
    tau_r = kernel.tau_r if tau_r is None else tau_r
    if not tau_r > 0:
        raise ValueError("tau_r must be positive")
    x = np.abs(np.asarray(tau, dtype=float)) / tau_r
    out = (1.0 + x) * np.exp(-x) / tau_r
    return out[()] if out.ndim == 0 else out


def lorentzian(omega_norm):
    """``L(Omega) = 1 / (1 + Omega**2)`` with ``Omega = omega * tau_r``."""
    w = np.asarray(omega_norm, dtype=float)
    out = 1.0 / (1.0 + w * w)
    return out[()] if out.ndim == 0 else out


def ft_h(omega_norm):
    """Fourier transform of the exponential ``h``: ``2 L(Omega)``."""
    return 2.0 * lorentzian(omega_norm)


def ft_g(omega_norm):
    """Fourier transform of the exponential-kernel autocorrelation: ``4 L(Omega)**2``."""
    ell = lorentzian(omega_norm)
    return 4.0 * ell * ell
