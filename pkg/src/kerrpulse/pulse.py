"""Pulse and medium parameters, the Gaussian envelope, and the self-action
functionals psi(t), mu(t) and K(t1, t2).

Each functional comes in two forms:

* ``*_exact``: the defining integral over the response kernel, evaluated by
  adaptive quadrature;
* ``*_slow``: the slow-envelope closed form, valid when the pulse is much
  longer than the relaxation time (``nu = tau_p / tau_r >> 1``).

Times are dimensional (same unit as ``tau_p`` and ``tau_r``); the kernel is
always evaluated in normalized time ``theta = t / tau_r``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import RegimeError, UnsupportedVariantError
from .kernel import ResponseKernel, autocorr_g, h_tilde
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate_1d

GAMMA_WARN = 0.1
# above this nu the kernel is treated as a delta function in psi_exact
NU_DELTA_LIMIT = 1e6


@dataclass(frozen=True)
class KerrParams:
    """Medium and pulse scalars.

    ``gamma`` is the dimensionless nonlinear coupling (beta * z) and ``n_bar0``
    the peak mean photon-number density.  The peak nonlinear phase ``psi0``,
    the decay parameter ``mu0`` and the duration ratio ``nu`` are derived, so
    their defining identities hold exactly.
    """

    gamma: float
    n_bar0: float
    tau_p: float = 1.0
    tau_r: float = 0.1

    def __post_init__(self):
        if self.gamma < 0:
            raise ValueError(f"gamma must be non-negative, got {self.gamma}")
        if self.n_bar0 < 0:
            raise ValueError(f"n_bar0 must be non-negative, got {self.n_bar0}")
        if not self.tau_p > 0 or not self.tau_r > 0:
            raise ValueError("tau_p and tau_r must be positive")
        if self.gamma > GAMMA_WARN:
            warnings.warn(f"gamma={self.gamma} > {GAMMA_WARN}: the small-gamma "
                          "expansions behind the closed forms lose accuracy",
                          RuntimeWarning, stacklevel=3)

    @classmethod
    def from_phase(cls, psi0: float, nu: float = 10.0, gamma: float = 1e-3,
                   tau_p: float = 1.0) -> "KerrParams":
        """Build parameters from the peak phase, fixing ``n_bar0 = psi0 / (2 gamma)``."""
        if psi0 < 0:
            raise ValueError("psi0 must be non-negative")
        if gamma == 0 and psi0 != 0:
            raise ValueError("psi0 > 0 needs gamma > 0")
        if not nu > 0:
            raise ValueError("nu must be positive")
        n_bar0 = 0.0 if psi0 == 0 else psi0 / (2.0 * gamma)
        return cls(gamma=gamma, n_bar0=n_bar0, tau_p=tau_p, tau_r=tau_p / nu)

    @property
    def psi0(self) -> float:
        return 2.0 * self.gamma * self.n_bar0

    @property
    def mu0(self) -> float:
        return self.gamma * self.psi0 / 2.0

    @property
    def nu(self) -> float:
        return self.tau_p / self.tau_r

    @property
    def slow_envelope_valid(self) -> bool:
        return self.nu > 1.0

    @property
    def valid_families(self) -> tuple[str, ...]:
        fams = ["exact"]
        if self.slow_envelope_valid:
            fams += ["slow-envelope", "quadrature-spectra", "photon-paraxial"]
        return tuple(fams)

    def kernel(self, variant: str = "exponential") -> ResponseKernel:
        return ResponseKernel(variant, self.tau_r)


@dataclass(frozen=True)
class GaussianEnvelope:
    """Real pulse envelope ``rho(t) = exp(-t**2 / (2 tau_p**2))``, ``rho(0) = 1``."""

    tau_p: float = 1.0

    def __post_init__(self):
        if not self.tau_p > 0:
            raise ValueError("tau_p must be positive")

    def rho(self, t):
        t = np.asarray(t, dtype=float) / self.tau_p
        return np.exp(-0.5 * t * t)

    def rho2(self, t):
        t = np.asarray(t, dtype=float) / self.tau_p
        return np.exp(-t * t)

    def rho2_paraxial(self, t):
        t = np.asarray(t, dtype=float) / self.tau_p
        return 1.0 - t * t


@dataclass(frozen=True)
class ConstantPhase:
    """Input pulse phase that does not depend on time."""

    value: float = 0.0

    def phi(self, params: KerrParams, envelope: GaussianEnvelope, t):
        return np.zeros_like(np.asarray(t, dtype=float)) + self.value


@dataclass(frozen=True)
class OptimalPhase:
    """Input phase chosen to minimise the X-quadrature noise at ``omega0_norm``."""

    omega0_norm: float = 0.0

    def phi(self, params: KerrParams, envelope: GaussianEnvelope, t):
        from .quadspec import optimal_phase_value

        return optimal_phase_value(psi_slow(params, envelope, t), self.omega0_norm)


def _require_slow(params: KerrParams) -> None:
    if not params.slow_envelope_valid:
        raise RegimeError(f"slow-envelope forms need nu > 1, got nu={params.nu}")


def _require_exponential(kernel: ResponseKernel) -> None:
    if not kernel.is_exponential:
        raise UnsupportedVariantError("this functional is defined for the exponential kernel only")


def _scalar_map(fn, t):
    arr = np.asarray(t, dtype=float)
    if arr.ndim == 0:
        return fn(float(arr))
    return np.vectorize(fn, otypes=[float])(arr)


def psi_exact(params: KerrParams, envelope: GaussianEnvelope, kernel: ResponseKernel,
              t, spec: QuadratureSpec = DEFAULT_SPEC):
    """Nonlinear phase ``psi0 * int_0^inf h~(theta) rho^2(t - theta tau_r) dtheta``."""
    _require_exponential(kernel)
    if params.nu > NU_DELTA_LIMIT:
        return params.psi0 * envelope.rho2(t)
    radius = spec.radius()
    tau_r = kernel.tau_r

    def one(tt: float) -> float:
        f = lambda th: math.exp(-th) * float(envelope.rho2(tt - th * tau_r))
        return params.psi0 * integrate_1d(f, 0.0, radius, spec)[0]

    return _scalar_map(one, t)


def mu_exact(params: KerrParams, envelope: GaussianEnvelope, kernel: ResponseKernel,
             t, spec: QuadratureSpec = DEFAULT_SPEC):
    """Decay exponent ``mu0 * int_0^inf h~^2(theta) rho^2(t - theta tau_r) dtheta``."""
    _require_exponential(kernel)
    radius = spec.radius(decay=2.0)
    tau_r = kernel.tau_r

    def one(tt: float) -> float:
        f = lambda th: math.exp(-2.0 * th) * float(envelope.rho2(tt - th * tau_r))
        return params.mu0 * integrate_1d(f, 0.0, radius, spec)[0]

    return _scalar_map(one, t)


def psi_slow(params: KerrParams, envelope: GaussianEnvelope, t):
    """Slow-envelope nonlinear phase ``psi0 * rho^2(t)``."""
    _require_slow(params)
    return params.psi0 * envelope.rho2(t)


def mu_slow(params: KerrParams, envelope: GaussianEnvelope, t):
    """Slow-envelope decay exponent ``mu0 * rho^2(t) / 2`` (exponential kernel)."""
    _require_slow(params)
    return 0.5 * params.mu0 * envelope.rho2(t)


def k_slow(params: KerrParams, envelope: GaussianEnvelope, kernel: ResponseKernel,
           t1, tau):
    """Slow-envelope temporal correlator ``mu0 rho^2(t1 + tau/2) tau_r g(tau)``."""
    _require_exponential(kernel)
    _require_slow(params)
    t1 = np.asarray(t1, dtype=float)
    tau = np.asarray(tau, dtype=float)
    return params.mu0 * envelope.rho2(t1 + 0.5 * tau) * kernel.tau_r * autocorr_g(kernel, tau)


def k_exact(params: KerrParams, envelope: GaussianEnvelope, kernel: ResponseKernel,
            t1: float, t2: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Temporal correlator ``mu0 int h~(t1/tau_r - theta) h~(t2/tau_r - theta) rho^2(theta tau_r) dtheta``."""
    tau_r = kernel.tau_r
    a, b = t1 / tau_r, t2 / tau_r
    radius = spec.radius()
    lo, hi = min(a, b) - radius, max(a, b) + radius

    def f(th: float) -> float:
        return float(h_tilde(kernel, a - th) * h_tilde(kernel, b - th)
                     * envelope.rho2(th * tau_r))

    return params.mu0 * integrate_1d(f, lo, hi, spec, points=(a, b))[0]
