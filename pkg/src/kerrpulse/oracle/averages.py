"""Exact coherent-state average of the self-action exponential.

For a coherent input the normally ordered exponential has the average

    <exp O(t)> = exp( n_bar0 * int [exp(i gamma h~(theta)) - 1] rho^2(t - theta tau_r) dtheta )

with no small-gamma assumption.  Expanding to second order in gamma gives
``exp(i psi - mu)``, which is what the library's psi/mu functionals encode.
"""

from __future__ import annotations

import math

from ..kernel import ResponseKernel, h_tilde
from ..pulse import GaussianEnvelope, KerrParams
from ..quadrature import QuadratureSpec, integrate_1d

TIGHT = QuadratureSpec(abs_tol=1e-300, rel_tol=1e-13, max_subdivisions=1000)


def exact_average_exponent(params: KerrParams, envelope: GaussianEnvelope,
                           kernel: ResponseKernel, t: float,
                           spec: QuadratureSpec = TIGHT) -> complex:
    """Logarithm of ``<exp O(t)>``: imaginary part is the phase, minus the real part the decay."""
    if params.gamma == 0 or params.n_bar0 == 0:
        return 0j
    g = params.gamma
    tau_r = kernel.tau_r
    radius = QuadratureSpec(abs_tol=1e-16).radius()

    def dens(th):
        return float(envelope.rho2(t - th * tau_r))

    def re(th):
        s = math.sin(0.5 * g * float(h_tilde(kernel, th)))
        return -2.0 * s * s * dens(th)   # cos(x) - 1 without cancellation

    def im(th):
        return math.sin(g * float(h_tilde(kernel, th))) * dens(th)

    real = integrate_1d(re, -radius, radius, spec, points=(0.0,))[0]
    imag = integrate_1d(im, -radius, radius, spec, points=(0.0,))[0]
    return params.n_bar0 * complex(real, imag)


def exact_average_exp_o(params: KerrParams, envelope: GaussianEnvelope,
                        kernel: ResponseKernel, t: float,
                        spec: QuadratureSpec = TIGHT) -> complex:
    """``<exp O(t)>`` for a coherent input pulse (modulus <= 1)."""
    import cmath

    return cmath.exp(exact_average_exponent(params, envelope, kernel, t, spec))
