"""Direct numerical Fourier transform of correlation functions.

``S(Omega) = int R(theta) exp(i Omega theta) dtheta`` with theta in units of
tau_r.  The integrand is sampled on a uniform grid and summed with composite
Simpson weights, separately on each half-line so the cusp of the exponential
kernel at theta = 0 falls on a panel edge.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np
from scipy.integrate import simpson

from ..errors import TruncationError

DEFAULT_STEP = 0.01
DEFAULT_RADIUS = 30.0


class FourierValue(NamedTuple):
    value: np.ndarray          # real part of the transform
    imag_residue: np.ndarray   # imaginary part, ~0 for even correlations


def numeric_ft(corr: Callable[[np.ndarray], np.ndarray], omega_norm,
               step: float = DEFAULT_STEP, radius: float = DEFAULT_RADIUS,
               delta_weight: float = 0.0, tail_tol: float = 1e-10) -> FourierValue:
    """Transform a sampled correlation, adding ``delta_weight`` for a delta(theta) term.

    ``corr`` maps an array of normalized lags to correlation values
    (dimensionless, i.e. already multiplied by tau_r).
    """
    n_half = int(round(radius / step))
    if n_half % 2:
        n_half += 1
    right = np.linspace(0.0, n_half * step, n_half + 1)
    left = -right[::-1]
    f_right = np.asarray(corr(right), dtype=float)
    f_left = np.asarray(corr(left), dtype=float)
    scale = max(np.max(np.abs(f_right)), np.max(np.abs(f_left)), 1e-300)
    tail = max(abs(f_right[-1]), abs(f_left[0]))
    if tail > tail_tol * scale and tail > tail_tol:
        raise TruncationError(f"correlation is {tail:.3e} at |theta|={radius}; "
                              "increase the radius")
    w = np.atleast_1d(np.asarray(omega_norm, dtype=float))[:, None]
    er, el = np.exp(1j * w * right), np.exp(1j * w * left)
    total = simpson(f_right * er, dx=step, axis=-1) + simpson(f_left * el, dx=step, axis=-1)
    val = total.real + delta_weight
    res = total.imag
    if np.ndim(omega_norm) == 0:
        return FourierValue(val[0], res[0])
    return FourierValue(val, res)
