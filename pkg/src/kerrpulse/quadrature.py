"""Adaptive 1-D and nested 2-D quadrature with explicit tolerance contracts.

Thin layer over QUADPACK (``scipy.integrate.quad``, Gauss-Kronrod 21-point
panels with adaptive bisection).  The layer adds what the physics code needs:
a frozen tolerance record, tail-based truncation of infinite domains, complex
integrands, and a hard failure when the requested accuracy is not reached.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from scipy import integrate

from .errors import QuadratureError


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances for an adaptive integration.

    ``truncation_radius`` is in normalized time.  When it is None the radius
    is chosen so that an integrand bounded by ``exp(-decay * |x|)`` has a tail
    below ``abs_tol / 100``.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 500
    truncation_radius: Optional[float] = None

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.rel_tol < 0:
            raise ValueError("rel_tol must be non-negative")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if self.truncation_radius is not None and not self.truncation_radius > 0:
            raise ValueError("truncation_radius must be positive")

    def radius(self, decay: float = 1.0) -> float:
        if self.truncation_radius is not None:
            return self.truncation_radius
        return math.log(100.0 / self.abs_tol) / decay

    def scaled(self, factor: float) -> "QuadratureSpec":
        return QuadratureSpec(self.abs_tol * factor, self.rel_tol * factor,
                              self.max_subdivisions, self.truncation_radius)


DEFAULT_SPEC = QuadratureSpec()


def integrate_1d(f: Callable[[float], float], lower: float, upper: float,
                 spec: QuadratureSpec = DEFAULT_SPEC,
                 points: Optional[Iterable[float]] = None) -> tuple[float, float]:
    """Integrate a real function; return ``(value, error_bound)``.

    Raises QuadratureError (estimate attached) when the error bound exceeds
    ``max(abs_tol, rel_tol * |value|)``.
    """
    kwargs = dict(epsabs=spec.abs_tol, epsrel=spec.rel_tol,
                  limit=spec.max_subdivisions)
    if points is not None:
        pts = sorted(p for p in points if lower < p < upper)
        if pts:
            if math.isinf(lower) or math.isinf(upper):
                # quad refuses breakpoints on infinite ranges: split by hand
                edges = [lower, *pts, upper]
                value = err = 0.0
                for a, b in zip(edges[:-1], edges[1:]):
                    v, e = integrate_1d(f, a, b, spec)
                    value += v
                    err += e
                return value, err
            kwargs["points"] = pts
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(f, lower, upper, **kwargs)
    if not err <= max(spec.abs_tol, spec.rel_tol * abs(value)):
        raise QuadratureError(
            f"quadrature on [{lower}, {upper}] did not converge: "
            f"estimate {value!r}, error bound {err:.3e}",
            value=value, error_bound=err)
    return value, err


def integrate_1d_complex(f: Callable[[float], complex], lower: float, upper: float,
                         spec: QuadratureSpec = DEFAULT_SPEC,
                         points: Optional[Iterable[float]] = None) -> tuple[complex, float]:
    """Complex integrand version of :func:`integrate_1d`.

    The real and imaginary parts are integrated separately; the returned
    bound is the modulus of the two bounds.
    """
    pts = None if points is None else list(points)
    re, ere = integrate_1d(lambda x: f(x).real, lower, upper, spec, pts)
    im, eim = integrate_1d(lambda x: f(x).imag, lower, upper, spec, pts)
    return complex(re, im), math.hypot(ere, eim)


def integrate_2d_complex(f: Callable[[float, float], complex],
                         lower: float, upper: float,
                         spec: QuadratureSpec = DEFAULT_SPEC,
                         ridge: bool = False) -> tuple[complex, float]:
    """Nested adaptive integral of ``f(x, y)`` over the square ``[lower, upper]^2``.

    With ``ridge=True`` the inner integral gets a breakpoint at ``y = x`` (for
    integrands concentrated along the diagonal).  The inner tolerance is a
    tenth of the outer one so inner errors do not dominate.
    """
    inner_spec = QuadratureSpec(spec.abs_tol / 10, spec.rel_tol / 10,
                                spec.max_subdivisions, spec.truncation_radius)
    cache: dict[float, complex] = {}

    def inner(x: float) -> complex:
        if x not in cache:
            pts = [x] if ridge else None
            cache[x] = integrate_1d_complex(lambda y: f(x, y), lower, upper,
                                            inner_spec, pts)[0]
        return cache[x]

    return integrate_1d_complex(inner, lower, upper, spec)

