"""Validation suite: every closed form checked against an independent oracle.

Each case returns an *achieved* figure of merit that passes when it is at
most the tolerance.  For error cases that is an absolute or relative error;
for the sign and location checks it is a signed quantity (e.g. the largest
band correlation, which must not exceed 0).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional

import numpy as np
from scipy import optimize, special

from .. import kernel as kmod
from .. import photon, pulse, quadspec
from ..pulse import GaussianEnvelope, KerrParams, OptimalPhase
from ..quadrature import QuadratureSpec, integrate_1d
from .averages import exact_average_exponent
from .fock import FockOracleSpec, coherent_closed_form, fock_check, normal_order_residual
from .fourier import numeric_ft
from .photon_integrals import oracle_corr_smooth, oracle_photon_density, oracle_photon_density_1d

ENV = GaussianEnvelope(1.0)
FT_OMEGAS = (0.0, 0.5, 1.0, 2.0, 5.0)
BANDWIDTH_ASYMPTOTE = math.sqrt(1.0 + math.sqrt(2.0))


@dataclass(frozen=True)
class Case:
    id: str
    formula_ref: str
    oracle_ref: str
    tolerance: float
    run: Callable[[], float]


@dataclass(frozen=True)
class LedgerRow:
    id: str
    formula_ref: str
    oracle_ref: str
    tolerance: float
    achieved: float
    passed: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _rel(a, b) -> float:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-300)))


def _abs(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


# -- kernel -----------------------------------------------------------------

def _kernel_norms() -> float:
    k = kmod.ResponseKernel("exponential", 1.0)
    h_area = 2.0 * integrate_1d(lambda x: float(kmod.h_tilde(k, x)), 0.0, math.inf)[0]
    g_area = 2.0 * integrate_1d(lambda x: float(kmod.autocorr_g(k, x)), 0.0, math.inf)[0]
    return max(abs(h_area - float(kmod.ft_h(0.0))), abs(g_area - float(kmod.ft_g(0.0))))


def _autocorr_convolution() -> float:
    k = kmod.ResponseKernel("exponential", 0.1)
    errs = []
    for tau in (0.0, 0.03, 0.1, -0.25):
        conv = integrate_1d(lambda s: float(k.h(s) * k.h(s + tau)), -math.inf, math.inf,
                            points=(0.0, -tau))[0]
        errs.append(abs(conv - float(kmod.autocorr_g(k, tau))) / conv)
    return max(errs)


def _ft_pair(which: str) -> float:
    k = kmod.ResponseKernel("exponential", 1.0)
    if which == "h":
        num = numeric_ft(lambda th: kmod.h_tilde(k, th), FT_OMEGAS).value
        return _abs(num, kmod.ft_h(np.array(FT_OMEGAS)))
    num = numeric_ft(lambda th: kmod.autocorr_g(k, th), FT_OMEGAS).value
    return _abs(num, kmod.ft_g(np.array(FT_OMEGAS)))


# -- pulse ------------------------------------------------------------------

def _erfcx_oracle(which: str) -> float:
    p = KerrParams.from_phase(2.0, nu=10.0)
    k = p.kernel()
    t = np.array([-2.0, -1.0, 0.0, 0.5, 1.0, 2.0])
    nu = p.nu
    if which == "psi":
        ref = p.psi0 * nu * 0.5 * math.sqrt(math.pi) * special.erfcx(nu / 2 - t) * np.exp(-t * t)
        got = pulse.psi_exact(p, ENV, k, t)
    else:
        ref = p.mu0 * nu * 0.5 * math.sqrt(math.pi) * special.erfcx(nu - t) * np.exp(-t * t)
        got = pulse.mu_exact(p, ENV, k, t)
    return _rel(got, ref)


def _k_slow_vs_exact() -> float:
    p = KerrParams.from_phase(1.0, nu=100.0)
    k = p.kernel()
    errs = []
    for t1 in (0.0, 0.5, -1.0):
        for tau in (0.0, 0.005, 0.02, -0.01):
            ex = pulse.k_exact(p, ENV, k, t1, t1 + tau)
            errs.append(abs(ex - float(pulse.k_slow(p, ENV, k, t1, tau))) / ex)
    return max(errs)


def _k_symmetry() -> float:
    p = KerrParams.from_phase(1.0, nu=10.0)
    k = p.kernel()
    pairs = ((0.0, 0.1), (-0.3, 0.4), (1.0, 0.7))
    return max(abs(pulse.k_exact(p, ENV, k, a, b) - pulse.k_exact(p, ENV, k, b, a))
               / pulse.k_exact(p, ENV, k, a, b) for a, b in pairs)


# -- quadrature spectra -----------------------------------------------------

def _shot_noise() -> float:
    rng = np.random.default_rng(7)
    w, w0 = rng.uniform(0, 10, 100), rng.uniform(0, 10, 100)
    s_x, s_y = quadspec.general_spectrum(0.0, w, w0)
    return max(_abs(s_x, 0.25), _abs(s_y, 0.25))


def _uncertainty() -> float:
    s_x, s_y = quadspec.optimum_spectrum(np.logspace(-3, 3, 50))
    return _abs(s_x * s_y, 1.0 / 16.0)


def _general_vs_substitution() -> float:
    psi = np.array([0.1, 0.5, 1.0, 2.0, 5.0])[:, None, None]
    w = np.linspace(0.0, 4.0, 41)[None, :, None]
    w0 = np.array([0.0, 0.5, 1.0, 3.0])[None, None, :]
    big_phi = psi + quadspec.optimal_phase_value(psi, w0)
    direct = quadspec.spectrum_from_phase(psi, big_phi, w)
    closed = quadspec.general_spectrum(psi, w, w0)
    return max(_abs(closed[0], direct[0]), _abs(closed[1], direct[1]))


def _optimal_phase_scan() -> float:
    errs = []
    for psi in (0.3, 1.0, 4.0):
        for w0 in (0.0, 1.0):
            f = lambda phi: float(quadspec.spectrum_from_phase(psi, psi + phi, w0)[0])
            res = optimize.minimize_scalar(f, bounds=(-psi - 0.1, -psi + math.pi / 2 + 0.1),
                                           method="bounded", options={"xatol": 1e-12})
            best = float(quadspec.optimum_spectrum(psi * kmod.lorentzian(w0))[0])
            errs.append(abs(res.fun - best))
    return max(errs)


def _bandwidth_bisection() -> float:
    errs = []
    for psi in (0.01, 0.3, 1.0, 3.0, 30.0):
        level = quadspec.half_depth_level(psi)
        f = lambda w: float(quadspec.general_spectrum(psi, w, 0.0)[0]) - level
        root = optimize.brentq(f, 0.0, 10.0, xtol=1e-14, rtol=1e-14)
        errs.append(abs(root - quadspec.squeezing_bandwidth(psi)))
    return max(errs)


def _bandwidth_closed_form() -> float:
    psis = np.logspace(-2, 3, 21)
    return max(abs(quadspec.bandwidth_closed_form(p) - quadspec.squeezing_bandwidth(p))
               for p in psis)


def _spectrum_roundtrip() -> float:
    errs = []
    for psi0 in (0.5, 1.0):
        p = KerrParams.from_phase(psi0, nu=10.0)
        k = p.kernel()
        for w0 in (0.0, 1.0):
            fx = lambda th: quadspec.corr_rx_ry(p, ENV, k, OptimalPhase(w0), 0.0, th * p.tau_r,
                                                frozen_envelope=True).rx * p.tau_r
            fy = lambda th: quadspec.corr_rx_ry(p, ENV, k, OptimalPhase(w0), 0.0, th * p.tau_r,
                                                frozen_envelope=True).ry * p.tau_r
            s_x = numeric_ft(fx, FT_OMEGAS, delta_weight=quadspec.SHOT_NOISE).value
            s_y = numeric_ft(fy, FT_OMEGAS, delta_weight=quadspec.SHOT_NOISE).value
            ref = quadspec.spectrum_general(p, ENV, 0.0, np.array(FT_OMEGAS), w0)
            errs += [_abs(s_x, ref[0]), _abs(s_y, ref[1])]
    return max(errs)


def _argmins(psi0s: Iterable[float], omega0: float) -> np.ndarray:
    grid = np.linspace(0.0, 4.0, 4001)
    out = []
    for psi0 in psi0s:
        s_x = quadspec.general_spectrum(psi0, grid, omega0)[0]
        out.append(grid[int(np.argmin(s_x))])
    return np.array(out)


# -- exact average ----------------------------------------------------------

def exact_average_errors(gamma: float, psi0: float = 1.0, nu: float = 1e5) -> tuple[float, float]:
    """Relative errors of the exact exponent against (psi_slow, mu_slow) at t = 0."""
    p = KerrParams.from_phase(psi0, nu=nu, gamma=gamma)
    z = exact_average_exponent(p, ENV, p.kernel(), 0.0)
    psi = float(pulse.psi_slow(p, ENV, 0.0))
    mu = float(pulse.mu_slow(p, ENV, 0.0))
    return abs(z.imag - psi) / psi, abs(-z.real - mu) / mu


def exact_average_slopes(gammas=(1e-3, 1e-2)) -> tuple[float, float]:
    lo, hi = (exact_average_errors(g) for g in gammas)
    span = math.log10(gammas[1] / gammas[0])
    return (math.log10(hi[0] / lo[0]) / span, math.log10(hi[1] / lo[1]) / span)


# -- Fock -------------------------------------------------------------------

def _fock() -> float:
    lams = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)
    return max(abs(fock_check(FockOracleSpec(n), lam) - coherent_closed_form(n, lam))
               for n in (0.5, 1.0, 4.0, 9.0) for lam in lams)


# -- photon -----------------------------------------------------------------

def _peak_i1(psi0s=(0.0, 1.0)) -> float:
    errs = []
    for psi0 in psi0s:
        p = KerrParams.from_phase(psi0, nu=10.0)
        ref = 1.0 / math.sqrt(1.0 + 4.0 * psi0**2)
        errs.append(abs(oracle_photon_density(p, 0.0) - ref) / ref)
    return max(errs)


def _density_1d() -> float:
    errs = []
    for psi0 in (0.5, 2.0):
        p = KerrParams.from_phase(psi0, nu=10.0)
        for w in (0.0, 0.7, 1.5):
            errs.append(_rel(oracle_photon_density_1d(p, w), photon.photon_density_classical(p, w)))
    return max(errs)


def _relaxing_reduction() -> float:
    p = KerrParams.from_phase(1.0, nu=10.0, gamma=1e-12)
    w = np.linspace(0, 3, 13)
    return _rel(photon.photon_density_relaxing(p, w), photon.photon_density_classical(p, w))


def _corr_symmetry() -> float:
    p = KerrParams.from_phase(1.3, nu=10.0)
    w1, w2 = np.meshgrid(np.linspace(-1, 1, 9), np.linspace(-0.5, 1.5, 9))
    return _abs(photon.corr_closed_form(p, w1, w2), photon.corr_closed_form(p, w2, w1))


def _corr_vs_2d(points=((0.0, 0.0), (0.0, 0.04), (0.04, 0.04)), psi0s=(0.5, 1.0)) -> float:
    errs = []
    for psi0 in psi0s:
        p = KerrParams.from_phase(psi0, nu=10.0)
        for w1, w2 in points:
            ref = oracle_corr_smooth(p, w1, w2)
            errs.append(abs(float(photon.corr_closed_form(p, w1, w2)) - ref) / abs(ref))
    return max(errs)


def _origin_small_band() -> float:
    errs = []
    for psi0 in (0.3, 1.0, 3.0):
        p = KerrParams.from_phase(psi0, nu=10.0)
        ref = 0.5 * 0.75**2 * float(photon.corr_closed_form(p, 0.0, 0.0))
        errs.append(abs(photon.band_integral_origin(p, 0.75) - ref) / abs(ref))
    return max(errs)


def antibunching_curve(step: float = 0.05, nu: float = 10.0, width: float = 0.75):
    psi0s = np.round(np.arange(1, int(round(5.0 / step)) + 1) * step, 12)
    vals = np.array([photon.band_integral_origin(KerrParams.from_phase(x, nu=nu), width)
                     for x in psi0s])
    return psi0s, vals


def _antibunching() -> float:
    return float(np.max(antibunching_curve()[1]))


def _antibunching_minimum() -> float:
    psi0s, vals = antibunching_curve()
    return abs(float(psi0s[int(np.argmin(vals))]) - 1.0)


# -- registry ---------------------------------------------------------------

CASES: tuple[Case, ...] = (
    Case("kernel.norms", "kernel.ft_h(0), kernel.ft_g(0)", "adaptive quadrature of h~, g", 1e-9,
         _kernel_norms),
    Case("kernel.autocorr_convolution", "kernel.autocorr_g", "quadrature of int h(s) h(s+tau) ds",
         1e-9, _autocorr_convolution),
    Case("kernel.ft_h", "kernel.ft_h", "oracle.numeric_ft", 1e-6, lambda: _ft_pair("h")),
    Case("kernel.ft_g", "kernel.ft_g", "oracle.numeric_ft", 1e-6, lambda: _ft_pair("g")),
    Case("pulse.psi_exact_erfcx", "pulse.psi_exact", "erfcx closed form of the kernel integral",
         1e-8, lambda: _erfcx_oracle("psi")),
    Case("pulse.mu_exact_erfcx", "pulse.mu_exact", "erfcx closed form of the kernel integral",
         1e-8, lambda: _erfcx_oracle("mu")),
    Case("pulse.k_slow_vs_exact", "pulse.k_slow", "pulse.k_exact at nu=100", 5e-4,
         _k_slow_vs_exact),
    Case("pulse.k_symmetry", "pulse.k_exact", "swap t1 <-> t2", 1e-9, _k_symmetry),
    Case("quadspec.shot_noise", "quadspec.general_spectrum(psi=0)", "constant 1/4", 1e-15,
         _shot_noise),
    Case("quadspec.uncertainty_product", "quadspec.optimum_spectrum", "s_x s_y = 1/16", 1e-12,
         _uncertainty),
    Case("quadspec.general_vs_substitution", "quadspec.general_spectrum",
         "spectrum_from_phase with optimal phase substituted", 1e-12, _general_vs_substitution),
    Case("quadspec.optimal_phase_scan", "quadspec.optimum_spectrum",
         "bounded scalar minimisation over the input phase", 1e-10, _optimal_phase_scan),
    Case("quadspec.bandwidth_bisection", "quadspec.squeezing_bandwidth",
         "brentq on S_X(Omega) - half-depth level", 1e-9, _bandwidth_bisection),
    Case("quadspec.bandwidth_closed_form", "quadspec.bandwidth_closed_form",
         "quadspec.squeezing_bandwidth (quadratic root)", 1e-9, _bandwidth_closed_form),
    Case("quadspec.bandwidth_small_psi", "quadspec.squeezing_bandwidth(1e-6)", "limit 1", 1e-6,
         lambda: abs(quadspec.squeezing_bandwidth(1e-6) - 1.0)),
    Case("quadspec.bandwidth_asymptote", "quadspec.squeezing_bandwidth(1e3)",
         "limit sqrt(1+sqrt 2)", 1e-3,
         lambda: abs(quadspec.squeezing_bandwidth(1e3) - BANDWIDTH_ASYMPTOTE)),
    Case("quadspec.spectrum_roundtrip", "quadspec.spectrum_general",
         "oracle.numeric_ft of quadspec.corr_rx_ry (frozen envelope) + 1/4", 1e-4,
         _spectrum_roundtrip),
    Case("quadspec.argmin_omega0_zero", "quadspec.general_spectrum(Omega0=0)",
         "grid argmin over [0, 4] is 0", 0.0,
         lambda: float(np.max(_argmins((0.25, 0.5, 1.0, 2.0, 5.0), 0.0)))),
    Case("quadspec.argmin_omega0_one_high", "quadspec.general_spectrum(Omega0=1)",
         "grid argmin within 0.02 of 1 for psi0 in {1.5, 2, 5}", 0.02,
         lambda: float(np.max(np.abs(_argmins((1.5, 2.0, 5.0), 1.0) - 1.0)))),
    Case("quadspec.argmin_omega0_one_low", "quadspec.general_spectrum(Omega0=1)",
         "grid argmin within 0.1 of 0 for psi0=0.5", 0.1,
         lambda: float(_argmins((0.5,), 1.0)[0])),
    Case("oracle.fock_coherent", "exp(n (e^{i lam} - 1))", "oracle.fock_check", 1e-10, _fock),
    Case("oracle.normal_order_matrix", "normally ordered series of exp(i lam n)",
         "truncated ladder matrices, n_max=10", 1e-10,
         lambda: max(normal_order_residual(10, lam) for lam in np.linspace(0, 2 * math.pi, 16))),
    Case("oracle.exact_average_phase_slope", "pulse.psi_slow",
         "oracle.exact_average_exponent, |slope - 2|", 0.2,
         lambda: abs(exact_average_slopes()[0] - 2.0)),
    Case("oracle.exact_average_decay_slope", "pulse.mu_slow",
         "oracle.exact_average_exponent, |slope - 2|", 0.2,
         lambda: abs(exact_average_slopes()[1] - 2.0)),
    Case("photon.peak_suppression", "photon.photon_density_classical(0)",
         "(1 + 4 psi0^2)^{-1/2}", 1e-12,
         lambda: max(_rel(photon.photon_density_classical(KerrParams.from_phase(x), 0.0),
                          1 / math.sqrt(1 + 4 * x * x)) for x in (0.0, 0.5, 1.0, 3.0))),
    Case("photon.peak_i1_oracle", "photon.photon_density_classical(0)",
         "oracle.integrate_2d_i I1 / 2 pi", 1e-4, _peak_i1),
    Case("photon.density_1d_oracle", "photon.photon_density_classical",
         "oracle.oracle_photon_density_1d", 1e-8, _density_1d),
    Case("photon.relaxing_reduction", "photon.photon_density_relaxing(gamma -> 0)",
         "photon.photon_density_classical", 1e-8, _relaxing_reduction),
    Case("photon.corr_symmetry", "photon.corr_closed_form", "swap Omega1 <-> Omega2", 1e-14,
         _corr_symmetry),
    Case("photon.corr_vs_2d", "photon.corr_closed_form", "oracle.oracle_corr_smooth (I2, I3)",
         1e-3, _corr_vs_2d),
    Case("photon.origin_small_band", "photon.band_integral_origin",
         "dW^2 R(0,0) / 2 from photon.corr_closed_form", 1e-12, _origin_small_band),
    Case("photon.antibunching_sign", "photon.band_integral_origin",
         "max over psi0 in (0, 5] must be <= 0", 0.0, _antibunching),
    Case("photon.antibunching_minimum", "photon.band_integral_origin",
         "|argmin psi0 - 1| over (0, 5]", 0.5, _antibunching_minimum),
)

CASE_IDS = tuple(c.id for c in CASES)


def run_case(case: Case, tol_scale: float = 1.0) -> LedgerRow:
    tol = case.tolerance * tol_scale
    achieved = float(case.run())
    return LedgerRow(case.id, case.formula_ref, case.oracle_ref, tol, achieved,
                     bool(achieved <= tol))


def run_suite(case_ids: Optional[Iterable[str]] = None,
              tol_scale: float = 1.0) -> list[LedgerRow]:
    """Run the selected cases (all by default) and return the tolerance ledger."""
    if not tol_scale > 0:
        raise ValueError("tol_scale must be positive")
    if case_ids is None:
        selected = CASES
    else:
        wanted = list(case_ids)
        unknown = [c for c in wanted if c not in CASE_IDS]
        if unknown:
            raise KeyError(f"unknown case id(s): {', '.join(unknown)}")
        selected = tuple(c for c in CASES if c.id in wanted)
    return [run_case(c, tol_scale) for c in selected]
