"""Single-mode truncated Fock-space checks of the normal-ordering identity.

For one mode the theorem reduces to

    exp(i lam a^+ a) = :exp[(e^{i lam} - 1) a^+ a]:

whose coherent-state average is ``exp(n_bar (e^{i lam} - 1))``.  Both the
operator identity and the average are checked against explicit sums in a
truncated number basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.special import gammaln

from ..errors import CutoffError


def min_cutoff(n_bar: float) -> int:
    """Smallest cutoff with Poisson tail below ~1e-12: ``n + 12 sqrt(n) + 20``."""
    return int(math.ceil(n_bar + 12.0 * math.sqrt(n_bar) + 20.0))


@dataclass(frozen=True)
class FockOracleSpec:
    n_bar: float
    cutoff: Optional[int] = None

    def __post_init__(self):
        if self.n_bar < 0:
            raise ValueError("n_bar must be non-negative")
        if self.cutoff is not None and self.cutoff < min_cutoff(self.n_bar):
            raise CutoffError(f"cutoff {self.cutoff} < required {min_cutoff(self.n_bar)} "
                              f"for n_bar={self.n_bar}")

    @property
    def n_max(self) -> int:
        return self.cutoff if self.cutoff is not None else min_cutoff(self.n_bar)


def coherent_amplitudes(n_bar: float, n_max: int) -> np.ndarray:
    """Number-basis amplitudes of the coherent state with real alpha = sqrt(n_bar)."""
    n = np.arange(n_max + 1)
    if n_bar == 0:
        out = np.zeros(n_max + 1)
        out[0] = 1.0
        return out
    return np.exp(0.5 * (n * math.log(n_bar) - n_bar - gammaln(n + 1)))


def fock_check(spec: FockOracleSpec, lam: float) -> complex:
    """``<alpha| exp(i lam n) |alpha>`` by explicit summation over the truncated basis."""
    c = coherent_amplitudes(spec.n_bar, spec.n_max)
    n = np.arange(c.size)
    return complex(np.sum(c * c * np.exp(1j * lam * n)))


def coherent_closed_form(n_bar: float, lam: float) -> complex:
    return complex(np.exp(n_bar * (np.exp(1j * lam) - 1.0)))


def annihilation(n_max: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, n_max + 1, dtype=float)), k=1)


def normal_order_residual(n_max: int, lam: float) -> float:
    """Max deviation between ``exp(i lam a^+ a)`` and its normally ordered series.

    The series ``sum_k (e^{i lam} - 1)^k / k! (a^+)^k a^k`` is built from the
    truncated ladder matrices; it terminates at k = n_max.
    """
    a = annihilation(n_max)
    ad = a.T
    lhs = np.diag(np.exp(1j * lam * np.arange(n_max + 1)))
    x = np.exp(1j * lam) - 1.0
    rhs = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    ak = np.eye(n_max + 1)
    adk = np.eye(n_max + 1)
    coef = 1.0 + 0j
    for k in range(n_max + 1):
        rhs += coef * (adk @ ak)
        ak = a @ ak
        adk = adk @ ad
        coef *= x / (k + 1)
    return float(np.max(np.abs(lhs - rhs)))
