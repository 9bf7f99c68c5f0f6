"""Independent brute-force oracles for every closed form in the library."""

from ..quadrature import QuadratureSpec, integrate_1d, integrate_1d_complex, integrate_2d_complex
from .averages import exact_average_exp_o, exact_average_exponent
from .fock import (FockOracleSpec, coherent_amplitudes, coherent_closed_form, fock_check,
                   min_cutoff, normal_order_residual)
from .fourier import FourierValue, numeric_ft
from .photon_integrals import (integrate_2d_i, oracle_corr_smooth, oracle_photon_density,
                               oracle_photon_density_1d)
from .suite import CASE_IDS, CASES, Case, LedgerRow, run_case, run_suite
