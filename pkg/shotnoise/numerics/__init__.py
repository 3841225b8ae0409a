"""Numerical kernel: quadrature, special functions and Volterra functions."""

from .options import INDEX_INTEGRAL_CONFIG, QuadratureConfig, SeriesTruncation
from .quadrature import (
    QuadratureResult,
    integrate_finite,
    integrate_oscillatory_sine,
    integrate_semi_infinite,
)
from .special_functions import (
    EULER_GAMMA,
    ReciprocalGammaCoeffs,
    bessel_I,
    bessel_I_series,
    bessel_K,
    bessel_K_integral,
    log_gamma,
    log_parabolic_cylinder_D,
    lower_incomplete_gamma_regularized,
    parabolic_cylinder_D,
    reciprocal_gamma_coeffs,
)
from .volterra import (
    Z_SWITCH,
    fransen_wrigge_phi,
    volterra_mu,
    volterra_nu,
    volterra_nu_asymptotic,
)
