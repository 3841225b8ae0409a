"""Transforms of the stationary law, tail approximations and inversions."""

from .amplitude import amplitude_transform, ein, exponent_integral
from .inversion import (
    InversionResult,
    abs_cdf_from_characteristic,
    fixed_exponent_abs_cdf,
    fourier_cdf_inversion,
    laplace_kernel,
)
from .stationary import (
    law_transform,
    small_s_expansion_coeffs,
    stationary_transform,
)
from .tails import (
    ExponentialSumApprox,
    exponential_sum_tail,
    tail_cdf_xi,
    tail_density_aleph,
)
