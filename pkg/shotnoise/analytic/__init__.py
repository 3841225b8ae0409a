"""Closed-form densities and distribution functions of the stationary law."""

from .base import (
    SMALL_U,
    AnalyticLaw,
    DensityEvaluation,
    EvaluationGrid,
    regime_of,
)
from .factory import analytic_law
from .fixed_deterministic import (
    DelayTable,
    FixedDeterministicLaw,
    fixed_A_cdf,
    fixed_A_density,
    solve_delay_dde,
)
from .gamma_amplitude import (
    FixedGammaAmplitudeLaw,
    MixedGammaAmplitudeLaw,
    gamma_amp_beta1_cdf,
    gamma_amp_beta1_density,
    gamma_amp_beta1_density_fixedA,
    gamma_amp_beta2_density,
    gamma_amp_beta2_density_fixedA,
    gamma_amp_beta_half_density,
    gamma_amp_beta_half_density_fixedA,
)
from .laplace_amplitude import (
    FixedLaplaceLaw,
    MixedLaplaceLaw,
    laplace_amp_beta1_density,
    laplace_amp_beta1_density_fixedA,
    laplace_amp_beta2_density,
    laplace_amp_beta2_density_fixedA,
    laplace_amp_cdf,
)
from .mixed_deterministic import (
    HandoffGap,
    MixedDeterministicLaw,
    mixed_alpha1_cdf,
    mixed_alpha1_density,
    mixed_unit_interval_cdf,
    mixed_unit_interval_density,
    tail_handoff_gap,
)
from .mixture import mix_over_exponent
