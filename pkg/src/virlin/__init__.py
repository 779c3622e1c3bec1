"""virlin: virial-theorem linearization of nonlinear oscillators, plus Bratu.

The package has two halves.  For conservative oscillators x'' + f(x) = 0
with odd f and x*f(x) > 0, it computes the amplitude-dependent frequency
omega(A) = sqrt(b1(A)/A) from the first Chebyshev coefficient of the
force, the identical frequency from the virial theorem with a cosine
ansatz, and exact reference periods to judge both.  For the Bratu
problem u'' + lambda*e^u = 0, u(0) = u(1) = 0, it provides the exact
solution branch with its fold, virial-quotient branches for trial
function families, and the Taylor-linearized branch that misses the
fold entirely.
"""

from .bratu import (
    BifurcationBranch,
    BranchPoint,
    CriticalPoint,
    NoSolutionError,
    TrialFamily,
    bifurcation_diagram,
    critical_theta,
    exact_slope,
    exact_trial,
    exact_u,
    lambda_of_theta,
    poly_trial,
    poly_trial_lambda,
    sine_trial,
    sine_trial_lambda,
    solve_theta,
    taylor_slope,
    taylor_solution,
    trial_critical_point,
    virial_lambda,
)
from .linearize import (
    ChebyshevExpansion,
    FrequencyEstimate,
    ModelRestrictionError,
    chebyshev_coefficient,
    expand_force,
    frequency_chebyshev,
    frequency_ode_oracle,
    frequency_virial_cosine,
)
from .oscillator import (
    ForceModel,
    IntegrationError,
    ModelValidationError,
    PeriodDetectionError,
    Trajectory,
    exact_period,
    get_model,
    integrate,
    period_from_trajectory,
    registered_models,
)
from .specfun import SeriesControl, bessel_i1, chebyshev_t, erf, struve_l1
from .virial import VirialReport, hypervirial_residual, one_period_trajectory, virial_check

__version__ = "0.1.0"

__all__ = [
    "BifurcationBranch",
    "BranchPoint",
    "ChebyshevExpansion",
    "CriticalPoint",
    "ForceModel",
    "FrequencyEstimate",
    "IntegrationError",
    "ModelRestrictionError",
    "ModelValidationError",
    "NoSolutionError",
    "PeriodDetectionError",
    "SeriesControl",
    "Trajectory",
    "TrialFamily",
    "VirialReport",
    "bessel_i1",
    "bifurcation_diagram",
    "chebyshev_coefficient",
    "chebyshev_t",
    "critical_theta",
    "erf",
    "exact_period",
    "exact_slope",
    "exact_trial",
    "exact_u",
    "expand_force",
    "frequency_chebyshev",
    "frequency_ode_oracle",
    "frequency_virial_cosine",
    "get_model",
    "hypervirial_residual",
    "integrate",
    "lambda_of_theta",
    "one_period_trajectory",
    "period_from_trajectory",
    "poly_trial",
    "poly_trial_lambda",
    "registered_models",
    "sine_trial",
    "sine_trial_lambda",
    "solve_theta",
    "struve_l1",
    "taylor_slope",
    "taylor_solution",
    "trial_critical_point",
    "virial_check",
    "virial_lambda",
]
