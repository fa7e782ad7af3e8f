"""Entropy of fractional Gaussian noise as a function of the Hurst index.

Numerical toolkit for the block entropy, entropy rate, covariance
determinants and alternative entropy functionals of fractional Gaussian
noise, with independent cross-checking routes (Levinson-Durbin prediction
errors against dense Cholesky and brute-force determinants, Hurwitz-zeta
lattice closures against direct summation).
"""

from .entropy import (
    LOG_2PI,
    RHO2_TURNING_POINT,
    EntropyReport,
    MonotonicityScan,
    ScanViolation,
    closed_form_det2,
    closed_form_det3,
    fgn_entropy,
    gaussian_entropy,
    monotonicity_scan,
)
from .fgn import (
    AutocovarianceSequence,
    HurstIndex,
    InnovationBound,
    autocovariance,
    autocovariance_sequence,
    innovation_variance_lower_bound,
    lattice_sum,
    spectral_density,
)
from .functionals import (
    AsymptoticReference,
    FunctionalReport,
    covariance_sums,
    e1_asymptotic,
    e2_asymptotic,
    functional_values,
    shape_factor,
)
from .rate import (
    RATE_AT_H0,
    RATE_AT_H1,
    RateReport,
    block_entropy_lower_bound,
    convergence_study,
    entropy_rate_lower_bound,
    entropy_rate_spectral,
)
from .specfun import QuadratureError, QuadratureSpec, hurwitz_zeta, integrate, ln_gamma
from .toeplitz import (
    LogDetResult,
    NotPositiveDefiniteError,
    SingularMatrixError,
    cholesky_oracle,
    log_det,
    prediction_errors,
)
from .verify import run_verification

__all__ = [
    "AsymptoticReference",
    "AutocovarianceSequence",
    "EntropyReport",
    "FunctionalReport",
    "HurstIndex",
    "InnovationBound",
    "LOG_2PI",
    "LogDetResult",
    "MonotonicityScan",
    "NotPositiveDefiniteError",
    "QuadratureError",
    "QuadratureSpec",
    "RATE_AT_H0",
    "RATE_AT_H1",
    "RHO2_TURNING_POINT",
    "RateReport",
    "ScanViolation",
    "SingularMatrixError",
    "autocovariance",
    "autocovariance_sequence",
    "block_entropy_lower_bound",
    "cholesky_oracle",
    "closed_form_det2",
    "closed_form_det3",
    "convergence_study",
    "covariance_sums",
    "e1_asymptotic",
    "e2_asymptotic",
    "entropy_rate_lower_bound",
    "entropy_rate_spectral",
    "fgn_entropy",
    "functional_values",
    "gaussian_entropy",
    "hurwitz_zeta",
    "innovation_variance_lower_bound",
    "integrate",
    "lattice_sum",
    "ln_gamma",
    "log_det",
    "monotonicity_scan",
    "prediction_errors",
    "run_verification",
    "shape_factor",
    "spectral_density",
]

__version__ = "0.1.0"
