"""Symmetric Toeplitz linear algebra for stationary autocovariances.

Prediction-error (conditional-variance) recursion, log-determinants built
from it, and a dense Cholesky factorization kept as an independent
cross-check.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import toeplitz as _dense_toeplitz
from scipy.linalg.lapack import dpotrf as _dpotrf

from .fgn import AutocovarianceSequence

# Below this prediction variance the matrix is treated as numerically
# singular (e.g. fGn with H = 1 and n >= 2).
EPS_SINGULAR = 1e-300

# Dense-oracle memory bound.
MAX_DENSE_ORDER = 4096


class SingularMatrixError(ArithmeticError):
    """The Toeplitz matrix is numerically singular.

    ``index`` is the 1-based step at which the prediction variance fell to
    or below EPS_SINGULAR.
    """

    def __init__(self, index):
        super().__init__(
            f"prediction variance r({index}) <= {EPS_SINGULAR:g}; matrix is "
            "numerically singular"
        )
        self.index = index


class NotPositiveDefiniteError(ArithmeticError):
    """Dense Cholesky failed; ``pivot`` is the 1-based failing pivot."""

    def __init__(self, pivot):
        super().__init__(f"leading minor of order {pivot} is not positive definite")
        self.pivot = pivot


@dataclass(frozen=True)
class LogDetResult:
    """Log-determinant of an n-by-n Toeplitz covariance matrix.

    ``det`` is ``exp(log_det)`` and may underflow to 0; ``log_det`` is the
    authoritative value.  ``log_det = -inf`` with ``det = 0`` marks an
    exactly singular matrix.
    """

    log_det: float
    det: float
    n: int


def _first_row(acov) -> np.ndarray:
    if isinstance(acov, AutocovarianceSequence):
        return acov.values
    return np.asarray(acov, dtype=float)


def prediction_errors(acov) -> np.ndarray:
    """Conditional variances ``r(1) .. r(n)`` via the Durbin recursion.

    ``r(k)`` is the variance of the k-th sample of the stationary process
    given the previous k-1, so ``r(1)`` equals ``rho_0``.  The recursion
    updates the order-k prediction coefficients through reflection
    coefficients in O(n^2) total work and O(n) memory.

    Accepts an :class:`~fgn_entropy.fgn.AutocovarianceSequence` or any
    1-D array holding the first row of the Toeplitz matrix.  Raises
    :class:`SingularMatrixError` as soon as an intermediate variance drops
    to EPS_SINGULAR or below.
    """
    rho = _first_row(acov)
    n = len(rho)
    if n < 1:
        raise ValueError("autocovariance sequence must be nonempty")
    r = np.empty(n)
    r[0] = rho[0]
    if rho[0] <= EPS_SINGULAR:
        raise SingularMatrixError(1)
    if n == 1:
        return r
    coef = np.zeros(n)  # order-k coefficients live in coef[1..k]
    err = rho[0]
    for k in range(1, n):
        kappa = (rho[k] - coef[1:k] @ rho[k - 1:0:-1]) / err
        coef[1:k], coef[k] = coef[1:k] - kappa * coef[k - 1:0:-1], kappa
        err *= 1.0 - kappa * kappa
        if err <= EPS_SINGULAR:
            raise SingularMatrixError(k + 1)
        r[k] = err
    return r


def log_det(acov) -> LogDetResult:
    """Log-determinant ``sum_k log r(k)`` of the Toeplitz matrix.

    For an fGn sequence at the H = 1 endpoint with n >= 2 the matrix is
    exactly singular; this is reported as the distinguished value
    ``log_det = -inf, det = 0`` instead of an error so that sweeps over the
    full Hurst range stay total.  Other singular inputs raise
    :class:`SingularMatrixError`.
    """
    rho = _first_row(acov)
    n = len(rho)
    if isinstance(acov, AutocovarianceSequence) and acov.h.value == 1.0 and n >= 2:
        return LogDetResult(log_det=-math.inf, det=0.0, n=n)
    r = prediction_errors(rho)
    ld = float(np.sum(np.log(r)))
    return LogDetResult(log_det=ld, det=math.exp(ld), n=n)


def cholesky_oracle(acov):
    """Dense-Cholesky log-determinant, an O(n^3) independent cross-check.

    Materializes the full Toeplitz matrix, factors it, and returns
    ``(LogDetResult, diag_sq)`` where ``diag_sq`` holds the squared Cholesky
    diagonal; the k-th entry equals the prediction error ``r(k)``.

    Raises :class:`NotPositiveDefiniteError` with the failing pivot when the
    matrix is not numerically positive definite, and ``ValueError`` beyond
    MAX_DENSE_ORDER.
    """
    rho = _first_row(acov)
    n = len(rho)
    if n > MAX_DENSE_ORDER:
        raise ValueError(f"dense oracle limited to n <= {MAX_DENSE_ORDER}, got {n}")
    factor, info = _dpotrf(_dense_toeplitz(rho), lower=1)
    if info > 0:
        raise NotPositiveDefiniteError(pivot=int(info))
    if info < 0:
        raise ValueError(f"invalid argument {-info} passed to dpotrf")
    diag = np.diag(factor)
    ld = float(2.0 * np.sum(np.log(diag)))
    return LogDetResult(log_det=ld, det=math.exp(ld), n=n), diag**2
