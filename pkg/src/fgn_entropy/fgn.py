"""Fractional-Gaussian-noise primitives.

Autocovariance of the unit-lag increments of fractional Brownian motion,
their covariance matrix (as a Toeplitz first row), the spectral density with
its Hurwitz-zeta lattice closure, and the closed-form lower bound on the
innovation variance.
"""

import math
from dataclasses import dataclass

import numpy as np

from .specfun import hurwitz_zeta, ln_gamma

# Above this lag the direct second difference of k**(2H) has lost roughly
# 2*log10(k) digits to cancellation; switch to the binomial expansion.
SERIES_CUTOFF = 10_000


@dataclass(frozen=True)
class HurstIndex:
    """Validated Hurst index in the closed interval [0, 1]."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not (0.0 <= v <= 1.0):  # also rejects NaN
            raise ValueError(f"Hurst index must lie in [0, 1], got {self.value!r}")
        object.__setattr__(self, "value", v)


def as_hurst(h) -> HurstIndex:
    """Coerce a float or HurstIndex to a validated HurstIndex."""
    return h if isinstance(h, HurstIndex) else HurstIndex(float(h))


@dataclass(frozen=True, eq=False)
class AutocovarianceSequence:
    """Autocovariances ``rho_0 .. rho_{n-1}`` of fGn with Hurst index ``h``.

    ``values`` is the first row of the n-by-n Toeplitz covariance matrix of
    n consecutive increments; ``rho_0 = 1``.
    """

    h: HurstIndex
    values: np.ndarray

    @property
    def length(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class InnovationBound:
    """Closed-form lower bound on the one-step innovation variance.

    ``sigma2_h`` equals ``c_h**2 / (2H)`` where ``c_h`` is the normalizing
    constant of the moving-average representation of fractional Brownian
    motion over the whole axis.
    """

    h: HurstIndex
    sigma2_h: float
    c_h: float


def _even_binomial_coeffs(alpha: float) -> list:
    """Coefficients C(alpha, 2j) for j = 1..4 of (1+x)**alpha."""
    coeffs = []
    num = 1.0
    for i in range(8):
        num *= alpha - i
        if i % 2 == 1:
            coeffs.append(num / math.factorial(i + 1))
    return coeffs


def _double_autocov(H: float, kmax: int) -> np.ndarray:
    """2*rho_k for k = 1..kmax, cancellation-safe for large k.

    Direct second difference up to SERIES_CUTOFF, then the binomial series
    of k**2H * ((1+1/k)**2H + (1-1/k)**2H - 2) truncated at the k**-8 term,
    which restores full precision (the truncation error is O(k**-10)
    relative to the leading k**-2 term).
    """
    out = np.empty(kmax)
    if kmax == 0:
        return out
    a = 2.0 * H
    kc = min(kmax, SERIES_CUTOFF)
    k = np.arange(1.0, kc + 1.0)
    out[:kc] = (k + 1.0) ** a - 2.0 * k**a + np.abs(k - 1.0) ** a
    out[0] = 2.0**a - 2.0  # (k-1)**2H at k=1 is 0 for every H, incl. H=0
    if kmax > kc:
        coeffs = _even_binomial_coeffs(a)
        k = np.arange(kc + 1.0, kmax + 1.0)
        x2 = 1.0 / (k * k)
        acc = np.zeros_like(k)
        for c in reversed(coeffs):
            acc = acc * x2 + c
        out[kc:] = 2.0 * k**a * acc * x2
    return out


def autocovariance(h, k: int) -> float:
    """Autocovariance ``rho_k(H)`` of fractional Gaussian noise.

    ``rho_0 = 1`` and ``rho_k = ((k+1)**2H - 2 k**2H + (k-1)**2H) / 2`` for
    k >= 1.  The endpoint values are the continuous limits: at H = 0 this
    gives ``rho_1 = -1/2`` and ``rho_k = 0`` for k >= 2, at H = 1 it gives
    ``rho_k = 1`` for all k.  Lags beyond SERIES_CUTOFF use the stable
    series expansion.
    """
    H = as_hurst(h).value
    k = int(k)
    if k < 0:
        raise ValueError("lag k must be nonnegative")
    if k == 0:
        return 1.0
    if k == 1:
        return 2.0 ** (2.0 * H - 1.0) - 1.0
    a = 2.0 * H
    if k <= SERIES_CUTOFF:
        return 0.5 * ((k + 1.0) ** a - 2.0 * float(k) ** a + (k - 1.0) ** a)
    x2 = 1.0 / (float(k) * float(k))
    acc = 0.0
    for c in reversed(_even_binomial_coeffs(a)):
        acc = acc * x2 + c
    return float(k) ** a * acc * x2


def autocovariance_sequence(h, n: int) -> AutocovarianceSequence:
    """First ``n`` autocovariances of fGn, ``rho_0 .. rho_{n-1}``."""
    h = as_hurst(h)
    n = int(n)
    if n < 1:
        raise ValueError("sequence length must be at least 1")
    values = np.empty(n)
    values[0] = 1.0
    if n > 1:
        values[1:] = 0.5 * _double_autocov(h.value, n - 1)
    return AutocovarianceSequence(h=h, values=values)


def lattice_sum(s: float, mu: float) -> float:
    """``sum_{k in Z} |mu + k|**-s`` for ``0 < |mu| <= 1/2`` and ``s > 1``.

    Closed in terms of the Hurwitz zeta function at positive second
    argument: the k >= 0 branch is ``zeta(s, mu)`` and the k <= -1 branch is
    ``zeta(s, 1 - mu)``.
    """
    mu = abs(float(mu))
    if not 0.0 < mu <= 0.5:
        raise ValueError(f"lattice_sum requires 0 < |mu| <= 1/2, got {mu!r}")
    return hurwitz_zeta(s, mu) + hurwitz_zeta(s, 1.0 - mu)


def spectral_density(h, lam: float) -> float:
    """Spectral density ``f(lambda)`` of fGn on ``[-pi, pi] \\ {0}``.

    ``f(lambda) = sin(pi H) Gamma(2H+1) (1 - cos lambda) / pi``
    times ``sum_{k in Z} |lambda + 2 pi k|**(-2H-1)``, with the lattice sum
    evaluated by :func:`lattice_sum`.  Defined for ``0 < H < 1``; the origin
    is rejected (the lattice sum diverges at lambda = 0, where the density
    itself is unbounded for H > 1/2 and vanishing for H < 1/2).
    """
    H = as_hurst(h).value
    if not 0.0 < H < 1.0:
        raise ValueError("spectral density is defined for 0 < H < 1")
    lam = float(lam)
    if lam == 0.0:
        raise ValueError("spectral density is undefined at lambda = 0")
    if not -math.pi <= lam <= math.pi:
        raise ValueError(f"lambda must lie in [-pi, pi], got {lam!r}")
    s = 2.0 * H + 1.0
    mu = abs(lam) / (2.0 * math.pi)
    scale = math.sin(math.pi * H) * math.exp(ln_gamma(s)) / math.pi
    return scale * (1.0 - math.cos(lam)) * (2.0 * math.pi) ** (-s) * lattice_sum(s, mu)


def innovation_variance_lower_bound(h) -> InnovationBound:
    """Lower bound ``sigma_H**2`` on the innovation variance of fGn.

    ``sigma_H**2 = Gamma(3/2 - H) / (Gamma(H + 1/2) Gamma(2 - 2H))``,
    evaluated through log-gamma differences.  Also carries the
    moving-average constant ``c_H = sqrt(2 H sigma_H**2)``.  Defined for
    ``0 < H < 1`` (Gamma(2 - 2H) has a pole at H = 1).
    """
    h = as_hurst(h)
    H = h.value
    if not 0.0 < H < 1.0:
        raise ValueError("innovation bound is defined for 0 < H < 1")
    sigma2 = math.exp(ln_gamma(1.5 - H) - ln_gamma(H + 0.5) - ln_gamma(2.0 - 2.0 * H))
    return InnovationBound(h=h, sigma2_h=sigma2, c_h=math.sqrt(2.0 * H * sigma2))
