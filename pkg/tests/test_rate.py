import math

import numpy as np
import pytest

from fgn_entropy.entropy import LOG_2PI, fgn_entropy
from fgn_entropy.fgn import autocovariance_sequence, innovation_variance_lower_bound
from fgn_entropy.rate import (
    RATE_AT_H0,
    RATE_AT_H1,
    block_entropy_lower_bound,
    convergence_study,
    entropy_rate_lower_bound,
    entropy_rate_spectral,
)
from fgn_entropy.toeplitz import prediction_errors
from oracles import ENTROPY_RATE_H0, ENTROPY_RATE_WHITE


class TestEntropyRateSpectral:
    def test_white_noise(self):
        assert entropy_rate_spectral(0.5) == pytest.approx(ENTROPY_RATE_WHITE, abs=1e-4)

    def test_h_to_zero_limit(self):
        assert entropy_rate_spectral(1e-5) == pytest.approx(ENTROPY_RATE_H0, abs=1e-3)
        assert RATE_AT_H0 == pytest.approx(ENTROPY_RATE_H0, rel=1e-14)

    def test_long_memory_bracketing(self):
        rate = entropy_rate_spectral(0.9)
        assert rate < ENTROPY_RATE_WHITE
        assert rate > entropy_rate_lower_bound(0.9)

    def test_unbounded_decay_towards_h_one(self):
        assert entropy_rate_spectral(0.999) < -1.0
        assert RATE_AT_H1 == -math.inf

    @pytest.mark.parametrize("H", [0.0, 1.0])
    def test_domain(self, H):
        with pytest.raises(ValueError):
            entropy_rate_spectral(H)

    def test_maximum_at_half(self):
        peak = entropy_rate_spectral(0.5)
        for H in np.round(np.arange(0.02, 1.0, 0.02), 10):
            rate = entropy_rate_spectral(H)
            assert peak >= rate
            if abs(H - 0.5) > 1e-9:
                assert peak - rate > 1e-8


class TestEntropyRateLowerBound:
    def test_tight_at_half(self):
        assert entropy_rate_lower_bound(0.5) == pytest.approx(ENTROPY_RATE_WHITE, rel=1e-14)

    def test_tight_at_h_zero_limit(self):
        assert entropy_rate_lower_bound(1e-9) == pytest.approx(ENTROPY_RATE_H0, abs=1e-7)

    def test_dominated_by_rate(self):
        for H in np.round(np.arange(0.02, 1.0, 0.02), 10):
            assert entropy_rate_lower_bound(H) <= entropy_rate_spectral(H) + 1e-6

    @pytest.mark.parametrize("H", [0.0, 1.0])
    def test_domain(self, H):
        with pytest.raises(ValueError):
            entropy_rate_lower_bound(H)


class TestBlockEntropyLowerBound:
    def test_tight_at_half(self):
        bound = block_entropy_lower_bound(0.5, 10)
        assert bound == pytest.approx(10 * ENTROPY_RATE_WHITE, rel=1e-14)
        assert bound == pytest.approx(fgn_entropy(0.5, 10).entropy, rel=1e-14)

    @pytest.mark.parametrize("H,n", [(0.3, 50), (0.9, 5)])
    def test_dominated_by_entropy(self, H, n):
        assert block_entropy_lower_bound(H, n) <= fgn_entropy(H, n).entropy + 1e-8

    def test_domain(self):
        with pytest.raises(ValueError):
            block_entropy_lower_bound(1.0, 5)
        with pytest.raises(ValueError):
            block_entropy_lower_bound(0.5, 0)


class TestConvergenceStudy:
    def test_white_noise_constant(self):
        report = convergence_study(0.5, [10, 50, 100])
        for _, value in report.normalized_entropies:
            assert value == pytest.approx(ENTROPY_RATE_WHITE, abs=1e-12)

    def test_long_memory_decreasing_towards_rate(self):
        report = convergence_study(0.7, [10, 50, 100])
        values = [v for _, v in report.normalized_entropies]
        assert values[0] > values[1] > values[2] > report.rate_spectral
        gaps = [v - report.rate_spectral for v in values]
        assert gaps[2] < gaps[0]

    def test_innovation_estimate_respects_bound(self):
        report = convergence_study(0.3, [10, 50, 100])
        assert report.innovation_estimate >= report.sigma2_h
        assert report.sigma2_h == pytest.approx(
            innovation_variance_lower_bound(0.3).sigma2_h, rel=1e-15
        )

    def test_n_list_validation(self):
        with pytest.raises(ValueError):
            convergence_study(0.5, [])
        with pytest.raises(ValueError):
            convergence_study(0.5, [10, 10])
        with pytest.raises(ValueError):
            convergence_study(0.5, [0, 5])


class TestAsymptoticAgreement:
    @pytest.mark.parametrize("H", [0.2, 0.5, 0.8])
    def test_normalized_entropy_non_increasing(self, H):
        r = prediction_errors(autocovariance_sequence(H, 200))
        n = np.arange(1, 201)
        normalized = (0.5 * n * (1.0 + LOG_2PI) + 0.5 * np.cumsum(np.log(r))) / n
        assert np.all(np.diff(normalized) <= 1e-10)

    @pytest.mark.parametrize("H", [0.3, 0.7])
    def test_innovation_formulation_matches_spectral(self, H):
        # (1 + log 2 pi)/2 + log(r(n))/2 approaches the spectral value
        r = prediction_errors(autocovariance_sequence(H, 2000))
        via_innovation = 0.5 * (1.0 + LOG_2PI) + 0.5 * math.log(r[-1])
        assert via_innovation == pytest.approx(entropy_rate_spectral(H), abs=2e-3)
