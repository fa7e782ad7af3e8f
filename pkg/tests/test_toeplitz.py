import math

import numpy as np
import pytest
from scipy.linalg import toeplitz as dense_toeplitz

from fgn_entropy.fgn import autocovariance_sequence, innovation_variance_lower_bound
from fgn_entropy.toeplitz import (
    MAX_DENSE_ORDER,
    NotPositiveDefiniteError,
    SingularMatrixError,
    cholesky_oracle,
    log_det,
    prediction_errors,
)
from oracles import det_cofactor, fgn_first_row, log_det_lu


class TestPredictionErrors:
    def test_white_noise(self):
        np.testing.assert_array_equal(prediction_errors([1.0, 0.0, 0.0, 0.0]), np.ones(4))

    def test_bivariate_conditional_variance(self):
        # var[X2 | X1] = 1 - rho^2 for a unit-variance bivariate Gaussian
        for rho1 in [-0.45, 0.0, 0.3, 0.9]:
            r = prediction_errors([1.0, rho1])
            assert r[1] == pytest.approx(1.0 - rho1**2, rel=1e-15)

    def test_h_zero_ratio_oracle(self):
        # det ratios of the closed form (n+1)/2**n give r(k) = (k+1)/(2k)
        r = prediction_errors(autocovariance_sequence(0.0, 5))
        expected = [(k + 1.0) / (2.0 * k) for k in range(1, 6)]
        np.testing.assert_allclose(r, expected, rtol=1e-14)

    def test_first_error_is_variance(self):
        assert prediction_errors(autocovariance_sequence(0.77, 8))[0] == 1.0

    def test_singular_input_raises(self):
        with pytest.raises(SingularMatrixError) as exc:
            prediction_errors(autocovariance_sequence(1.0, 3))
        assert exc.value.index == 2

    def test_monotone_nonincreasing(self):
        for H in np.round(np.arange(0.05, 1.0, 0.05), 10):
            if H == 0.5:
                continue
            r = prediction_errors(autocovariance_sequence(H, 200))
            assert np.all(np.diff(r) <= 1e-12)

    def test_innovation_lower_bound(self):
        for H in np.round(np.arange(0.05, 1.0, 0.05), 10):
            sigma2 = innovation_variance_lower_bound(H).sigma2_h
            r = prediction_errors(autocovariance_sequence(H, 200))
            assert np.all(r >= sigma2 - 1e-9)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            prediction_errors([])


class TestLogDet:
    def test_white_noise_all_n(self):
        for n in [1, 10, 500]:
            res = log_det(autocovariance_sequence(0.5, n))
            assert res.log_det == 0.0
            assert res.det == 1.0

    def test_h_zero_closed_form(self):
        for n in range(1, 31):
            res = log_det(autocovariance_sequence(0.0, n))
            assert res.log_det == pytest.approx(math.log(n + 1) - n * math.log(2), rel=1e-13)

    def test_two_by_two_closed_form(self):
        for H in np.linspace(0.0, 0.99, 34):
            res = log_det(autocovariance_sequence(H, 2))
            assert res.det == pytest.approx(-(2.0 ** (4 * H - 2)) + 2.0 ** (2 * H), rel=1e-13)

    def test_h_one_distinguished_value(self):
        res = log_det(autocovariance_sequence(1.0, 4))
        assert res.log_det == -math.inf
        assert res.det == 0.0

    def test_decreasing_in_n(self):
        for H in np.round(np.arange(0.05, 1.0, 0.05), 10):
            r = prediction_errors(autocovariance_sequence(H, 100))
            lds = np.cumsum(np.log(r))
            assert np.all(np.diff(lds) <= 1e-12)

    def test_plain_array_input(self):
        res = log_det(fgn_first_row(0.3, 6))
        assert res.log_det == pytest.approx(log_det_lu(dense_toeplitz(fgn_first_row(0.3, 6))), rel=1e-12)


class TestCholeskyOracle:
    def test_identity(self):
        res, diag_sq = cholesky_oracle([1.0, 0.0, 0.0])
        assert res.log_det == 0.0
        np.testing.assert_array_equal(diag_sq, np.ones(3))

    def test_matches_levinson(self):
        acov = autocovariance_sequence(0.3, 50)
        res, _ = cholesky_oracle(acov)
        assert res.log_det == pytest.approx(log_det(acov).log_det, rel=1e-9)

    def test_matches_cofactor_expansion(self):
        acov = autocovariance_sequence(0.7, 4)
        res, _ = cholesky_oracle(acov)
        assert res.det == pytest.approx(det_cofactor(dense_toeplitz(acov.values)), rel=1e-10)

    def test_diagonal_squares_are_prediction_errors(self):
        acov = autocovariance_sequence(0.85, 64)
        _, diag_sq = cholesky_oracle(acov)
        np.testing.assert_allclose(diag_sq, prediction_errors(acov), rtol=1e-12)

    def test_levinson_agreement_grid(self):
        for H in [0.05, 0.3, 0.5, 0.7, 0.95]:
            for n in [2, 64, 512]:
                acov = autocovariance_sequence(H, n)
                chol, _ = cholesky_oracle(acov)
                lev = log_det(acov).log_det
                assert abs(chol.log_det - lev) <= 1e-8 * max(1.0, abs(lev))

    def test_not_positive_definite(self):
        with pytest.raises(NotPositiveDefiniteError) as exc:
            cholesky_oracle(np.ones(5))
        assert exc.value.pivot == 2

    def test_dense_bound(self):
        with pytest.raises(ValueError):
            cholesky_oracle(np.zeros(MAX_DENSE_ORDER + 1))
