import math

import numpy as np
import pytest
from scipy.linalg import toeplitz as dense_toeplitz

from fgn_entropy.entropy import (
    LOG_2PI,
    RHO2_TURNING_POINT,
    closed_form_det2,
    closed_form_det3,
    fgn_entropy,
    gaussian_entropy,
    monotonicity_scan,
)
from fgn_entropy.fgn import autocovariance_sequence
from fgn_entropy.toeplitz import log_det
from oracles import ENTROPY_RATE_WHITE, det_cofactor, fgn_first_row


class TestGaussianEntropy:
    def test_scalar_unit_variance(self):
        assert gaussian_entropy(1, 0.0) == pytest.approx(ENTROPY_RATE_WHITE, rel=1e-14)

    def test_identity_covariance_scales_linearly(self):
        for n in [2, 7, 100]:
            assert gaussian_entropy(n, 0.0) == pytest.approx(n * ENTROPY_RATE_WHITE, rel=1e-14)

    def test_degenerate(self):
        assert gaussian_entropy(2, -math.inf) == -math.inf

    def test_dimension_validated(self):
        with pytest.raises(ValueError):
            gaussian_entropy(0, 0.0)


class TestFgnEntropy:
    def test_white_noise(self):
        for n in [1, 10, 250]:
            rep = fgn_entropy(0.5, n)
            assert rep.entropy == pytest.approx(0.5 * n * (1.0 + LOG_2PI), rel=1e-14)
            assert rep.reduced_entropy == 0.0

    def test_h_zero_three_samples(self):
        assert fgn_entropy(0.0, 3).reduced_entropy == pytest.approx(-math.log(2.0) / 2.0, rel=1e-13)

    def test_matches_cofactor_determinant_route(self):
        rep = fgn_entropy(0.7, 4)
        brute = det_cofactor(dense_toeplitz(fgn_first_row(0.7, 4)))
        assert 2.0 * rep.reduced_entropy == pytest.approx(math.log(brute), abs=1e-10)

    def test_h_one_degenerate(self):
        rep = fgn_entropy(1.0, 5)
        assert rep.entropy == -math.inf
        assert rep.normalized_entropy == -math.inf

    def test_report_invariants(self):
        rep = fgn_entropy(0.31, 17)
        assert rep.entropy == pytest.approx(
            0.5 * 17 * (1.0 + LOG_2PI) + rep.reduced_entropy, rel=1e-14
        )
        assert rep.reduced_entropy == pytest.approx(0.5 * rep.log_det, rel=1e-15)
        assert rep.normalized_entropy == pytest.approx(rep.entropy / 17.0, rel=1e-15)

    def test_route_equivalence_small_blocks(self):
        # determinant route vs conditional-variance route across the grid
        for H in np.round(np.arange(0.05, 1.0, 0.05), 10):
            for n in range(2, 7):
                brute = det_cofactor(dense_toeplitz(fgn_first_row(H, n)))
                rep = fgn_entropy(H, n)
                assert abs(2.0 * rep.reduced_entropy - math.log(brute)) <= 1e-9


class TestClosedFormDeterminants:
    def test_det2_endpoints(self):
        assert closed_form_det2(0.0) == pytest.approx(0.75, abs=1e-15)
        assert closed_form_det2(0.5) == pytest.approx(1.0, abs=1e-15)
        assert closed_form_det2(1.0) == pytest.approx(0.0, abs=1e-15)

    def test_det3_endpoints(self):
        assert closed_form_det3(0.0) == pytest.approx(0.5, abs=1e-15)
        assert closed_form_det3(0.5) == pytest.approx(1.0, abs=1e-15)
        assert closed_form_det3(1.0) == pytest.approx(0.0, abs=1e-12)

    def test_against_levinson_route(self):
        for H in np.round(np.arange(0.0, 1.0, 0.01), 10):
            d2 = log_det(autocovariance_sequence(H, 2)).det
            d3 = log_det(autocovariance_sequence(H, 3)).det
            assert abs(closed_form_det2(H) - d2) <= 1e-12 * max(1.0, abs(d2))
            assert abs(closed_form_det3(H) - d3) <= 1e-12 * max(1.0, abs(d3))

    def test_det3_levinson_exp_comparison(self):
        d3 = math.exp(log_det(autocovariance_sequence(0.6, 3)).log_det)
        assert closed_form_det3(0.6) == pytest.approx(d3, rel=1e-12)

    def test_det2_dominates_det3(self):
        for H in np.round(np.arange(0.01, 1.0, 0.01), 10):
            gap = closed_form_det2(H) - closed_form_det3(H)
            assert gap >= -1e-12
            if abs(H - 0.5) > 1e-9:
                assert gap > 1e-12

    def test_rho2_turning_point_residual(self):
        h0 = RHO2_TURNING_POINT
        residual = 3.0 ** (2 * h0) * math.log(3.0) - 2.0 * 2.0 ** (2 * h0) * math.log(2.0)
        assert abs(residual) <= 1e-12


class TestMonotonicityScan:
    def test_coarse_grid_small_n(self):
        scan = monotonicity_scan(np.arange(0.1, 0.95, 0.1), 3)
        assert scan.ok
        assert scan.argmax_h[2] == pytest.approx(0.5)
        assert scan.argmax_h[3] == pytest.approx(0.5)

    def test_three_point_grid_large_n(self):
        scan = monotonicity_scan([0.25, 0.5, 0.75], 100)
        assert scan.ok
        assert all(h == 0.5 for h in scan.argmax_h.values())

    def test_degenerate_single_point(self):
        scan = monotonicity_scan([0.37], 10)
        assert scan.ok

    def test_argmax_at_half_for_every_n(self):
        grid = np.round(np.arange(0.05, 1.0, 0.05), 10)
        scan = monotonicity_scan(grid, 100)
        assert scan.ok
        assert all(h == 0.5 for h in scan.argmax_h.values())

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            monotonicity_scan([0.5, 0.4], 5)  # not increasing
        with pytest.raises(ValueError):
            monotonicity_scan([0.0, 0.5], 5)  # endpoint included
        with pytest.raises(ValueError):
            monotonicity_scan([0.4, 0.4 + 1e-5], 5)  # step too small
        with pytest.raises(ValueError):
            monotonicity_scan([0.3, 0.6], 1)  # n_max too small

    def test_violations_are_reported_not_raised(self):
        # zero slack forces strictness the float noise cannot meet at H=0.5
        scan = monotonicity_scan([0.3, 0.5, 0.7], 5, slack=-1.0)
        assert not scan.ok
        assert all(v.check.startswith("det-") for v in scan.violations)
