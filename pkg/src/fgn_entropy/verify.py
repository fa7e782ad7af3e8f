"""Cross-route and closed-form verification suite behind ``fgn-entropy verify``.

Every check returns violations as data; the caller decides how to report
them.  Default slacks match the guarantees asserted by the test suite.
"""

import numpy as np
from scipy.linalg import toeplitz as _dense_toeplitz

from .entropy import (
    RHO2_TURNING_POINT,
    ScanViolation,
    closed_form_det2,
    closed_form_det3,
    fgn_entropy,
    monotonicity_scan,
)
from .fgn import autocovariance_sequence, innovation_variance_lower_bound
from .rate import block_entropy_lower_bound, entropy_rate_lower_bound, entropy_rate_spectral
from .toeplitz import cholesky_oracle, log_det, prediction_errors


def _interior_grid(step):
    grid = np.round(np.arange(step, 1.0, step), 12)
    return grid[(grid > 0.0) & (grid < 1.0)]


def det_cofactor(matrix) -> float:
    """Brute-force determinant by first-row cofactor expansion, O(n!)."""
    m = np.asarray(matrix, dtype=float)
    n = m.shape[0]
    if n == 1:
        return float(m[0, 0])
    total = 0.0
    for j in range(n):
        minor = np.delete(np.delete(m, 0, axis=0), j, axis=1)
        total += (-1.0) ** j * m[0, j] * det_cofactor(minor)
    return total


def check_monotonicity(h_step=0.01, n_max=100, slack=1e-12):
    grid = _interior_grid(h_step)
    return list(monotonicity_scan(grid, n_max, slack=slack).violations)


def check_bound_dominance(h_step=0.02, n_list=(5, 50, 200), rate_slack=1e-6,
                          block_slack=1e-8, r_slack=1e-9):
    violations = []
    n_top = max(n_list)
    for H in _interior_grid(h_step):
        rs = entropy_rate_spectral(H)
        lb = entropy_rate_lower_bound(H)
        if not lb <= rs + rate_slack:
            violations.append(ScanViolation("rate-bound-dominance", float(H), 0, lb, rs))
        sigma2 = innovation_variance_lower_bound(H).sigma2_h
        r = prediction_errors(autocovariance_sequence(H, n_top))
        k_bad = np.nonzero(r < sigma2 - r_slack)[0]
        for k in k_bad:
            violations.append(
                ScanViolation("innovation-bound", float(H), int(k + 1), float(r[k]), sigma2)
            )
        for n in n_list:
            blk = block_entropy_lower_bound(H, n)
            ent = fgn_entropy(H, n).entropy
            if not blk <= ent + block_slack:
                violations.append(ScanViolation("block-bound-dominance", float(H), n, blk, ent))
    return violations


def check_route_equivalence(h_step=0.1, n_list=(2, 8, 64, 256), slack=1e-8,
                            cofactor_slack=1e-10):
    violations = []
    for H in _interior_grid(h_step):
        for n in n_list:
            acov = autocovariance_sequence(H, n)
            lev = log_det(acov).log_det
            chol, _ = cholesky_oracle(acov)
            if not abs(chol.log_det - lev) <= slack * max(1.0, abs(lev)):
                violations.append(
                    ScanViolation("levinson-vs-cholesky", float(H), n, lev, chol.log_det)
                )
        for n in (4, 6):
            acov = autocovariance_sequence(H, n)
            brute = det_cofactor(_dense_toeplitz(acov.values))
            lev = log_det(acov).det
            if not abs(brute - lev) <= cofactor_slack * max(1.0, abs(brute)):
                violations.append(
                    ScanViolation("levinson-vs-cofactor", float(H), n, lev, brute)
                )
    return violations


def check_closed_forms(h_step=0.01, slack=1e-12):
    violations = []
    grid = np.concatenate(([0.0], _interior_grid(h_step), [1.0]))
    for H in grid:
        ref2, ref3 = closed_form_det2(H), closed_form_det3(H)
        if H == 1.0:
            det2 = det3 = 0.0  # singular endpoint
        else:
            r = prediction_errors(autocovariance_sequence(H, 3))
            det2, det3 = float(r[0] * r[1]), float(r[0] * r[1] * r[2])
        if not abs(det2 - ref2) <= slack * max(1.0, abs(ref2)):
            violations.append(ScanViolation("closed-form-det2", float(H), 2, det2, ref2))
        if not abs(det3 - ref3) <= slack * max(1.0, abs(ref3)):
            violations.append(ScanViolation("closed-form-det3", float(H), 3, det3, ref3))
        if not ref2 >= ref3 - slack:
            violations.append(ScanViolation("det2-dominates-det3", float(H), 3, ref2, ref3))
        if abs(H - 0.5) > 1e-9 and H < 0.995 and not ref2 - ref3 > slack:
            violations.append(ScanViolation("det2-strictly-above-det3", float(H), 3, ref2, ref3))
    h0 = RHO2_TURNING_POINT
    residual = 3.0 ** (2 * h0) * np.log(3.0) - 2.0 * 2.0 ** (2 * h0) * np.log(2.0)
    if not abs(residual) <= slack:
        violations.append(ScanViolation("rho2-turning-point", h0, 0, residual, 0.0))
    return violations


def run_verification(h_step=0.01, n_max=100, tol=None):
    """Run the whole suite; returns ``{check group: [violations]}``.

    ``tol`` overrides every comparison slack at once (``tol=0`` demands
    bit-exact agreement between independent routes and is expected to
    fail; it exists to prove the machinery can fail).
    """
    n_max = max(int(n_max), 2)
    kw = {} if tol is None else {"slack": tol}
    bound_ns = tuple(sorted({min(n, n_max) for n in (5, 50, 200)}))
    route_ns = tuple(sorted({min(n, n_max) for n in (2, 8, 64, 256)}))
    groups = {
        "monotonicity": check_monotonicity(h_step=h_step, n_max=n_max, **kw),
        "bound-dominance": check_bound_dominance(
            h_step=max(h_step, 0.02),
            n_list=bound_ns,
            **(
                {}
                if tol is None
                else {"rate_slack": tol, "block_slack": tol, "r_slack": tol}
            ),
        ),
        "route-equivalence": check_route_equivalence(
            n_list=route_ns,
            **({} if tol is None else {"slack": tol, "cofactor_slack": tol}),
        ),
        "closed-forms": check_closed_forms(h_step=h_step, **kw),
    }
    return groups
