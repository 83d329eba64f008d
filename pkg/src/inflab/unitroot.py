"""Augmented Dickey-Fuller unit-root tests.

Regression of the differenced series on its lagged level, an optional
deterministic part, and lagged differences; the test statistic is the
t-ratio on the lagged level. Approximate p-values come from the MacKinnon
response-surface coefficients embedded below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .series import TimeSeries

__all__ = ["AdfResult", "adf_test", "mackinnon_pvalue", "SPECS"]

SPECS = ("constant_no_trend", "constant_trend", "none")

# MacKinnon (1994/2010) response-surface coefficients for the univariate
# Dickey-Fuller tau distribution. p = Phi(poly(stat)); the small-p
# polynomial applies below the switch point, the large-p one above it.
# Keys: spec -> (switch, lower_clip, upper_clip, small poly, large poly),
# polynomials in ascending powers.
_MACKINNON = {
    "none": (
        -1.04, -19.04, math.inf,
        (0.6344, 1.2378, 0.032496),
        (0.4797, 0.93557, -0.06999, 0.033066),
    ),
    "constant_no_trend": (
        -1.61, -18.83, 2.74,
        (2.1659, 1.4412, 0.038269),
        (1.7339, 0.93202, -0.12745, -0.010368),
    ),
    "constant_trend": (
        -2.89, -16.18, 0.70,
        (3.2512, 1.6047, 0.049588),
        (2.5261, 0.61654, -0.37956, -0.060285),
    ),
}


def mackinnon_pvalue(stat: float, spec: str = "constant_no_trend") -> float:
    """Approximate asymptotic p-value of an ADF tau statistic."""
    if spec not in _MACKINNON:
        raise ValueError(f"unknown spec {spec!r}")
    star, lo, hi, smallp, largep = _MACKINNON[spec]
    if stat <= lo:
        return 0.0
    if stat >= hi:
        return 1.0
    coefs = smallp if stat <= star else largep
    z = sum(c * stat**k for k, c in enumerate(coefs))
    return float(stats.norm.cdf(z))


@dataclass(frozen=True)
class AdfResult:
    rho: float          # coefficient on the lagged level
    rho_pvalue: float   # two-sided Gaussian OLS p-value of rho
    adf_stat: float     # t-ratio of rho
    p_value: float      # MacKinnon approximate p-value of adf_stat
    lags: int
    spec: str
    n_obs: int

    def __post_init__(self):
        if not 0.0 <= self.p_value <= 1.0:
            raise ValueError("p_value outside [0, 1]")
        if self.lags < 0:
            raise ValueError("lags must be >= 0")


def _ols_qr(X: np.ndarray, y: np.ndarray):
    """OLS via QR; returns (beta, stderr, ssr)."""
    Q, R = np.linalg.qr(X)
    if np.min(np.abs(np.diag(R))) < 1e-12 * np.max(np.abs(np.diag(R))):
        raise ValueError("perfectly collinear regressors in ADF regression")
    beta = np.linalg.solve(R, Q.T @ y)
    resid = y - X @ beta
    ssr = float(resid @ resid)
    dof = len(y) - X.shape[1]
    sigma2 = ssr / dof
    Rinv = np.linalg.solve(R, np.eye(R.shape[0]))
    se = np.sqrt(sigma2 * np.sum(Rinv**2, axis=1))
    return beta, se, ssr


def _design(x: np.ndarray, lags: int, spec: str):
    """Build (y, X) for Delta x_t on [const?, x_{t-1}, Delta x_{t-1..t-lags}]."""
    dx = np.diff(x)
    y = dx[lags:]
    cols = [x[lags:-1]]
    for ell in range(1, lags + 1):
        cols.append(dx[lags - ell : len(dx) - ell])
    if spec in ("constant_no_trend", "constant_trend"):
        cols.append(np.ones_like(y))
    if spec == "constant_trend":
        cols.append(np.arange(len(y), dtype=float))
    return y, np.column_stack(cols)


def adf_test(x: TimeSeries, spec: str = "constant_no_trend",
             lags: int | str = "auto") -> AdfResult:
    """ADF test of the unit-root null for ``x``.

    ``lags="auto"`` picks the lag order minimizing AIC over
    0..floor(12*(T/100)^(1/4)) (Schwert bound).
    """
    if spec not in SPECS:
        raise ValueError(f"spec must be one of {SPECS}")
    vals = np.asarray(x.values, dtype=float)
    T = len(vals)
    if lags == "auto":
        maxlag = int(12 * (T / 100.0) ** 0.25)
        maxlag = min(maxlag, (T - 10) // 2)
        if T < 12 or maxlag < 0:
            raise ValueError(f"series too short for ADF ({T} observations)")
        best = None
        for k in range(maxlag + 1):
            # same effective sample for all candidates, so AICs are comparable
            y, X = _design(vals[maxlag - k :], k, spec)
            n = len(y)
            _, _, ssr = _ols_qr(X, y)
            aic = math.log(ssr / n) + 2.0 * X.shape[1] / n
            if best is None or aic < best[0]:
                best = (aic, k)
        lags = best[1]
    lags = int(lags)
    if T < lags + 10:
        raise ValueError(f"need at least lags+10 = {lags + 10} observations, have {T}")
    y, X = _design(vals, lags, spec)
    beta, se, _ = _ols_qr(X, y)
    rho, rho_se = float(beta[0]), float(se[0])
    stat = rho / rho_se
    dof = len(y) - X.shape[1]
    rho_p = 2.0 * float(stats.t.sf(abs(stat), dof))
    return AdfResult(
        rho=rho,
        rho_pvalue=rho_p,
        adf_stat=stat,
        p_value=mackinnon_pvalue(stat, spec),
        lags=lags,
        spec=spec,
        n_obs=len(y),
    )
