"""Output-gap construction: Hodrick-Prescott filter and deterministic trends.

Two gap definitions are supported:

* log-difference gap: HP trend of log activity, gap = log(x) - trend;
* percent-deviation gap: polynomial trend on levels, gap = (x - trend)/trend.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solveh_banded

from .series import TimeSeries, log_series

__all__ = ["GapEstimate", "hp_filter", "fit_trend", "gap_log_diff", "gap_pct_dev"]

#: Conventional smoothing parameter for monthly data.
MONTHLY_LAMBDA = 14400.0


@dataclass(frozen=True)
class GapEstimate:
    gap: TimeSeries
    trend: TimeSeries
    method: str                 # "HP" or "DeterministicTrend"
    lambda_or_degree: float


def _hp_trend(values: np.ndarray, lam: float) -> np.ndarray:
    """Solve (I + lam*D'D) tau = x via banded Cholesky.

    D is the (n-2) x n second-difference operator, so the system matrix is
    symmetric positive definite and pentadiagonal; no pivoting needed.
    """
    n = len(values)
    main = np.full(n, 6.0)
    main[[0, -1]] = 1.0
    main[[1, -2]] = 5.0
    off1 = np.full(n - 1, -4.0)
    off1[[0, -1]] = -2.0
    off2 = np.full(n - 2, 1.0)
    ab = np.zeros((3, n))
    ab[0, 2:] = lam * off2
    ab[1, 1:] = lam * off1
    ab[2, :] = 1.0 + lam * main
    return solveh_banded(ab, values)


def hp_filter(x: TimeSeries, lam: float = MONTHLY_LAMBDA) -> GapEstimate:
    """Hodrick-Prescott decomposition of ``x`` into trend and gap.

    The trend minimizes sum((x-tau)^2) + lam*sum((second differences of tau)^2);
    gap = x - trend, so gap + trend reproduces the input exactly.
    """
    if lam <= 0:
        raise ValueError("lambda must be positive")
    if len(x) < 5:
        raise ValueError("HP filter needs at least 5 observations")
    tau = _hp_trend(np.asarray(x.values), float(lam))
    trend = TimeSeries(x.start, tau, f"{x.name}_trend")
    gap = TimeSeries(x.start, x.values - tau, f"{x.name}_gap")
    return GapEstimate(gap=gap, trend=trend, method="HP", lambda_or_degree=float(lam))


def fit_trend(x: TimeSeries, degree: int = 1) -> GapEstimate:
    """Least-squares polynomial time trend (degree 1 or 2); gap = residuals."""
    if degree not in (1, 2):
        raise ValueError("degree must be 1 or 2")
    if len(x) <= degree + 1:
        raise ValueError(f"need more than {degree + 1} observations")
    t = np.arange(len(x), dtype=float)
    X = np.vander(t, degree + 1, increasing=True)
    beta, *_ = np.linalg.lstsq(X, x.values, rcond=None)
    fitted = X @ beta
    trend = TimeSeries(x.start, fitted, f"{x.name}_trend")
    gap = TimeSeries(x.start, x.values - fitted, f"{x.name}_gap")
    return GapEstimate(gap=gap, trend=trend, method="DeterministicTrend",
                       lambda_or_degree=float(degree))


def gap_log_diff(ise: TimeSeries, lam: float = MONTHLY_LAMBDA) -> TimeSeries:
    """Gap as log(activity) minus its HP trend."""
    return hp_filter(log_series(ise), lam).gap.with_name(f"{ise.name}_gap")


def gap_pct_dev(ise: TimeSeries, degree: int = 1) -> TimeSeries:
    """Gap as the proportional deviation of activity from a fitted time trend."""
    est = fit_trend(ise, degree)
    if np.any(est.trend.values == 0.0):
        raise ValueError("fitted trend crosses zero; percent deviation undefined")
    vals = (ise.values - est.trend.values) / est.trend.values
    return TimeSeries(ise.start, vals, f"{ise.name}_gap")
