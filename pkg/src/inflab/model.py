"""Five-equation inflation-targeting model for a small open economy.

State and shocks, per period t (all rates decimal fractions per year):

    (1) gap_t   = a_t + o_t - b*(R_t - r)
    (2) R_t     = i_t - pie_t
    (3) pie_t   = gamma*d_e_t + (1-gamma)*pi_{t-1}
    (4) i_t     = r + pi_bar + c1*(pi_{t-1} - pi_bar) + c2*a_t
    (5) pi_t    = pie_t + v*gap_t + o_t

where a_t is a transitory demand shock, o_t a supply shock, d_e_t the
expected depreciation rate (exogenous here), and pi_bar the inflation
target. Eliminating the contemporaneous variables gives inflation as a
linear recursion in pi_{t-1}, d_e_t, pi_bar and the two shocks (the
reduced form); replacing the shock combination by phi*gap_t gives the
approximate reduced form used in estimation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .series import MacroDataset, Month, TimeSeries

__all__ = [
    "ModelParams",
    "ShockPath",
    "RfCoefficients",
    "SteadyState",
    "SimPath",
    "rf_coefficients",
    "steady_state",
    "simulate_structural",
    "simulate_arf",
    "impulse_response",
    "recover_shocks",
]


@dataclass(frozen=True)
class ModelParams:
    """The seven structural parameters plus the inflation target.

    Sign and range constraints are enforced at construction: b, c1, c2, v
    and phi strictly positive, gamma strictly inside (0, 1).
    """

    b: float
    gamma: float
    c1: float
    c2: float
    v: float
    r: float
    phi: float
    pi_bar: float

    def __post_init__(self):
        for name in ("b", "c1", "c2", "v", "phi"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")
        if not 0.0 < self.gamma < 1.0:
            raise ValueError(f"gamma must be in (0, 1), got {self.gamma}")
        for name in ("b", "gamma", "c1", "c2", "v", "r", "phi", "pi_bar"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class ShockPath:
    """Aligned demand (a) and supply (o) shock series."""

    a: TimeSeries
    o: TimeSeries

    def __post_init__(self):
        if self.a.start != self.o.start or len(self.a) != len(self.o):
            raise ValueError("demand and supply shock series must be aligned")

    def __len__(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class RfCoefficients:
    """Reduced-form loadings of inflation on its drivers."""

    on_lag_inflation: float
    on_exp_depreciation: float
    on_target: float
    on_demand_shock: float
    on_supply_shock: float


@dataclass(frozen=True)
class SteadyState:
    inflation: float
    nominal_rate: float
    real_rate: float
    gap: float


@dataclass(frozen=True)
class SimPath:
    """One simulated trajectory; all members share start and length."""

    inflation: TimeSeries
    gap: TimeSeries
    nominal_rate: TimeSeries
    real_rate: TimeSeries
    expected_inflation: TimeSeries

    def __post_init__(self):
        ref = self.inflation
        for s in (self.gap, self.nominal_rate, self.real_rate, self.expected_inflation):
            if s.start != ref.start or len(s) != len(ref):
                raise ValueError("SimPath members must be aligned")

    def __len__(self) -> int:
        return len(self.inflation)


def rf_coefficients(p: ModelParams) -> RfCoefficients:
    """Reduced-form coefficients; the first three always sum to one."""
    vb = p.v * p.b
    return RfCoefficients(
        on_lag_inflation=(1.0 + vb) * (1.0 - p.gamma) - vb * p.c1,
        on_exp_depreciation=(1.0 + vb) * p.gamma,
        on_target=(p.c1 - 1.0) * vb,
        on_demand_shock=p.v * (1.0 - p.b * p.c2),
        on_supply_shock=1.0 + p.v,
    )


def steady_state(p: ModelParams) -> SteadyState:
    """Rest point with zero shocks and expectations anchored at the target."""
    return SteadyState(
        inflation=p.pi_bar,
        nominal_rate=p.r + p.pi_bar,
        real_rate=p.r,
        gap=0.0,
    )


def _check_stability(p: ModelParams) -> None:
    lag = rf_coefficients(p).on_lag_inflation
    if abs(lag) >= 1.0:
        warnings.warn(
            f"|inflation persistence| = {abs(lag):.4f} >= 1: "
            "simulation will not converge to the steady state",
            stacklevel=3,
        )


def simulate_structural(p: ModelParams, shocks: ShockPath, d_e: TimeSeries,
                        pi0: float) -> SimPath:
    """Run equations (1)-(5) period by period.

    ``pi0`` is consumed as the lagged inflation of the first simulated
    month; the output starts at the shocks' first month.
    """
    if d_e.start != shocks.a.start or len(d_e) != len(shocks):
        raise ValueError("d_e must be aligned with the shock path")
    if not np.isfinite(pi0):
        raise ValueError("pi0 must be finite")
    _check_stability(p)
    n = len(shocks)
    a, o, de = shocks.a.values, shocks.o.values, d_e.values
    pi = np.empty(n)
    gap = np.empty(n)
    nom = np.empty(n)
    real = np.empty(n)
    pie = np.empty(n)
    prev = pi0
    for t in range(n):
        pie[t] = p.gamma * de[t] + (1.0 - p.gamma) * prev
        nom[t] = p.r + p.pi_bar + p.c1 * (prev - p.pi_bar) + p.c2 * a[t]
        real[t] = nom[t] - pie[t]
        gap[t] = a[t] + o[t] - p.b * (real[t] - p.r)
        pi[t] = pie[t] + p.v * gap[t] + o[t]
        prev = pi[t]
    start = shocks.a.start
    return SimPath(
        inflation=TimeSeries(start, pi, "inflation"),
        gap=TimeSeries(start, gap, "gap"),
        nominal_rate=TimeSeries(start, nom, "nominal_rate"),
        real_rate=TimeSeries(start, real, "real_rate"),
        expected_inflation=TimeSeries(start, pie, "expected_inflation"),
    )


def simulate_arf(p: ModelParams, gap_path: TimeSeries, d_e: TimeSeries,
                 pi0: float) -> TimeSeries:
    """Approximate-reduced-form inflation given an observed gap path."""
    if gap_path.start != d_e.start or len(gap_path) != len(d_e):
        raise ValueError("gap_path and d_e must be aligned")
    _check_stability(p)
    c = rf_coefficients(p)
    pi = np.empty(len(gap_path))
    prev = pi0
    for t in range(len(gap_path)):
        pi[t] = (c.on_lag_inflation * prev
                 + c.on_exp_depreciation * d_e.values[t]
                 + c.on_target * p.pi_bar
                 + p.phi * gap_path.values[t])
        prev = pi[t]
    return TimeSeries(gap_path.start, pi, "inflation")


def impulse_response(p: ModelParams, shock: str, size: float,
                     horizon: int, start: Month = Month(2000, 1)) -> SimPath:
    """Response to a single period-1 shock, as deviations from steady state."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if shock not in ("demand", "supply"):
        raise ValueError("shock must be 'demand' or 'supply'")
    pulse = np.zeros(horizon)
    pulse[0] = size
    zero = np.zeros(horizon)
    a = pulse if shock == "demand" else zero
    o = pulse if shock == "supply" else zero
    shocks = ShockPath(TimeSeries(start, a, "a"), TimeSeries(start, o, "o"))
    d_e = TimeSeries(start, np.full(horizon, p.pi_bar), "d_e")
    path = simulate_structural(p, shocks, d_e, pi0=p.pi_bar)
    ss = steady_state(p)
    return SimPath(
        inflation=path.inflation.map(lambda x: x - ss.inflation),
        gap=path.gap.map(lambda x: x - ss.gap),
        nominal_rate=path.nominal_rate.map(lambda x: x - ss.nominal_rate),
        real_rate=path.real_rate.map(lambda x: x - ss.real_rate),
        expected_inflation=path.expected_inflation.map(lambda x: x - ss.inflation),
    )


def recover_shocks(p: ModelParams, data: MacroDataset) -> ShockPath:
    """Back out the demand and supply shocks implied by observed data.

    Inverts (5) for o_t and (1) for a_t, with expected inflation built from
    (3). The first observation is dropped (it has no lagged inflation).
    """
    ds = data.in_decimal()
    pi = ds.inflation.values
    gap = ds.gap.values
    real = ds.real_rate.values
    de = ds.exp_depreciation.values
    pie = p.gamma * de[1:] + (1.0 - p.gamma) * pi[:-1]
    o = pi[1:] - pie - p.v * gap[1:]
    a = gap[1:] + p.b * (real[1:] - p.r) - o
    start = ds.start + 1
    return ShockPath(TimeSeries(start, a, "a"), TimeSeries(start, o, "o"))
