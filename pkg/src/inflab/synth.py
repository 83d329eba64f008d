"""Synthetic dataset generation for estimator validation and Monte Carlo work.

The data-generating process is the structural model itself: Gaussian i.i.d.
demand and supply shocks, an exogenous AR(1) expected-depreciation path
anchored at the target, and optional Gaussian policy-rate noise layered on
top of the simulated nominal rate. RNG is numpy's PCG64 via
``default_rng(seed)``, so output is a pure function of the config.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import ModelParams, ShockPath, simulate_structural
from .series import MacroDataset, Month, TimeSeries

__all__ = ["SynthConfig", "generate"]


@dataclass(frozen=True)
class SynthConfig:
    params: ModelParams
    T: int = 600
    sigma_a: float = 0.02
    sigma_o: float = 0.002
    sigma_i: float = 0.002          # policy-rule noise, added to the nominal rate
    rho_d: float = 0.0              # AR(1) persistence of expected depreciation
    sigma_d: float = 0.002
    seed: int = 0
    real_rate_convention: str = "ex_post"   # or "expected"
    burn_in: int = 0
    start: Month = field(default=Month(2000, 1))

    def __post_init__(self):
        if self.T < 50:
            raise ValueError("T must be >= 50")
        if min(self.sigma_a, self.sigma_o, self.sigma_i, self.sigma_d) < 0:
            raise ValueError("shock standard deviations must be >= 0")
        if not 0.0 <= self.rho_d < 1.0:
            raise ValueError("rho_d must be in [0, 1)")
        if self.real_rate_convention not in ("ex_post", "expected"):
            raise ValueError("real_rate_convention must be 'ex_post' or 'expected'")
        if self.burn_in < 0:
            raise ValueError("burn_in must be >= 0")


def generate(cfg: SynthConfig) -> tuple[MacroDataset, ShockPath]:
    """Simulate a dataset of length ``cfg.T`` plus the true shock paths.

    The recorded real rate is either ex-post (nominal minus realized
    inflation) or model-consistent (nominal minus expected inflation),
    both computed from the noise-contaminated nominal rate.
    """
    p = cfg.params
    rng = np.random.default_rng(cfg.seed)
    n = cfg.T + cfg.burn_in
    a = rng.normal(0.0, cfg.sigma_a, n) if cfg.sigma_a > 0 else np.zeros(n)
    o = rng.normal(0.0, cfg.sigma_o, n) if cfg.sigma_o > 0 else np.zeros(n)
    d_innov = rng.normal(0.0, cfg.sigma_d, n) if cfg.sigma_d > 0 else np.zeros(n)
    u = rng.normal(0.0, cfg.sigma_i, n) if cfg.sigma_i > 0 else np.zeros(n)

    de = np.empty(n)
    prev = 0.0
    for t in range(n):
        prev = cfg.rho_d * prev + d_innov[t]
        de[t] = p.pi_bar + prev

    start0 = cfg.start - cfg.burn_in
    shocks = ShockPath(TimeSeries(start0, a, "a"), TimeSeries(start0, o, "o"))
    d_e = TimeSeries(start0, de, "exp_depreciation")
    path = simulate_structural(p, shocks, d_e, pi0=p.pi_bar)

    nominal = path.nominal_rate.values + u
    if cfg.real_rate_convention == "ex_post":
        real = nominal - path.inflation.values
    else:
        real = nominal - path.expected_inflation.values

    k = cfg.burn_in
    start = cfg.start
    ds = MacroDataset(
        inflation=TimeSeries(start, path.inflation.values[k:], "inflation"),
        gap=TimeSeries(start, path.gap.values[k:], "gap"),
        nominal_rate=TimeSeries(start, nominal[k:], "nominal_rate"),
        real_rate=TimeSeries(start, real[k:], "real_rate"),
        exp_depreciation=TimeSeries(start, de[k:], "exp_depreciation"),
        target=TimeSeries(start, np.full(cfg.T, p.pi_bar), "target"),
        units="decimal",
    )
    true_shocks = ShockPath(
        TimeSeries(start, a[k:], "a"),
        TimeSeries(start, o[k:], "o"),
    )
    return ds, true_shocks
