"""Monthly time-series container and elementary data transforms.

Everything downstream (gap filters, unit-root tests, simulation, GMM)
works on :class:`TimeSeries`: a gapless, month-indexed vector of floats.
Rates are carried as annualized percentages in raw data files and as
decimal fractions inside the model; :class:`MacroDataset` records which
convention is in force.
"""

from __future__ import annotations

import csv
import io
import os
import re
from dataclasses import dataclass, field, replace

import numpy as np

__all__ = [
    "Month",
    "TimeSeries",
    "MacroDataset",
    "yoy_pct_change",
    "trailing_mean",
    "splice",
    "align",
    "log_series",
    "read_csv",
    "write_csv",
    "read_dataset",
    "write_dataset",
]

_DATE_RE = re.compile(r"^(\d{4})-(\d{2})$")

#: Divide annualized-percentage data by this to obtain decimal fractions.
PERCENT = 100.0


@dataclass(frozen=True, order=True)
class Month:
    """A calendar month, with integer arithmetic over month counts."""

    year: int
    month: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError(f"month out of range: {self.month}")

    @classmethod
    def parse(cls, text: str) -> "Month":
        m = _DATE_RE.match(text.strip())
        if m is None:
            raise ValueError(f"bad date {text!r}, expected YYYY-MM")
        return cls(int(m.group(1)), int(m.group(2)))

    @property
    def index(self) -> int:
        return self.year * 12 + (self.month - 1)

    def __add__(self, months: int) -> "Month":
        i = self.index + months
        return Month(i // 12, i % 12 + 1)

    def __sub__(self, other):
        if isinstance(other, Month):
            return self.index - other.index
        return self + (-other)

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"


@dataclass(frozen=True)
class TimeSeries:
    """Gapless monthly series: value ``i`` belongs to month ``start + i``."""

    start: Month
    values: np.ndarray
    name: str = ""

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError(f"series {self.name!r} must be a non-empty 1-d vector")
        if not np.all(np.isfinite(vals)):
            bad = self.start + int(np.flatnonzero(~np.isfinite(vals))[0])
            raise ValueError(f"series {self.name!r} has a hole/non-finite value at {bad}")
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def end(self) -> Month:
        """Last month covered."""
        return self.start + (len(self) - 1)

    def month_at(self, i: int) -> Month:
        return self.start + i

    def value_at(self, m: Month) -> float:
        i = m - self.start
        if not 0 <= i < len(self):
            raise KeyError(f"{m} outside {self.start}..{self.end}")
        return float(self.values[i])

    def window(self, start: Month, end: Month) -> "TimeSeries":
        """Restriction to the inclusive range ``start..end``."""
        i, j = start - self.start, end - self.start
        if i < 0 or j >= len(self) or j < i:
            raise ValueError(f"window {start}..{end} outside {self.start}..{self.end}")
        return TimeSeries(start, self.values[i : j + 1], self.name)

    def with_name(self, name: str) -> "TimeSeries":
        return replace(self, name=name)

    def map(self, fn, name: str | None = None) -> "TimeSeries":
        return TimeSeries(self.start, fn(np.asarray(self.values)), name or self.name)


def yoy_pct_change(x: TimeSeries, lag_months: int) -> TimeSeries:
    """Percentage change over ``lag_months`` months: 100*(x[t]/x[t-lag] - 1)."""
    if lag_months < 1:
        raise ValueError("lag_months must be positive")
    if len(x) <= lag_months:
        raise ValueError(f"series {x.name!r} too short for lag {lag_months}")
    base = x.values[:-lag_months]
    if np.any(base == 0.0):
        bad = x.start + int(np.flatnonzero(base == 0.0)[0])
        raise ValueError(f"zero base value at {bad} in {x.name!r}")
    out = PERCENT * (x.values[lag_months:] / base - 1.0)
    return TimeSeries(x.start + lag_months, out, f"{x.name}_pct{lag_months}m")


def trailing_mean(x: TimeSeries, window: int) -> TimeSeries:
    """Mean of the ``window`` months strictly before each month.

    The window excludes the current month, so the output at month t only
    uses information available when t begins.
    """
    if window < 1:
        raise ValueError("window must be positive")
    if len(x) <= window:
        raise ValueError(f"series {x.name!r} too short for window {window}")
    csum = np.concatenate(([0.0], np.cumsum(x.values)))
    out = (csum[window:-1] - csum[:-window - 1]) / window
    return TimeSeries(x.start + window, out, f"{x.name}_ma{window}")


def splice(old: TimeSeries, new: TimeSeries) -> TimeSeries:
    """Ratio-splice two overlapping series, keeping ``new`` where available.

    The pre-overlap part of ``old`` is rescaled by the mean ratio new/old
    over the full overlap, so the joined series is continuous in level.
    """
    lo = max(old.start, new.start)
    hi = min(old.end, new.end)
    if hi < lo:
        raise ValueError(f"no overlap between {old.name!r} and {new.name!r}")
    old_ov = old.window(lo, hi).values
    new_ov = new.window(lo, hi).values
    if np.any(old_ov == 0.0) or np.any(new_ov == 0.0):
        raise ValueError("zero value inside splice overlap")
    k = float(np.mean(new_ov / old_ov))
    if old.start < new.start:
        head = old.window(old.start, new.start - 1).values * k
        vals = np.concatenate([head, new.values])
        start = old.start
    else:
        vals = new.values
        start = new.start
    return TimeSeries(start, vals, new.name or old.name)


def align(series: list[TimeSeries]) -> list[TimeSeries]:
    """Trim every series to the common intersection of their ranges."""
    if not series:
        raise ValueError("align needs at least one series")
    lo = max(s.start for s in series)
    hi = min(s.end for s in series)
    if hi < lo:
        raise ValueError("series ranges have empty intersection")
    return [s.window(lo, hi) for s in series]


def log_series(x: TimeSeries) -> TimeSeries:
    """Elementwise natural log; rejects non-positive values by month."""
    if np.any(x.values <= 0.0):
        bad = x.start + int(np.flatnonzero(x.values <= 0.0)[0])
        raise ValueError(f"non-positive value at {bad} in {x.name!r}")
    return TimeSeries(x.start, np.log(x.values), f"log_{x.name}" if x.name else "log")


@dataclass(frozen=True)
class MacroDataset:
    """The aligned observables the empirical model runs on.

    ``units`` is either ``"percent"`` (annualized percentages, e.g. 5.4)
    or ``"decimal"`` (0.054); every consumer honors it. The gap is a
    dimensionless fraction in both conventions.
    """

    inflation: TimeSeries
    gap: TimeSeries
    nominal_rate: TimeSeries
    real_rate: TimeSeries
    exp_depreciation: TimeSeries
    target: TimeSeries
    units: str = "percent"

    _FIELDS = ("inflation", "gap", "nominal_rate", "real_rate",
               "exp_depreciation", "target")

    def __post_init__(self):
        if self.units not in ("percent", "decimal"):
            raise ValueError(f"unknown unit convention {self.units!r}")
        ref = self.inflation
        for f in self._FIELDS:
            s = getattr(self, f)
            if s.start != ref.start or len(s) != len(ref):
                raise ValueError(
                    f"{f} range {s.start}+{len(s)} differs from inflation "
                    f"range {ref.start}+{len(ref)}"
                )

    def __len__(self) -> int:
        return len(self.inflation)

    @property
    def start(self) -> Month:
        return self.inflation.start

    def members(self) -> dict[str, TimeSeries]:
        return {f: getattr(self, f) for f in self._FIELDS}

    def in_decimal(self) -> "MacroDataset":
        """Copy with all rate series as decimal fractions (gap untouched)."""
        if self.units == "decimal":
            return self
        conv = {f: s.map(lambda v: v / PERCENT) for f, s in self.members().items()}
        conv["gap"] = self.gap
        return MacroDataset(units="decimal", **conv)

    def in_percent(self) -> "MacroDataset":
        if self.units == "percent":
            return self
        conv = {f: s.map(lambda v: v * PERCENT) for f, s in self.members().items()}
        conv["gap"] = self.gap
        return MacroDataset(units="percent", **conv)


# ---------------------------------------------------------------------------
# CSV interchange: two columns `date,value`, YYYY-MM, consecutive ascending.

def read_csv(path_or_file, name: str = "") -> TimeSeries:
    if hasattr(path_or_file, "read"):
        return _read_csv_file(path_or_file, name or "series")
    with open(path_or_file, newline="") as fh:
        default = os.path.splitext(os.path.basename(str(path_or_file)))[0]
        return _read_csv_file(fh, name or default)


def _read_csv_file(fh, name: str) -> TimeSeries:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError(f"{name}: empty CSV") from None
    if [h.strip().lower() for h in header] != ["date", "value"]:
        raise ValueError(f"{name}: line 1: expected header 'date,value', got {header!r}")
    months, values = [], []
    for lineno, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise ValueError(f"{name}: line {lineno}: expected 2 columns, got {len(row)}")
        try:
            m = Month.parse(row[0])
            v = float(row[1])
        except ValueError as e:
            raise ValueError(f"{name}: line {lineno}: {e}") from None
        if months and m - months[-1] != 1:
            raise ValueError(
                f"{name}: line {lineno}: {m} does not follow {months[-1]} "
                "(rows must be consecutive months ascending)"
            )
        months.append(m)
        values.append(v)
    if not months:
        raise ValueError(f"{name}: no data rows")
    return TimeSeries(months[0], np.array(values), name)


def write_csv(series: TimeSeries, path_or_file) -> None:
    if hasattr(path_or_file, "write"):
        _write_csv_file(series, path_or_file)
    else:
        buf = io.StringIO()
        _write_csv_file(series, buf)
        with open(path_or_file, "w", newline="") as fh:
            fh.write(buf.getvalue())


def _write_csv_file(series: TimeSeries, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["date", "value"])
    for i, v in enumerate(series.values):
        w.writerow([str(series.start + i), repr(float(v))])


def write_dataset(ds: MacroDataset, directory) -> list[str]:
    """Write one `<member>.csv` per series plus a units marker; returns paths."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for fname, s in ds.members().items():
        p = os.path.join(directory, f"{fname}.csv")
        write_csv(s, p)
        written.append(p)
    units_path = os.path.join(directory, "units.txt")
    with open(units_path, "w") as fh:
        fh.write(ds.units + "\n")
    written.append(units_path)
    return written


def read_dataset(directory) -> MacroDataset:
    members = {}
    for fname in MacroDataset._FIELDS:
        p = os.path.join(directory, f"{fname}.csv")
        if not os.path.exists(p):
            raise FileNotFoundError(f"dataset member missing: {p}")
        members[fname] = read_csv(p, fname)
    units_path = os.path.join(directory, "units.txt")
    units = "percent"
    if os.path.exists(units_path):
        with open(units_path) as fh:
            units = fh.read().strip()
    return MacroDataset(units=units, **members)
