"""Ordinary least-squares line fits and the logarithmic transforms used before them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import AllPointsDropped, DegenerateSeries

TRANSFORMS = ("linear", "semilog-x", "semilog-y", "loglog")

# Which coordinates each transform takes the base-10 log of.
_LOG_AXES = {
    "linear": (False, False),
    "semilog-x": (True, False),
    "semilog-y": (False, True),
    "loglog": (True, True),
}


@dataclass(frozen=True)
class PointSeries:
    points: tuple[tuple[float, float], ...]
    label: str = ""
    transform: str = "linear"
    dropped: int = 0

    @classmethod
    def from_xy(
        cls, xs: Iterable[float], ys: Iterable[float], label: str = ""
    ) -> "PointSeries":
        xs, ys = list(xs), list(ys)
        if len(xs) != len(ys):
            raise ValueError(f"x and y lengths differ: {len(xs)} != {len(ys)}")
        return cls(points=tuple((float(x), float(y)) for x, y in zip(xs, ys)), label=label)

    @property
    def xs(self) -> np.ndarray:
        return np.array([p[0] for p in self.points], dtype=float)

    @property
    def ys(self) -> np.ndarray:
        return np.array([p[1] for p in self.points], dtype=float)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float
    n_points: int
    transform: str = "linear"

    def predict(self, x):
        return self.slope * np.asarray(x, dtype=float) + self.intercept

    def residual_r_squared(self, series: PointSeries) -> float:
        """R² recomputed as 1 - SSR/SST from this line's residuals on ``series``."""
        ys = series.ys
        ss_tot = float(np.sum((ys - ys.mean()) ** 2))
        if ss_tot == 0.0:
            return 0.0
        ss_res = float(np.sum((ys - self.predict(series.xs)) ** 2))
        return 1.0 - ss_res / ss_tot


def log_transform(series: PointSeries, mode: str) -> PointSeries:
    """Take base-10 logs of the coordinates ``mode`` calls for.

    Points whose to-be-logged coordinate is not strictly positive are
    dropped; the count is carried on the returned series.
    """
    if mode not in _LOG_AXES:
        raise ValueError(f"unknown transform {mode!r}; expected one of {TRANSFORMS}")
    log_x, log_y = _LOG_AXES[mode]
    kept = []
    for x, y in series.points:
        if (log_x and x <= 0) or (log_y and y <= 0):
            continue
        kept.append((np.log10(x) if log_x else x, np.log10(y) if log_y else y))
    if not kept:
        raise AllPointsDropped(
            f"{series.label or 'series'}: every point has a non-positive coordinate under {mode}"
        )
    return PointSeries(
        points=tuple((float(x), float(y)) for x, y in kept),
        label=series.label,
        transform=mode,
        dropped=series.dropped + len(series.points) - len(kept),
    )


def linear_fit(series: PointSeries | Sequence[tuple[float, float]]) -> FitResult:
    """Least-squares straight line through ``series``.

    slope = Cov(x, y) / Var(x), intercept = mean(y) - slope * mean(x), and
    r_squared is the squared Pearson correlation. A series with constant y
    gets slope 0 and r_squared 0 instead of NaN.
    """
    if not isinstance(series, PointSeries):
        series = PointSeries(points=tuple((float(x), float(y)) for x, y in series))
    xs, ys = series.xs, series.ys
    if len(xs) < 2 or np.unique(xs).size < 2:
        raise DegenerateSeries(
            f"{series.label or 'series'}: need at least 2 distinct x values, got {np.unique(xs).size}"
        )
    dx = xs - xs.mean()
    dy = ys - ys.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    sxy = float(dx @ dy)
    if np.ptp(ys) == 0.0:
        slope, r_squared = 0.0, 0.0
    else:
        slope = sxy / sxx
        r_squared = min(1.0, max(0.0, sxy * sxy / (sxx * syy)))
    intercept = float(ys.mean() - slope * xs.mean())
    return FitResult(
        slope=slope,
        intercept=intercept,
        r_squared=r_squared,
        n_points=len(xs),
        transform=series.transform,
    )


def fit_transformed(series: PointSeries, mode: str) -> FitResult:
    return linear_fit(log_transform(series, mode))
