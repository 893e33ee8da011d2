"""Fractal dimension, fractality and Zipf statistics of a letter tally.

Every fit here is an ordinary least-squares line on base-10 log (or
linear) coordinates:

* fractal dimension: log F against log(1/i), i = alphabetical rank (A=1..Z=26)
* Zipf slope: F against Zipf rank, no logs, zero-count letters included
* Zipf dimension: log F against log n, n = Zipf rank
* direct fits: F vs log n, log F vs n, log F vs log n

F is the percentage incidence of a letter. Letters with zero count are left
out of every fit that takes log F.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Mapping

from .corpus import ALPHABET, LetterTally
from .errors import DegenerateSeries
from .regression import FitResult, PointSeries, fit_transformed, linear_fit

# "ascending": rank 1 is the rarest letter, as Zipf orders are listed
# rarest-first. This is the convention that reproduces the published Hamlet
# Zipf dimension and direct-fit R² values from the letter counts.
RANK_CONVENTIONS = ("ascending", "descending")
DEFAULT_RANK_CONVENTION = "ascending"


@dataclass(frozen=True)
class FrequencyRow:
    letter: str
    interval: int
    count: int
    percent: float


@dataclass(frozen=True)
class FrequencyTable:
    rows: tuple[FrequencyRow, ...]
    total: int

    def percent(self, letter: str) -> float:
        return self.rows[ALPHABET.index(letter)].percent

    def count(self, letter: str) -> int:
        return self.rows[ALPHABET.index(letter)].count

    @property
    def percents(self) -> dict[str, float]:
        return {row.letter: row.percent for row in self.rows}

    @property
    def counts(self) -> dict[str, int]:
        return {row.letter: row.count for row in self.rows}


@dataclass(frozen=True)
class ZipfOrdering:
    ascending: tuple[str, ...]
    rank_of: Mapping[str, int]

    def ranks(self, convention: str = DEFAULT_RANK_CONVENTION) -> dict[str, int]:
        _check_convention(convention)
        if convention == "ascending":
            return dict(self.rank_of)
        size = len(self.ascending)
        return {letter: size + 1 - rank for letter, rank in self.rank_of.items()}

    def __str__(self) -> str:
        return " ".join(self.ascending)


@dataclass(frozen=True)
class DimensionReport:
    manuscript_id: str
    total_letters: int
    fractal_dimension: float
    fractality: float
    zipf_slope: float
    zipf_slope_r2: float
    zipf_dimension: float
    zipf_dimension_r2: float
    direct_fit_r2: tuple[float, float, float] | None
    rank_convention: str = DEFAULT_RANK_CONVENTION
    zipf_order: str | None = None
    origin: str = "computed"

    @property
    def fractal_r2(self) -> float:
        return self.fractality

    def to_dict(self) -> dict:
        d = asdict(self)
        d["direct_fit_r2"] = list(self.direct_fit_r2) if self.direct_fit_r2 is not None else None
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "DimensionReport":
        d = dict(d)
        if d.get("direct_fit_r2") is not None:
            d["direct_fit_r2"] = tuple(float(v) for v in d["direct_fit_r2"])
        return cls(**d)


def _check_convention(convention: str) -> None:
    if convention not in RANK_CONVENTIONS:
        raise ValueError(
            f"unknown rank convention {convention!r}; expected one of {RANK_CONVENTIONS}"
        )


def frequency_table(tally: LetterTally) -> FrequencyTable:
    if tally.total <= 0:
        raise ValueError("cannot build a frequency table from an empty tally")
    rows = tuple(
        FrequencyRow(
            letter=letter,
            interval=i,
            count=tally.counts[letter],
            percent=100.0 * tally.counts[letter] / tally.total,
        )
        for i, letter in enumerate(ALPHABET, start=1)
    )
    return FrequencyTable(rows=rows, total=tally.total)


def fractal_dimension(freq: FrequencyTable) -> FitResult:
    """Fit F = c / i**D; the slope of log F on log(1/i) is D, the R² is the fractality."""
    series = PointSeries(
        points=tuple((1.0 / row.interval, row.percent) for row in freq.rows),
        label="fractal dimension",
    )
    return fit_transformed(series, "loglog")


def zipf_order(freq: FrequencyTable) -> ZipfOrdering:
    ascending = tuple(sorted(ALPHABET, key=lambda letter: (freq.count(letter), letter)))
    return ZipfOrdering(
        ascending=ascending,
        rank_of={letter: rank for rank, letter in enumerate(ascending, start=1)},
    )


def zipf_slope(
    freq: FrequencyTable,
    order: ZipfOrdering | None = None,
    rank_convention: str = DEFAULT_RANK_CONVENTION,
    present_only: bool = False,
) -> FitResult:
    """Linear fit of F (percent) against Zipf rank.

    With ``present_only`` letters of zero count are removed and the rest
    re-ranked 1..k; by default all 26 letters take part.
    """
    order = order or zipf_order(freq)
    ranks = order.ranks(rank_convention)
    letters = [l for l in ALPHABET if not present_only or freq.count(l) > 0]
    if present_only:
        kept = sorted(letters, key=lambda l: ranks[l])
        ranks = {l: r for r, l in enumerate(kept, start=1)}
    series = PointSeries(
        points=tuple((float(ranks[l]), freq.percent(l)) for l in letters),
        label="Zipf slope",
    )
    return linear_fit(series)


def _rank_series(freq, order, rank_convention, label) -> PointSeries:
    ranks = order.ranks(rank_convention)
    return PointSeries(
        points=tuple((float(ranks[l]), freq.percent(l)) for l in ALPHABET),
        label=label,
    )


def zipf_dimension(
    freq: FrequencyTable,
    order: ZipfOrdering | None = None,
    rank_convention: str = DEFAULT_RANK_CONVENTION,
) -> FitResult:
    """Log-log fit of F against Zipf rank; the slope is the Zipf dimension.

    Under the descending convention the Zipf law reads F ~ 1/n**a, so x is
    log(1/n). Under the ascending convention F grows with n and x is log n.
    Either way a positive slope is the exponent magnitude.
    """
    order = order or zipf_order(freq)
    series = _rank_series(freq, order, rank_convention, "Zipf dimension")
    if rank_convention == "descending":
        series = PointSeries(
            points=tuple((1.0 / n, f) for n, f in series.points), label=series.label
        )
    return fit_transformed(series, "loglog")


def direct_fits(
    freq: FrequencyTable,
    order: ZipfOrdering | None = None,
    rank_convention: str = DEFAULT_RANK_CONVENTION,
) -> tuple[FitResult, FitResult, FitResult]:
    """F vs log n, log F vs n, and log F vs log n, n the Zipf rank."""
    order = order or zipf_order(freq)
    series = _rank_series(freq, order, rank_convention, "direct fit")
    return (
        fit_transformed(series, "semilog-x"),
        fit_transformed(series, "semilog-y"),
        fit_transformed(series, "loglog"),
    )


def analyze(
    tally: LetterTally,
    manuscript_id: str,
    rank_convention: str = DEFAULT_RANK_CONVENTION,
) -> DimensionReport:
    _check_convention(rank_convention)
    freq = frequency_table(tally)
    order = zipf_order(freq)
    try:
        fractal = fractal_dimension(freq)
        slope = zipf_slope(freq, order, rank_convention)
        dim = zipf_dimension(freq, order, rank_convention)
        direct = direct_fits(freq, order, rank_convention)
    except DegenerateSeries as exc:
        present = sum(1 for row in freq.rows if row.count)
        raise DegenerateSeries(
            f"{manuscript_id}: {exc} ({present} distinct letter(s) in {tally.total} letters)"
        ) from exc
    return DimensionReport(
        manuscript_id=manuscript_id,
        total_letters=tally.total,
        fractal_dimension=fractal.slope,
        fractality=fractal.r_squared,
        zipf_slope=slope.slope,
        zipf_slope_r2=slope.r_squared,
        zipf_dimension=dim.slope,
        zipf_dimension_r2=dim.r_squared,
        direct_fit_r2=tuple(fit.r_squared for fit in direct),
        rank_convention=rank_convention,
        zipf_order="".join(order.ascending),
    )
