"""Batch driver behind the command line: input resolution, comparison, export."""

from __future__ import annotations

import configparser
import csv
import io
import json
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy import stats

from . import fixtures
from .corpus import (
    DEFAULT_URL_TEMPLATE,
    LetterTally,
    NormalizationPolicy,
    default_cache_dir,
    fetch_remote,
    normalize,
    read_local,
    strip_boilerplate,
    tally,
)
from .dimensions import (
    DEFAULT_RANK_CONVENTION,
    RANK_CONVENTIONS,
    DimensionReport,
    analyze,
    direct_fits,
    fractal_dimension,
    frequency_table,
    zipf_order,
)
from .errors import DuplicateManuscript, EmptyText, LetterFractalError, NotFound, UnknownPlot
from .regression import FitResult

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SCHEMA_NAME = "letterfractal.reports"
OUTPUT_FORMATS = ("table", "csv", "json")

FIXTURE_SCHEME = "fixture:"
TABLE_SCHEME = "table:"
ARCHIVE_SCHEMES = ("gutenberg:", "archive:")


@dataclass(frozen=True)
class RunConfig:
    fold_diacritics: bool = False
    url_template: str = DEFAULT_URL_TEMPLATE
    cache_dir: Path = field(default_factory=default_cache_dir)
    output_format: str = "table"
    rank_convention: str = DEFAULT_RANK_CONVENTION
    jobs: int = 1
    strip_local: bool = False

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {OUTPUT_FORMATS}")
        if self.rank_convention not in RANK_CONVENTIONS:
            raise ValueError(f"rank convention must be one of {RANK_CONVENTIONS}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        object.__setattr__(self, "cache_dir", Path(self.cache_dir))

    @property
    def policy(self) -> NormalizationPolicy:
        return NormalizationPolicy(fold_diacritics=self.fold_diacritics)

    @classmethod
    def load(cls, path: str | os.PathLike | None = None, **overrides) -> "RunConfig":
        """Defaults, then the key = value config file, then non-None ``overrides``."""
        values = read_config_file(path) if path else {}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


_BOOL_KEYS = {"fold_diacritics", "strip_local"}
_INT_KEYS = {"jobs"}


def read_config_file(path: str | os.PathLike) -> dict:
    """Parse a plain ``key = value`` file (``#`` comments; a section header is optional)."""
    text = Path(path).read_text(encoding="utf-8")
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = lambda key: key.strip().lower().replace("-", "_")
    parser.read_string("[letterfractal]\n" + text)
    known = {f.name for f in fields(RunConfig)}
    values = {}
    for section in parser.sections():
        for key, raw in parser.items(section):
            if key == "format":
                key = "output_format"
            if key not in known:
                raise ValueError(f"{path}: unknown config key {key!r}")
            if key in _BOOL_KEYS:
                values[key] = parser.getboolean(section, key)
            elif key in _INT_KEYS:
                values[key] = parser.getint(section, key)
            else:
                values[key] = raw
    return values


# -- input resolution ---------------------------------------------------------


def load_tally(spec: str, config: RunConfig) -> LetterTally:
    """Turn one input spec into a letter tally.

    ``fixture:NAME`` uses an embedded tally, ``gutenberg:ID`` (or
    ``archive:ID``) goes through the download cache with boilerplate
    removed, and anything else is a local UTF-8 file read verbatim.
    """
    if spec.startswith(FIXTURE_SCHEME):
        name = spec[len(FIXTURE_SCHEME):]
        try:
            return fixtures.fixture_tally(name)
        except KeyError as exc:
            raise NotFound(f"{spec}: {exc.args[0]}") from None
    for scheme in ARCHIVE_SCHEMES:
        if spec.startswith(scheme):
            doc = fetch_remote(spec[len(scheme):], config.cache_dir, config.url_template)
            doc = strip_boilerplate(doc)
            break
    else:
        doc = read_local(spec)
        if config.strip_local:
            doc = strip_boilerplate(doc)
    try:
        return tally(normalize(doc, config.policy))
    except EmptyText:
        raise EmptyText(f"{spec}: no countable letters") from None


@dataclass(frozen=True)
class Outcome:
    input: str
    report: DimensionReport | None = None
    error: LetterFractalError | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


def _check_unique(ids: Iterable[str]) -> None:
    seen = set()
    for manuscript_id in ids:
        if manuscript_id in seen:
            raise DuplicateManuscript(f"manuscript id {manuscript_id!r} given more than once")
        seen.add(manuscript_id)


def analyze_one(spec: str, config: RunConfig) -> Outcome:
    try:
        report = analyze(load_tally(spec, config), spec, config.rank_convention)
    except LetterFractalError as exc:
        log.debug("analysis of %s failed: %s", spec, exc)
        return Outcome(spec, error=exc)
    return Outcome(spec, report=report)


def analyze_inputs(inputs: Sequence[str], config: RunConfig) -> list[Outcome]:
    """One outcome per input, in input order; a failing input never aborts the batch."""
    _check_unique(inputs)
    if config.jobs == 1 or len(inputs) < 2:
        return [analyze_one(spec, config) for spec in inputs]
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(lambda spec: analyze_one(spec, config), inputs))


def load_reports(spec: str, config: RunConfig) -> list[DimensionReport]:
    """Reports for a comparison input: a published row, a saved export, or a fresh analysis."""
    if spec.startswith(TABLE_SCHEME):
        name = spec[len(TABLE_SCHEME):]
        try:
            return [fixtures.published_report(name, manuscript_id=spec)]
        except KeyError as exc:
            raise NotFound(f"{spec}: {exc.args[0]}") from None
    if spec.endswith(".json") and Path(spec).is_file():
        return reports_from_json(Path(spec).read_text(encoding="utf-8"))
    outcome = analyze_one(spec, config)
    if outcome.error is not None:
        raise outcome.error
    return [outcome.report]


# -- comparison -------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonTable:
    rows: tuple[DimensionReport, ...]
    spearman: float | None
    degenerate: bool

    def summary(self) -> str:
        if self.degenerate:
            return (
                f"D_f vs D_Z Spearman rank correlation: n/a "
                f"(degenerate: {len(self.rows)} manuscript(s) or tied values)"
            )
        return f"D_f vs D_Z Spearman rank correlation: {self.spearman:.4f} over {len(self.rows)} manuscripts"


def build_comparison(reports: Sequence[DimensionReport]) -> ComparisonTable:
    _check_unique(r.manuscript_id for r in reports)
    rows = tuple(sorted(reports, key=lambda r: (r.total_letters, r.manuscript_id)))
    rho = None
    if len(rows) >= 3:
        df = [r.fractal_dimension for r in rows]
        dz = [r.zipf_dimension for r in rows]
        if np.ptp(df) > 0 and np.ptp(dz) > 0:
            rho = float(stats.spearmanr(df, dz).statistic)
    degenerate = rho is None or math.isnan(rho)
    return ComparisonTable(rows=rows, spearman=None if degenerate else rho, degenerate=degenerate)


# -- report formats ---------------------------------------------------------------

CSV_COLUMNS = (
    "manuscript",
    "total_letters",
    "fractal_dimension",
    "fractal_r2",
    "zipf_slope",
    "zipf_slope_r2",
    "zipf_dimension",
    "zipf_dimension_r2",
    "direct_r2_a",
    "direct_r2_b",
    "direct_r2_c",
    "rank_convention",
)


def _csv_row(r: DimensionReport) -> list:
    direct = r.direct_fit_r2 or ("", "", "")
    return [
        r.manuscript_id,
        r.total_letters,
        repr(r.fractal_dimension),
        repr(r.fractality),
        repr(r.zipf_slope),
        repr(r.zipf_slope_r2),
        repr(r.zipf_dimension),
        repr(r.zipf_dimension_r2),
        *(repr(v) if v != "" else "" for v in direct),
        r.rank_convention,
    ]


def reports_to_csv(reports: Sequence[DimensionReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(_csv_row(r))
    return buf.getvalue()


def reports_to_json(
    reports: Sequence[DimensionReport],
    errors: Sequence[Outcome] = (),
    extra: dict | None = None,
) -> str:
    doc = {
        "schema": SCHEMA_NAME,
        "schema_version": SCHEMA_VERSION,
        "reports": [r.to_dict() for r in reports],
        "errors": [
            {"input": o.input, "error": type(o.error).__name__, "message": str(o.error)}
            for o in errors
        ],
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def reports_from_json(text: str) -> list[DimensionReport]:
    doc = json.loads(text)
    version = doc.get("schema_version")
    if doc.get("schema") != SCHEMA_NAME or version != SCHEMA_VERSION:
        raise ValueError(
            f"unsupported report document (schema={doc.get('schema')!r}, version={version!r})"
        )
    return [DimensionReport.from_dict(d) for d in doc["reports"]]


def reports_to_table(reports: Sequence[DimensionReport]) -> str:
    header = (
        f"{'Manuscript':<28} {'Letters':>8} {'D_f':>7} {'R2':>8} "
        f"{'Zipf slope':>10} {'R2':>8} {'D_Z':>7} {'R2':>8}   Direct-fit R2 (a, b, c)"
    )
    lines = [header, "-" * len(header)]
    for r in reports:
        direct = (
            ", ".join(f"{v:.6f}" for v in r.direct_fit_r2) if r.direct_fit_r2 else "n/a"
        )
        lines.append(
            f"{r.manuscript_id:<28} {r.total_letters:>8,} {r.fractal_dimension:>7.4f} "
            f"{r.fractality:>8.5f} {r.zipf_slope:>10.5f} {r.zipf_slope_r2:>8.6f} "
            f"{r.zipf_dimension:>7.4f} {r.zipf_dimension_r2:>8.6f}   {direct}"
        )
    return "\n".join(lines) + "\n"


def format_reports(reports, fmt: str, errors: Sequence[Outcome] = ()) -> str:
    if fmt == "csv":
        return reports_to_csv(reports)
    if fmt == "json":
        return reports_to_json(reports, errors)
    if fmt == "table":
        return reports_to_table(reports)
    raise ValueError(f"unknown output format {fmt!r}")


def format_comparison(table: ComparisonTable, fmt: str) -> str:
    if fmt == "json":
        return reports_to_json(
            table.rows,
            extra={
                "ordering": "total_letters",
                "spearman_df_dz": table.spearman,
                "degenerate": table.degenerate,
            },
        )
    body = format_reports(table.rows, fmt)
    if fmt == "csv":
        return body
    return body + "\n" + table.summary() + "\n"


# -- plot-point export ------------------------------------------------------------


@dataclass(frozen=True)
class PlotData:
    name: str
    description: str
    x_label: str
    y_label: str
    points: tuple[tuple[float, float], ...]
    labels: tuple[str, ...] = ()
    fit: FitResult | None = None


def _plot_fig1(t: LetterTally, convention: str) -> PlotData:
    freq = frequency_table(t)
    return PlotData(
        "fig1", "letter incidence by alphabetical interval", "i", "incidence",
        tuple((float(row.interval), float(row.count)) for row in freq.rows),
        labels=tuple(row.letter for row in freq.rows),
    )


def _plot_fig2(t: LetterTally, convention: str) -> PlotData:
    freq = frequency_table(t)
    rows = [row for row in freq.rows if row.count > 0]
    return PlotData(
        "fig2", "log10 F against log10(1/i), fractal-dimension fit", "log10(1/i)", "log10(F)",
        tuple((math.log10(1.0 / row.interval), math.log10(row.percent)) for row in rows),
        labels=tuple(row.letter for row in rows),
        fit=fractal_dimension(freq),
    )


def _plot_fig4(t: LetterTally, convention: str) -> PlotData:
    freq = frequency_table(t)
    order = zipf_order(freq)
    ranks = order.ranks(convention)
    letters = sorted(order.ascending, key=ranks.get)
    return PlotData(
        "fig4", f"letter incidence in Zipf order ({convention} rank)", "Zipf rank", "incidence",
        tuple((float(ranks[l]), float(freq.count(l))) for l in letters),
        labels=tuple(letters),
    )


def _direct_plot(which: int):
    names = ("fig7a", "fig7b", "fig7c")
    axes = (("log10(n)", "P"), ("n", "log10(P)"), ("log10(n)", "log10(P)"))
    log_x, log_y = ((True, False), (False, True), (True, True))[which]

    def build(t: LetterTally, convention: str) -> PlotData:
        freq = frequency_table(t)
        order = zipf_order(freq)
        ranks = order.ranks(convention)
        letters = [l for l in sorted(order.ascending, key=ranks.get) if not log_y or freq.count(l) > 0]
        pts = tuple(
            (
                math.log10(ranks[l]) if log_x else float(ranks[l]),
                math.log10(freq.percent(l)) if log_y else freq.percent(l),
            )
            for l in letters
        )
        return PlotData(
            names[which], f"direct fit {axes[which][1]} against {axes[which][0]}",
            axes[which][0], axes[which][1], pts,
            labels=tuple(letters),
            fit=direct_fits(freq, order, convention)[which],
        )

    return build


PLOTS = {
    "fig1": _plot_fig1,
    "fig2": _plot_fig2,
    "fig4": _plot_fig4,
    "fig7a": _direct_plot(0),
    "fig7b": _direct_plot(1),
    "fig7c": _direct_plot(2),
}


def plot_data(t: LetterTally, which: str, convention: str = DEFAULT_RANK_CONVENTION) -> PlotData:
    try:
        builder = PLOTS[which]
    except KeyError:
        raise UnknownPlot(
            f"unknown plot {which!r}; valid plots: {', '.join(sorted(PLOTS))}"
        ) from None
    return builder(t, convention)


def render_plot(data: PlotData, manuscript_id: str = "") -> str:
    """Two whitespace-separated numeric columns with ``#`` header lines."""
    out = [f"# {data.name}: {data.description}"]
    if manuscript_id:
        out.append(f"# manuscript: {manuscript_id}")
    out.append(f"# columns: {data.x_label} {data.y_label}")
    if data.labels:
        out.append(f"# point labels: {' '.join(data.labels)}")
    if data.fit is not None:
        f = data.fit
        out.append(
            f"# fit: y = slope*x + intercept; slope={f.slope!r} intercept={f.intercept!r} "
            f"r2={f.r_squared!r} n={f.n_points}"
        )
    out.extend(f"{x!r} {y!r}" for x, y in data.points)
    return "\n".join(out) + "\n"


def render_fig6(table: ComparisonTable) -> str:
    """Two gnuplot data blocks over manuscript number (by length): D_Z, then D_f + 1."""
    out = [
        "# fig6: Zipf dimension and fractal dimension + 1 by manuscript, shortest first",
        "# manuscripts: " + " | ".join(
            f"{n}={r.manuscript_id} ({r.total_letters})" for n, r in enumerate(table.rows, start=1)
        ),
        "# index 0 columns: manuscript D_Z",
    ]
    out.extend(f"{n} {r.zipf_dimension!r}" for n, r in enumerate(table.rows, start=1))
    out += ["", "", "# index 1 columns: manuscript D_f+1"]
    out.extend(f"{n} {r.fractal_dimension + 1.0!r}" for n, r in enumerate(table.rows, start=1))
    return "\n".join(out) + "\n"

