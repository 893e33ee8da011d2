"""Letter-frequency fractal and Zipf analysis of literary texts."""

from .corpus import (
    LetterTally,
    NormalizationPolicy,
    RawDocument,
    fetch_remote,
    normalize,
    read_local,
    strip_boilerplate,
    tally,
)
from .dimensions import (
    DimensionReport,
    FrequencyTable,
    ZipfOrdering,
    analyze,
    direct_fits,
    fractal_dimension,
    frequency_table,
    zipf_dimension,
    zipf_order,
    zipf_slope,
)
from .errors import (
    AllPointsDropped,
    DegenerateSeries,
    DuplicateManuscript,
    EmptyText,
    LetterFractalError,
    MalformedMarkers,
    NetworkUnavailable,
    NotFound,
    UnknownPlot,
)
from .regression import FitResult, PointSeries, linear_fit, log_transform

__version__ = "0.1.0"

__all__ = [
    "AllPointsDropped",
    "DegenerateSeries",
    "DimensionReport",
    "DuplicateManuscript",
    "EmptyText",
    "FitResult",
    "FrequencyTable",
    "LetterFractalError",
    "LetterTally",
    "MalformedMarkers",
    "NetworkUnavailable",
    "NormalizationPolicy",
    "NotFound",
    "PointSeries",
    "RawDocument",
    "UnknownPlot",
    "ZipfOrdering",
    "analyze",
    "direct_fits",
    "fetch_remote",
    "fractal_dimension",
    "frequency_table",
    "linear_fit",
    "log_transform",
    "normalize",
    "read_local",
    "strip_boilerplate",
    "tally",
    "zipf_dimension",
    "zipf_order",
    "zipf_slope",
]
