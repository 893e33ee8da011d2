class LetterFractalError(Exception):
    """Base class for every error raised by this package."""


class EmptyText(LetterFractalError):
    """A manuscript has no countable letters."""


class NetworkUnavailable(LetterFractalError):
    pass


class NotFound(LetterFractalError):
    """An archive id or local path does not resolve to a plain-text document."""


class MalformedMarkers(LetterFractalError):
    pass


class DegenerateSeries(LetterFractalError):
    """Fewer than two distinct x values are available for a fit."""


class AllPointsDropped(LetterFractalError):
    """No point survived zero-exclusion before a logarithmic transform."""


class DuplicateManuscript(LetterFractalError):
    pass


class UnknownPlot(LetterFractalError):
    pass
