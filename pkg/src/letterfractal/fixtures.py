"""Published letter statistics for ten Shakespeare tragedies.

``HAMLET_COUNTS`` is the full per-letter incidence of the Hamlet text the
published analysis used; it is the only play with a complete tally. For the
other nine plays only the summary statistics and Zipf orders are known, so
they are available as ready-made reports (``published_report``) rather than
as tallies.
"""

from __future__ import annotations

from .corpus import LetterTally
from .dimensions import DimensionReport

HAMLET_COUNTS = {
    "A": 10251, "B": 1816, "C": 2840, "D": 5375, "E": 15845, "F": 2712,
    "G": 2493, "H": 8639, "I": 8905, "J": 110, "K": 1257, "L": 6489,
    "M": 4239, "N": 8578, "O": 11450, "P": 2006, "Q": 218, "R": 8100,
    "S": 8668, "T": 12450, "U": 4738, "V": 1219, "W": 3110, "X": 177,
    "Y": 3198, "Z": 120,
}

# Published percentage incidence for Hamlet, as printed.
HAMLET_PERCENT = {
    "A": 7.5931645963423, "B": 1.34515529284534, "C": 2.10365695577135,
    "D": 3.98139300608135, "E": 11.7367762197877, "F": 2.0088442479056,
    "G": 1.84662563054154, "H": 6.399117056658, "I": 6.59614971519152,
    "J": 0.0814796708221299, "K": 0.931090420212884, "L": 4.80655985422546,
    "M": 3.1399302237728, "N": 6.35393287556573, "O": 8.48129300830352,
    "P": 1.48589290608357, "Q": 0.161477893083857, "R": 5.99986666962956,
    "S": 6.42059806078384, "T": 9.2220172885047, "U": 3.50955163959319,
    "V": 0.902942897565239, "W": 2.30365251142567, "X": 0.131108197595609,
    "Y": 2.36883624808338, "Z": 0.0888869136241417,
}

TITLES = {
    "antony-and-cleopatra": "Antony and Cleopatra",
    "coriolanus": "Coriolanus",
    "hamlet": "Hamlet",
    "julius-caesar": "Julius Caesar",
    "king-lear": "King Lear",
    "macbeth": "Macbeth",
    "othello": "Othello",
    "romeo-and-juliet": "Romeo and Juliet",
    "timon-of-athens": "Timon of Athens",
    "titus-andronicus": "Titus Andronicus",
}

# total letters, D_f, R², Zipf slope, R², D_Z, R²
PUBLISHED = {
    "antony-and-cleopatra": (116209, 0.5516, 0.07923, 0.40587, 0.921137, 1.9320, 0.972011),
    "coriolanus": (124626, 0.4707, 0.06009, 0.40876, 0.927299, 1.8764, 0.955026),
    "hamlet": (135003, 0.4500, 0.06712, 0.40585, 0.928312, 1.6973, 0.954612),
    "julius-caesar": (86659, 0.5269, 0.07023, 0.40596, 0.948025, 1.9448, 0.956628),
    "king-lear": (115986, 0.5598, 0.07934, 0.40276, 0.913496, 1.9424, 0.955115),
    "macbeth": (77524, 0.5985, 0.09261, 0.40247, 0.928162, 1.9414, 0.974379),
    "othello": (115245, 0.5699, 0.08031, 0.41361, 0.925255, 1.9720, 0.961605),
    "romeo-and-juliet": (105834, 0.5496, 0.08686, 0.40588, 0.920359, 1.8441, 0.977931),
    "timon-of-athens": (83500, 0.5358, 0.07680, 0.41199, 0.927070, 1.8935, 0.959367),
    "titus-andronicus": (92467, 0.5180, 0.06743, 0.40869, 0.936204, 1.9558, 0.961202),
}

# Only Hamlet has published direct-fit R² values.
PUBLISHED_DIRECT_R2 = {"hamlet": (0.675249, 0.846831, 0.954612)}

# Letters rarest first.
ZIPF_ORDERS = {
    "antony-and-cleopatra": "ZJQXKVBGFPWYCMUDLHNIRSOTAE",
    "coriolanus": "QJXZKVPGBFYWCMDLUHRNSAIOTE",
    "hamlet": "JZXQVKBPGFCWYMUDLRNHSIAOTE",
    "julius-caesar": "QJXZKVPGBFWYCMDLUHNRISOATE",
    "king-lear": "ZQJXVKBPFCGWYMUDLIHSRNAOTE",
    "macbeth": "ZJXQVKPGBYFWCMULDRISNHAOTE",
    "othello": "ZQJXKVPBGFCWYMUDLRNHSIATOE",
    "romeo-and-juliet": "ZQXJKVPBGFCWYMUDLNRSHIAOTE",
    "timon-of-athens": "ZQJXKVBGPCFYWMUDLRHNISAOTE",
    "titus-andronicus": "ZXJQKVPGBFCYWMLDUHIRNSAOTE",
}

TALLIES = {"hamlet": HAMLET_COUNTS}


def fixture_tally(name: str) -> LetterTally:
    try:
        return LetterTally.from_counts(TALLIES[name])
    except KeyError:
        raise KeyError(
            f"no letter tally for fixture {name!r}; available: {sorted(TALLIES)}"
        ) from None


def published_report(name: str, manuscript_id: str | None = None) -> DimensionReport:
    try:
        total, df, df_r2, zs, zs_r2, dz, dz_r2 = PUBLISHED[name]
    except KeyError:
        raise KeyError(f"no published row for {name!r}; available: {sorted(PUBLISHED)}") from None
    return DimensionReport(
        manuscript_id=manuscript_id or name,
        total_letters=total,
        fractal_dimension=df,
        fractality=df_r2,
        zipf_slope=zs,
        zipf_slope_r2=zs_r2,
        zipf_dimension=dz,
        zipf_dimension_r2=dz_r2,
        direct_fit_r2=PUBLISHED_DIRECT_R2.get(name),
        rank_convention="ascending",
        zipf_order=ZIPF_ORDERS[name],
        origin="published",
    )
