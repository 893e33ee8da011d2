"""Manuscript ingestion: reading, boilerplate stripping, normalization, tallying."""

from __future__ import annotations

import logging
import os
import re
import string
import tempfile
import unicodedata
import urllib.error
import urllib.request
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import EmptyText, MalformedMarkers, NetworkUnavailable, NotFound

log = logging.getLogger(__name__)

ALPHABET = string.ascii_uppercase

SOURCES = ("local-file", "remote-archive", "inline")

DEFAULT_URL_TEMPLATE = "https://www.gutenberg.org/cache/epub/{id}/pg{id}.txt"
CACHE_ENV_VAR = "LETTERFRACTAL_CACHE_DIR"

_NON_LETTER_RE = re.compile(r"[^A-Za-z]+")
_ARCHIVE_ID_RE = re.compile(r"^[0-9]+$")
_START_RE = re.compile(r"^\s*\*\*\*\s*START OF\b", re.IGNORECASE)
_END_RE = re.compile(r"^\s*\*\*\*\s*END OF\b", re.IGNORECASE)
_TITLE_RE = re.compile(r"^Title:\s*(.+?)\s*$", re.MULTILINE)


@dataclass(frozen=True)
class RawDocument:
    id: str
    title: str
    body: str
    source: str = "inline"

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown document source {self.source!r}")


@dataclass(frozen=True)
class NormalizationPolicy:
    """Which characters survive as letters.

    Case folding is always to upper case and only A-Z are kept. With
    ``fold_diacritics`` accented Latin letters are reduced to their base
    letter (é -> E) before filtering; otherwise they are discarded.
    """

    fold_diacritics: bool = False
    case_folding: str = "to-upper"

    def __post_init__(self):
        if self.case_folding != "to-upper":
            raise ValueError(f"unsupported case folding {self.case_folding!r}")


@dataclass(frozen=True)
class LetterTally:
    counts: Mapping[str, int]
    total: int

    def __post_init__(self):
        counts = {letter: int(self.counts.get(letter, 0)) for letter in ALPHABET}
        extra = set(self.counts) - set(ALPHABET)
        if extra:
            raise ValueError(f"non A-Z keys in tally: {sorted(extra)}")
        if any(c < 0 for c in counts.values()):
            raise ValueError("letter counts must be non-negative")
        if sum(counts.values()) != self.total:
            raise ValueError(
                f"total {self.total} does not equal the sum of counts {sum(counts.values())}"
            )
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_counts(cls, counts: Mapping[str, int]) -> "LetterTally":
        return cls(counts=dict(counts), total=sum(counts.values()))

    def scaled(self, k: int) -> "LetterTally":
        return LetterTally.from_counts({l: c * k for l, c in self.counts.items()})


def normalize(raw: RawDocument | str, policy: NormalizationPolicy | None = None) -> str:
    """Reduce a document to its stream of A-Z letters, order preserved."""
    policy = policy or NormalizationPolicy()
    text = raw.body if isinstance(raw, RawDocument) else raw
    if policy.fold_diacritics:
        text = "".join(
            ch for ch in unicodedata.normalize("NFKD", text) if not unicodedata.combining(ch)
        )
    # Filter before upper-casing so that e.g. "ß".upper() == "SS" cannot
    # smuggle letters in.
    return _NON_LETTER_RE.sub("", text).upper()


def tally(letters: str) -> LetterTally:
    if not letters:
        raise EmptyText("no countable letters")
    counts = Counter(letters)
    return LetterTally.from_counts(counts)


def strip_boilerplate(raw: RawDocument) -> RawDocument:
    """Keep only the text between archive START/END marker lines.

    Documents without either marker are returned unchanged.
    """
    lines = raw.body.splitlines(keepends=True)
    start = next((n for n, line in enumerate(lines) if _START_RE.match(line)), None)
    end = next((n for n, line in enumerate(lines) if _END_RE.match(line)), None)
    if start is None and end is None:
        return raw
    if start is None or end is None or end < start:
        raise MalformedMarkers(
            f"{raw.id}: boilerplate markers unbalanced (start line {start}, end line {end})"
        )
    body = "".join(lines[start + 1 : end])
    return RawDocument(id=raw.id, title=raw.title, body=body, source=raw.source)


def read_local(path: str | os.PathLike, doc_id: str | None = None) -> RawDocument:
    path = Path(path)
    try:
        body = path.read_text(encoding="utf-8-sig")
    except FileNotFoundError as exc:
        raise NotFound(f"{path}: no such file") from exc
    except IsADirectoryError as exc:
        raise NotFound(f"{path}: is a directory") from exc
    return RawDocument(id=doc_id or str(path), title=path.stem, body=body, source="local-file")


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "letterfractal"


def _cache_path(cache_dir: Path, archive_id: str) -> Path:
    return cache_dir / f"{archive_id}.txt"


def _write_atomic(dest: Path, data: bytes) -> None:
    dest.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=dest.parent, prefix=f".{dest.name}.", suffix=".part")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, dest)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _document_from_bytes(archive_id: str, data: bytes) -> RawDocument:
    body = data.decode("utf-8-sig", errors="replace")
    match = _TITLE_RE.search(body[:5000])
    title = match.group(1) if match else archive_id
    return RawDocument(id=archive_id, title=title, body=body, source="remote-archive")


def fetch_remote(
    archive_id: str,
    cache_dir: str | os.PathLike | None = None,
    url_template: str = DEFAULT_URL_TEMPLATE,
    timeout: float = 30.0,
) -> RawDocument:
    """Return the plain-text edition for ``archive_id``, downloading it on a cache miss.

    The cache holds one file per id; writes go through an atomic rename so
    concurrent fetchers never observe a partial file.
    """
    archive_id = str(archive_id).strip()
    if not _ARCHIVE_ID_RE.match(archive_id):
        raise NotFound(f"{archive_id!r} is not a valid archive id")
    cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    cached = _cache_path(cache_dir, archive_id)
    if cached.is_file():
        log.debug("cache hit for %s at %s", archive_id, cached)
        return _document_from_bytes(archive_id, cached.read_bytes())

    url = url_template.format(id=archive_id)
    log.info("fetching %s", url)
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            data = resp.read()
    except urllib.error.HTTPError as exc:
        if exc.code in (404, 410):
            raise NotFound(f"archive id {archive_id}: no plain-text edition at {url}") from exc
        raise NetworkUnavailable(f"{url}: HTTP {exc.code}") from exc
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkUnavailable(f"{url}: {exc}") from exc
    if not data:
        raise NotFound(f"archive id {archive_id}: empty document at {url}")
    _write_atomic(cached, data)
    return _document_from_bytes(archive_id, data)
