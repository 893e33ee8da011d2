import pytest

from letterfractal.corpus import LetterTally
from letterfractal.dimensions import frequency_table
from letterfractal.fixtures import HAMLET_COUNTS


@pytest.fixture
def hamlet_tally():
    return LetterTally.from_counts(HAMLET_COUNTS)


@pytest.fixture
def hamlet_freq(hamlet_tally):
    return frequency_table(hamlet_tally)


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("LETTERFRACTAL_CACHE_DIR", str(tmp_path / "cache"))
