import pytest

from katsuyo import data_path
from katsuyo.frequency import filter_entries, load_hit_cache
from katsuyo.generate import generate_all, load_exclusions
from katsuyo.lexicon import load_lexicon
from katsuyo.rules import load_rules

# Session-scoped fixtures are read-only; tests that mutate entry statuses
# must generate their own entry lists.


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(data_path("lexicon.tsv"))


@pytest.fixture(scope="session")
def inventory():
    return load_rules(data_path("rules.tsv"))


@pytest.fixture(scope="session")
def exclusions():
    return load_exclusions(data_path("exclusions.tsv"))


@pytest.fixture(scope="session")
def hit_cache():
    return load_hit_cache(data_path("hits.tsv"))


@pytest.fixture(scope="session")
def generated(lexicon, inventory, exclusions):
    """Pre-filter dataset; do not mutate."""
    return generate_all(lexicon, inventory, exclusions)


@pytest.fixture(scope="session")
def filtered(lexicon, inventory, exclusions, hit_cache):
    """(kept, discarded) from a private generation run."""
    entries = generate_all(lexicon, inventory, exclusions)
    return filter_entries(entries, hit_cache)
