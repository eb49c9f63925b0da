"""Japanese verb morphology toolkit.

Generates feature-tagged inflected forms from a seed lexicon and a rule
table, filters them by web-frequency evidence, analyzes surface forms back
into readings, and serves the result over a small HTTP API.
"""

from importlib import resources

__version__ = "0.1.0"


def data_path(name: str):
    """Filesystem path of a shipped data file (lexicon.tsv, rules.tsv, ...)."""
    return resources.files("katsuyo").joinpath("data", name)
