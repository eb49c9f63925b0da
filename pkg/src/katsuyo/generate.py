"""Dataset generation: cross the seed lexicon with the rule inventory.

Lexical honorifics carry their politeness in the lexicon rather than in
the rules, so every bundle generated for them gains the corresponding
FORM;ELEV or FORM;HUMB markers. Entries are produced in lexicon order x
rule order, which makes the emitted dataset byte-stable across runs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .engine import compose
from .errors import InvariantViolation, ParseError
from .features import FeatureBundle, with_labels
from .lexicon import Lexicon, PolitenessType, VerbEntry
from .rules import RuleInventory, rules_for

# Labels added to every bundle of a lexical honorific.
HONORIFIC_MARKERS: dict[PolitenessType, frozenset[str]] = {
    PolitenessType.BASIC: frozenset(),
    PolitenessType.RESPECTFUL: frozenset({"FORM", "ELEV"}),
    PolitenessType.HUMBLE: frozenset({"FORM", "HUMB"}),
}


class EntryStatus(enum.Enum):
    PENDING = "pending"
    KEPT = "kept"
    DISCARDED_LOW_FREQUENCY = "discarded_low_frequency"
    DISCARDED_MANUAL = "discarded_manual"


_ALLOWED_TRANSITIONS = {
    (EntryStatus.PENDING, EntryStatus.KEPT),
    (EntryStatus.PENDING, EntryStatus.DISCARDED_LOW_FREQUENCY),
    (EntryStatus.PENDING, EntryStatus.DISCARDED_MANUAL),
}


@dataclass
class GeneratedEntry:
    lemma: str
    surface: str
    bundle: FeatureBundle
    rule_id: str
    hits: int | None = None
    status: EntryStatus = EntryStatus.PENDING

    def mark(self, status: EntryStatus) -> None:
        if (self.status, status) not in _ALLOWED_TRANSITIONS:
            raise InvariantViolation(f"illegal status transition {self.status} -> {status}")
        self.status = status


@dataclass(frozen=True)
class ExclusionList:
    """Hand-curated (lemma, surface form) pairs dropped from the dataset."""

    entries: tuple[tuple[str, str, str], ...] = ()  # lemma, form, reason
    pairs: frozenset[tuple[str, str]] = field(default=frozenset())

    @classmethod
    def from_rows(cls, rows) -> "ExclusionList":
        rows = tuple(rows)
        return cls(rows, frozenset((lemma, form) for lemma, form, _ in rows))

    def __contains__(self, pair: tuple[str, str]) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.entries)


def load_exclusions(path) -> ExclusionList:
    """Read the tab-separated exclusion file (lemma, form, reason)."""
    rows = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle.read().splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise ParseError(path, line_no, f"expected 3 columns, got {len(cols)}")
            rows.append((cols[0], cols[1], cols[2]))
    return ExclusionList.from_rows(rows)


def generate_verb(verb: VerbEntry, inventory: RuleInventory) -> list[GeneratedEntry]:
    """All inflected forms of one verb, one entry per applicable rule."""
    markers = HONORIFIC_MARKERS[verb.politeness]
    entries = []
    for rule in rules_for(verb, inventory):
        surface = compose(verb.lemma, verb.conj_class, rule.template)
        bundle = with_labels(rule.bundle, markers) if markers else rule.bundle
        entries.append(GeneratedEntry(verb.lemma, surface, bundle, rule.rule_id))
    return entries


def generate_all(
    lexicon: Lexicon,
    inventory: RuleInventory,
    exclusions: ExclusionList | None = None,
) -> list[GeneratedEntry]:
    """The full pre-filter dataset, in lexicon order x rule order.

    Exclusion-list matches are marked DISCARDED_MANUAL; everything else
    stays PENDING for the frequency filter.
    """
    exclusions = exclusions or ExclusionList.from_rows(())
    entries: list[GeneratedEntry] = []
    for verb in lexicon.entries:
        for entry in generate_verb(verb, inventory):
            if (entry.lemma, entry.surface) in exclusions:
                entry.mark(EntryStatus.DISCARDED_MANUAL)
            entries.append(entry)
    return entries
