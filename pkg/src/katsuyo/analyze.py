"""Reverse lookup: surface form -> readings, plus related-form browsing.

The index is built from kept entries only. A surface form can carry
several readings (見られる is potential, passive, or respectful), and each
reading points back at exactly one dataset entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DuplicateEntry
from .features import FeatureBundle
from .frequency import confidence
from .generate import HONORIFIC_MARKERS, GeneratedEntry
from .lexicon import Lexicon, PolitenessType


@dataclass(frozen=True)
class Reading:
    lemma: str
    bundle: FeatureBundle
    rule_id: str
    confidence: int


@dataclass
class AnalysisIndex:
    by_form: dict[str, list[Reading]] = field(default_factory=dict)
    by_lemma_bundle: dict[tuple[str, str], list[str]] = field(default_factory=dict)
    by_lemma: dict[str, list[tuple[FeatureBundle, str]]] = field(default_factory=dict)
    form_confidence: dict[str, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.by_form)


@dataclass
class AnalysisResult:
    form: str
    readings: list[Reading]
    related: list[list[tuple[str, int]]]  # per reading: (form, confidence)

    @property
    def found(self) -> bool:
        return bool(self.readings)


def build_index(entries: list[GeneratedEntry], max_hits: int | None = None) -> AnalysisIndex:
    """Index kept entries by surface form and by (lemma, bundle).

    Confidence is derived from each form's hit count against the dataset
    maximum; syncretic readings of one form share its confidence.
    """
    if max_hits is None:
        max_hits = max((e.hits or 0 for e in entries), default=1) or 1
    index = AnalysisIndex()
    seen: set[tuple[str, str, frozenset]] = set()
    for entry in entries:
        key = (entry.lemma, entry.surface, entry.bundle.labels)
        if key in seen:
            raise DuplicateEntry(f"{entry.lemma}/{entry.surface}/{entry.bundle.text}")
        seen.add(key)
        score = confidence(entry.hits or 0, max_hits)
        reading = Reading(entry.lemma, entry.bundle, entry.rule_id, score)
        index.by_form.setdefault(entry.surface, []).append(reading)
        index.by_lemma_bundle.setdefault((entry.lemma, entry.bundle.text), []).append(entry.surface)
        index.by_lemma.setdefault(entry.lemma, []).append((entry.bundle, entry.surface))
        index.form_confidence[entry.surface] = score
    for readings in index.by_form.values():
        readings.sort(key=lambda r: (-r.confidence, r.bundle.text))
    return index


def analyze(index: AnalysisIndex, form: str, lexicon: Lexicon | None = None) -> AnalysisResult:
    """All readings of an exact surface string; not-found is a value.

    With a lexicon, each reading also gets its related forms (politeness
    alternatives sharing the same bundle up to honorific markers).
    """
    readings = list(index.by_form.get(form, ()))
    related: list[list[tuple[str, int]]] = []
    if lexicon is not None:
        for reading in readings:
            related.append(related_forms(index, reading.lemma, reading.bundle, lexicon))
    else:
        related = [[] for _ in readings]
    return AnalysisResult(form, readings, related)


def _strip_markers(bundle: FeatureBundle, politeness: PolitenessType) -> frozenset[str]:
    return bundle.labels - HONORIFIC_MARKERS[politeness]


def related_forms(
    index: AnalysisIndex,
    lemma: str,
    bundle: FeatureBundle,
    lexicon: Lexicon,
) -> list[tuple[str, int]]:
    """Forms of the lemma and its honorific alternatives with the same
    bundle, ignoring the FORM;ELEV / FORM;HUMB markers that honorific
    substitution adds. Includes the query form itself; sorted by
    confidence descending.
    """
    query_entry = lexicon.entry(lemma)  # raises UnknownLemma
    target = _strip_markers(bundle, query_entry.politeness)
    results: list[tuple[str, int]] = []
    seen: set[str] = set()
    for member in lexicon.politeness_cluster(lemma):
        member_politeness = lexicon.entry(member).politeness
        for member_bundle, form in index.by_lemma.get(member, ()):
            if _strip_markers(member_bundle, member_politeness) != target:
                continue
            if form in seen:
                continue
            seen.add(form)
            results.append((form, index.form_confidence.get(form, 0)))
    results.sort(key=lambda pair: (-pair[1], pair[0]))
    return results
