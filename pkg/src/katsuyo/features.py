"""Feature labels and feature bundles.

A surface form is described by a bundle of UniMorph-style labels
(e.g. ``V;PST;PFV`` for a past perfective). Bundles are sets: the order
labels are written in carries no meaning, and every bundle has a single
canonical serialization produced by :func:`format_bundle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvariantViolation, UnknownLabel

# Label inventory, keyed by label code, valued by dimension.
DIMENSIONS: dict[str, str] = {
    "V": "POS",
    "PRS": "Tense",
    "PST": "Tense",
    "IPFV": "Aspect",
    "PFV": "Aspect",
    "PROSP": "Aspect",
    "IMP": "Mood",
    "OBLIG": "Mood",
    "INTEN": "Mood",
    "OPT": "Mood",
    "POT": "Mood",
    "PERM": "Mood",
    "POL": "Politeness",
    "FORM": "Politeness",
    "ELEV": "Politeness",
    "HUMB": "Politeness",
    "FOREG": "Register",
    "COL": "Register",
    "NEG": "Polarity",
    "PASS": "Voice",
    "CAUS": "Voice",
    "1": "Person",
    "3": "Person",
}

# Canonical serialization order: POS, formality markers, tense, aspect,
# voice, mood, politeness/register, polarity, person.
CANONICAL_ORDER: tuple[str, ...] = (
    "V",
    "FORM",
    "ELEV",
    "HUMB",
    "PRS",
    "PST",
    "IPFV",
    "PFV",
    "PROSP",
    "CAUS",
    "PASS",
    "IMP",
    "OBLIG",
    "INTEN",
    "OPT",
    "POT",
    "PERM",
    "POL",
    "FOREG",
    "NEG",
    "COL",
    "1",
    "3",
)

_ORDER_INDEX = {label: i for i, label in enumerate(CANONICAL_ORDER)}

TENSE_LABELS = frozenset({"PRS", "PST"})
PERSON_LABELS = frozenset({"1", "3"})


@dataclass(frozen=True)
class FeatureBundle:
    """An immutable set of feature labels."""

    labels: frozenset[str]

    def __contains__(self, label: str) -> bool:
        return label in self.labels

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.labels, key=_ORDER_INDEX.__getitem__))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def text(self) -> str:
        return format_bundle(self)

    def __str__(self) -> str:
        return format_bundle(self)


def _validate(labels: frozenset[str]) -> None:
    pos = [l for l in labels if DIMENSIONS[l] == "POS"]
    if len(pos) != 1:
        raise InvariantViolation(f"bundle must contain exactly one POS label, got {sorted(labels)}")
    tenses = labels & TENSE_LABELS
    if len(tenses) > 1:
        raise InvariantViolation(f"at most one tense label allowed: {sorted(tenses)}")
    if "IPFV" in labels and "PFV" in labels:
        raise InvariantViolation("IPFV and PFV are mutually exclusive")
    if "PROSP" in labels and ("PST" in labels or "PFV" in labels):
        raise InvariantViolation("PROSP cannot combine with PST or PFV")
    if "ELEV" in labels and "HUMB" in labels:
        raise InvariantViolation("ELEV and HUMB are mutually exclusive")
    persons = labels & PERSON_LABELS
    if persons and "OPT" not in labels:
        raise InvariantViolation(f"person label {sorted(persons)} requires OPT")


def bundle_of(labels: Iterable[str]) -> FeatureBundle:
    """Build a validated bundle from an iterable of known label codes."""
    label_set = frozenset(labels)
    for token in label_set:
        if token not in DIMENSIONS:
            raise UnknownLabel(token)
    _validate(label_set)
    return FeatureBundle(label_set)


def parse_bundle(text: str) -> FeatureBundle:
    """Parse a semicolon-joined label string into a bundle.

    Unknown tokens raise :class:`UnknownLabel`; combinations that break the
    bundle invariants raise :class:`InvariantViolation`. Nothing is silently
    dropped.
    """
    if not text or not text.strip():
        raise InvariantViolation("empty feature string")
    tokens = [t.strip() for t in text.split(";")]
    if any(not t for t in tokens):
        raise InvariantViolation(f"empty label token in {text!r}")
    return bundle_of(tokens)


def format_bundle(bundle: FeatureBundle) -> str:
    """Serialize a bundle in canonical order."""
    return ";".join(sorted(bundle.labels, key=_ORDER_INDEX.__getitem__))


def bundle_equals(a: FeatureBundle, b: FeatureBundle) -> bool:
    """Set equality; source ordering never matters."""
    return a.labels == b.labels


def with_labels(bundle: FeatureBundle, extra: Iterable[str]) -> FeatureBundle:
    """Return a validated copy of ``bundle`` with ``extra`` labels added."""
    return bundle_of(bundle.labels | frozenset(extra))


def without_labels(bundle: FeatureBundle, drop: Iterable[str]) -> frozenset[str]:
    """Label set minus ``drop``; used for marker-insensitive comparisons.

    Returns a bare frozenset because the result may not be a valid bundle
    on its own (e.g. stripping V would violate the POS invariant).
    """
    return bundle.labels - frozenset(drop)
