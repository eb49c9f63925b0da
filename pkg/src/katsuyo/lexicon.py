"""Seed verb inventory and the basic ↔ lexical-honorific correspondence map.

The shipped lexicon holds 107 basic verbs plus 40 lexical honorifics
(19 respectful, 21 humble). Population counts per conjugation class and
politeness type are a load-time contract; a file that breaks them is
rejected rather than silently accepted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .engine import ConjugationClass
from .errors import CountMismatch, DanglingHonorificLink, ParseError, UnknownLemma


class PolitenessType(enum.Enum):
    BASIC = "basic"
    RESPECTFUL = "respectful"   # referent-elevating lexical honorific
    HUMBLE = "humble"           # speaker-humbling lexical honorific

    @classmethod
    def from_text(cls, text: str) -> "PolitenessType":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown politeness type: {text!r}")


# Expected (politeness, class) population of the shipped lexicon.
EXPECTED_POPULATION: dict[tuple[PolitenessType, ConjugationClass], int] = {
    (PolitenessType.BASIC, ConjugationClass.REGULAR_I): 76,
    (PolitenessType.BASIC, ConjugationClass.REGULAR_II): 29,
    (PolitenessType.BASIC, ConjugationClass.IRREGULAR_KURU): 1,
    (PolitenessType.BASIC, ConjugationClass.IRREGULAR_SURU): 1,
    (PolitenessType.RESPECTFUL, ConjugationClass.REGULAR_I): 18,
    (PolitenessType.RESPECTFUL, ConjugationClass.REGULAR_II): 1,
    (PolitenessType.HUMBLE, ConjugationClass.REGULAR_I): 15,
    (PolitenessType.HUMBLE, ConjugationClass.REGULAR_II): 2,
    (PolitenessType.HUMBLE, ConjugationClass.IRREGULAR_SURU): 4,
}


@dataclass(frozen=True)
class VerbEntry:
    lemma: str
    romanization: str
    gloss: str
    conj_class: ConjugationClass
    politeness: PolitenessType
    # Link targets, populated on basic entries only (lemmas of honorifics).
    respectful: tuple[str, ...] = ()
    humble: tuple[str, ...] = ()


@dataclass
class Lexicon:
    entries: list[VerbEntry]
    by_lemma: dict[str, VerbEntry] = field(default_factory=dict)
    # basic lemma -> honorific lemmas
    respectful_of: dict[str, tuple[str, ...]] = field(default_factory=dict)
    humble_of: dict[str, tuple[str, ...]] = field(default_factory=dict)
    # honorific lemma -> basic source lemmas (inverse map)
    sources_of: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        self.by_lemma = {e.lemma: e for e in self.entries}
        inverse: dict[str, list[str]] = {}
        for e in self.entries:
            if e.politeness is not PolitenessType.BASIC:
                continue
            if e.respectful:
                self.respectful_of[e.lemma] = e.respectful
            if e.humble:
                self.humble_of[e.lemma] = e.humble
            for target in e.respectful + e.humble:
                inverse.setdefault(target, []).append(e.lemma)
        self.sources_of = {k: tuple(v) for k, v in inverse.items()}

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, lemma: str) -> VerbEntry:
        try:
            return self.by_lemma[lemma]
        except KeyError:
            raise UnknownLemma(lemma) from None

    def honorific_equivalents(self, lemma: str) -> tuple[set[str], set[str]]:
        """(respectful, humble) lemma sets for a verb.

        For a basic verb these are its direct links. For a lexical honorific
        the lookup goes through the inverse map: the union of its basic
        sources' links (so 伺う's humble set contains its alternatives
        まいる and 上がる).
        """
        entry = self.entry(lemma)
        if entry.politeness is PolitenessType.BASIC:
            return (
                set(self.respectful_of.get(lemma, ())),
                set(self.humble_of.get(lemma, ())),
            )
        respectful: set[str] = set()
        humble: set[str] = set()
        for source in self.sources_of.get(lemma, ()):
            respectful.update(self.respectful_of.get(source, ()))
            humble.update(self.humble_of.get(source, ()))
        return respectful, humble

    def sources(self, lemma: str) -> set[str]:
        """Basic verbs a lexical honorific stands in for (inverse lookup)."""
        self.entry(lemma)
        return set(self.sources_of.get(lemma, ()))

    def politeness_cluster(self, lemma: str) -> list[str]:
        """The lemma plus every politeness alternative, in lexicon order.

        For a basic verb: itself plus its honorifics. For an honorific:
        its basic sources plus all their honorifics (including itself).
        """
        entry = self.entry(lemma)
        if entry.politeness is PolitenessType.BASIC:
            basics = [lemma]
        else:
            basics = list(self.sources_of.get(lemma, ()))
        members = set(basics) | {lemma}
        for basic in basics:
            members.update(self.respectful_of.get(basic, ()))
            members.update(self.humble_of.get(basic, ()))
        return [e.lemma for e in self.entries if e.lemma in members]


HEADER = ["lemma", "romanization", "gloss", "class", "politeness", "respectful", "humble"]


def load_lexicon(path) -> Lexicon:
    """Load and validate a tab-separated lexicon file.

    Raises :class:`ParseError` on malformed lines, :class:`CountMismatch`
    when the class/politeness population deviates from the shipped contract,
    and :class:`DanglingHonorificLink` when an honorific entry is never
    referenced by a basic verb.
    """
    entries: list[VerbEntry] = []
    with open(path, encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    if not lines or lines[0].split("\t") != HEADER:
        raise ParseError(path, 1, f"expected header {HEADER}")
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != len(HEADER):
            raise ParseError(path, line_no, f"expected {len(HEADER)} columns, got {len(cols)}")
        lemma, roman, gloss, klass_text, pol_text, resp_text, humb_text = cols
        if not lemma:
            raise ParseError(path, line_no, "empty lemma")
        try:
            klass = ConjugationClass.from_text(klass_text)
            politeness = PolitenessType.from_text(pol_text)
        except Exception as exc:
            raise ParseError(path, line_no, str(exc)) from None
        respectful = tuple(t for t in resp_text.split(",") if t)
        humble = tuple(t for t in humb_text.split(",") if t)
        if politeness is not PolitenessType.BASIC and (respectful or humble):
            raise ParseError(path, line_no, "honorific entries must not carry links")
        entries.append(VerbEntry(lemma, roman, gloss, klass, politeness, respectful, humble))

    seen: set[str] = set()
    for e in entries:
        if e.lemma in seen:
            raise ParseError(path, 0, f"duplicate lemma {e.lemma!r}")
        seen.add(e.lemma)

    counts: dict[tuple[PolitenessType, ConjugationClass], int] = {}
    for e in entries:
        key = (e.politeness, e.conj_class)
        counts[key] = counts.get(key, 0) + 1
    for key, expected in EXPECTED_POPULATION.items():
        actual = counts.pop(key, 0)
        if actual != expected:
            raise CountMismatch(f"{key[0].value}/{key[1].value} verbs", expected, actual)
    for key, actual in counts.items():
        raise CountMismatch(f"{key[0].value}/{key[1].value} verbs", 0, actual)

    lex = Lexicon(entries)
    by_lemma = lex.by_lemma
    for e in entries:
        for target in e.respectful:
            if target not in by_lemma or by_lemma[target].politeness is not PolitenessType.RESPECTFUL:
                raise ParseError(path, 0, f"{e.lemma!r} links to non-respectful {target!r}")
        for target in e.humble:
            if target not in by_lemma or by_lemma[target].politeness is not PolitenessType.HUMBLE:
                raise ParseError(path, 0, f"{e.lemma!r} links to non-humble {target!r}")
    for e in entries:
        if e.politeness is PolitenessType.BASIC:
            continue
        if e.lemma not in lex.sources_of:
            raise DanglingHonorificLink(e.lemma)
    return lex
