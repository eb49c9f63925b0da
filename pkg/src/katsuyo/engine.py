"""Pure conjugation core: stems, euphonic (onbin) changes, and suffix templates.

All composition happens on the written form (kanji + kana) exactly as it
would appear in text; readings and pronunciation are out of scope. The
engine knows four conjugation classes:

- Regular I (godan): final kana shifts across vowel rows (書く → 書か/書き/書け).
- Regular II (ichidan): drop final る, attach suffixes (食べる → 食べ).
- Irregular 来る.
- Irregular する, including compound lemmas ending in する (拝見する).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from functools import lru_cache

from .errors import MalformedLemma, TemplateNotApplicable


class ConjugationClass(enum.Enum):
    REGULAR_I = "RegularI"
    REGULAR_II = "RegularII"
    IRREGULAR_KURU = "IrregularKuru"
    IRREGULAR_SURU = "IrregularSuru"

    @classmethod
    def from_text(cls, text: str) -> "ConjugationClass":
        for member in cls:
            if member.value == text:
                return member
        raise MalformedLemma(f"unknown conjugation class: {text!r}")


@dataclass(frozen=True)
class StemSet:
    """Every stem a suffix template may attach to."""

    lemma: str
    negative_stem: str      # 書か (a-row; う verbs use わ)
    masu_stem: str          # 書き (i-row / continuative)
    te_form: str            # 書いて
    ta_form: str            # 書いた
    imperative_base: str    # 書け
    volitional_form: str    # 書こう
    potential_stem: str     # 書け (+る = 書ける); する uses でき
    passive_stem: str       # 書かれ (+る = 書かれる)
    causative_stem: str     # 書かせ (+る = 書かせる)


STEM_ROLES = frozenset(f.name for f in fields(StemSet))

# Vowel-row kana per godan ending: (a-row, i-row, e-row, o-row).
GODAN_ROWS: dict[str, tuple[str, str, str, str]] = {
    "う": ("わ", "い", "え", "お"),
    "く": ("か", "き", "け", "こ"),
    "ぐ": ("が", "ぎ", "げ", "ご"),
    "す": ("さ", "し", "せ", "そ"),
    "つ": ("た", "ち", "て", "と"),
    "ぬ": ("な", "に", "ね", "の"),
    "ぶ": ("ば", "び", "べ", "ぼ"),
    "む": ("ま", "み", "め", "も"),
    "る": ("ら", "り", "れ", "ろ"),
}

# Onbin (euphonic) endings for godan te/ta forms.
ONBIN: dict[str, tuple[str, str]] = {
    "う": ("って", "った"),
    "つ": ("って", "った"),
    "る": ("って", "った"),
    "む": ("んで", "んだ"),
    "ぶ": ("んで", "んだ"),
    "ぬ": ("んで", "んだ"),
    "く": ("いて", "いた"),
    "ぐ": ("いで", "いだ"),
    "す": ("して", "した"),
}

# Honorific godan verbs whose continuative and imperative use い instead of り
# (いらっしゃいます, not *いらっしゃります; imperative いらっしゃい, not *いらっしゃれ).
IRREGULAR_MASU_STEM: dict[str, str] = {
    "いらっしゃる": "いらっしゃい",
    "おっしゃる": "おっしゃい",
    "くださる": "ください",
    "なさる": "なさい",
}

# くれる keeps the bare stem as its imperative (くれ, not *くれろ).
IRREGULAR_IMPERATIVE: dict[str, str] = dict(IRREGULAR_MASU_STEM)
IRREGULAR_IMPERATIVE["くれる"] = "くれ"


def apply_euphony(lemma: str) -> tuple[str, str]:
    """Te/ta forms for a Regular I lemma, applying the onbin table.

    行く is the sole exception to the く → いて/いた rule: 行って/行った.
    """
    final = lemma[-1:] if lemma else ""
    if final not in ONBIN:
        raise MalformedLemma(f"not a Regular I lemma: {lemma!r}")
    if lemma.endswith("行く"):
        stem = lemma[:-1]
        return stem + "って", stem + "った"
    te, ta = ONBIN[final]
    stem = lemma[:-1]
    return stem + te, stem + ta


@lru_cache(maxsize=None)
def compute_stems(lemma: str, klass: ConjugationClass) -> StemSet:
    """Derive the full stem set for a lemma of the given class."""
    if not lemma:
        raise MalformedLemma("empty lemma")

    if klass is ConjugationClass.REGULAR_I:
        final = lemma[-1]
        if final not in GODAN_ROWS:
            raise MalformedLemma(f"Regular I lemma must end in an u-row kana: {lemma!r}")
        stem = lemma[:-1]
        a, i, e, o = GODAN_ROWS[final]
        te, ta = apply_euphony(lemma)
        masu = IRREGULAR_MASU_STEM.get(lemma, stem + i)
        imperative = IRREGULAR_IMPERATIVE.get(lemma, stem + e)
        return StemSet(
            lemma=lemma,
            negative_stem=stem + a,
            masu_stem=masu,
            te_form=te,
            ta_form=ta,
            imperative_base=imperative,
            volitional_form=stem + o + "う",
            potential_stem=stem + e,
            passive_stem=stem + a + "れ",
            causative_stem=stem + a + "せ",
        )

    if klass is ConjugationClass.REGULAR_II:
        if not lemma.endswith("る") or len(lemma) < 2:
            raise MalformedLemma(f"Regular II lemma must end in る: {lemma!r}")
        stem = lemma[:-1]
        return StemSet(
            lemma=lemma,
            negative_stem=stem,
            masu_stem=stem,
            te_form=stem + "て",
            ta_form=stem + "た",
            imperative_base=IRREGULAR_IMPERATIVE.get(lemma, stem + "ろ"),
            volitional_form=stem + "よう",
            potential_stem=stem + "られ",
            passive_stem=stem + "られ",
            causative_stem=stem + "させ",
        )

    if klass is ConjugationClass.IRREGULAR_KURU:
        if lemma != "来る":
            raise MalformedLemma(f"IrregularKuru applies only to 来る, got {lemma!r}")
        return StemSet(
            lemma="来る",
            negative_stem="来",     # こ
            masu_stem="来",         # き
            te_form="来て",
            ta_form="来た",
            imperative_base="来い",
            volitional_form="来よう",
            potential_stem="来られ",
            passive_stem="来られ",
            causative_stem="来させ",
        )

    if klass is ConjugationClass.IRREGULAR_SURU:
        if not lemma.endswith("する"):
            raise MalformedLemma(f"IrregularSuru lemma must end in する: {lemma!r}")
        prefix = lemma[:-2]
        return StemSet(
            lemma=lemma,
            negative_stem=prefix + "し",
            masu_stem=prefix + "し",
            te_form=prefix + "して",
            ta_form=prefix + "した",
            imperative_base=prefix + "しろ",
            volitional_form=prefix + "しよう",
            potential_stem=prefix + "でき",   # できる serves as the potential
            passive_stem=prefix + "され",
            causative_stem=prefix + "させ",
        )

    raise MalformedLemma(f"unsupported class: {klass!r}")


class TemplateKind(enum.Enum):
    SUFFIX = "suffix"
    PERIPHRASIS = "periphrasis"
    SUBSTITUTION = "substitution"

    @classmethod
    def from_text(cls, text: str) -> "TemplateKind":
        for member in cls:
            if member.value == text:
                return member
        raise TemplateNotApplicable(f"unknown template kind: {text!r}")


@dataclass(frozen=True)
class SuffixTemplate:
    """One way of building a surface form around a stem.

    - suffix: stem + suffix (suffix may be empty for the citation form).
    - periphrasis: prefix + stem + suffix (お + 会い + になる).
    - substitution: lemma with its trailing ``strip`` replaced by
      ``replacement`` (する → せよ); only applicable when the lemma
      actually ends in ``strip``.
    """

    kind: TemplateKind
    stem_role: str = ""
    prefix: str = ""
    suffix: str = ""
    strip: str = ""
    replacement: str = ""
    notes: str = ""

    def __post_init__(self):
        if self.kind in (TemplateKind.SUFFIX, TemplateKind.PERIPHRASIS):
            if self.stem_role not in STEM_ROLES:
                raise TemplateNotApplicable(f"unknown stem role: {self.stem_role!r}")
        elif not self.strip or not self.replacement:
            raise TemplateNotApplicable("substitution template needs strip and replacement")


def compose(lemma: str, klass: ConjugationClass, template: SuffixTemplate) -> str:
    """Build one surface form from a lemma and a template.

    One lexical special case: negation of ある is ない (never *あらない),
    so negative-stem templates whose suffix begins with ない drop the stem.
    """
    if template.kind is TemplateKind.SUBSTITUTION:
        if not lemma.endswith(template.strip) or len(lemma) < len(template.strip):
            raise TemplateNotApplicable(
                f"substitution {template.replacement!r} needs lemma ending {template.strip!r}"
            )
        return lemma[: len(lemma) - len(template.strip)] + template.replacement

    stems = compute_stems(lemma, klass)
    stem = getattr(stems, template.stem_role)
    if (
        lemma == "ある"
        and template.stem_role == "negative_stem"
        and template.suffix.startswith(("ない", "なかった"))
    ):
        stem = ""
    if template.kind is TemplateKind.PERIPHRASIS:
        return template.prefix + stem + template.suffix
    return stem + template.suffix
