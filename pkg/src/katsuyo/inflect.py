"""Forward inflection queries: lemma + feature bundle -> surface forms."""

from __future__ import annotations

from .engine import ConjugationClass, compose
from .features import FeatureBundle, with_labels
from .generate import HONORIFIC_MARKERS
from .lexicon import Lexicon, PolitenessType
from .rules import RuleInventory


def inflect_adhoc(
    lemma: str,
    klass: ConjugationClass,
    bundle: FeatureBundle,
    inventory: RuleInventory,
) -> list[tuple[str, str]]:
    """(form, rule id) for every basic-verb rule matching the bundle.

    Works for arbitrary lemmas of a known class; no lexicon involved.
    """
    results = []
    for rule in inventory.rules:
        if klass not in rule.classes or PolitenessType.BASIC not in rule.politeness:
            continue
        if rule.bundle.labels != bundle.labels:
            continue
        results.append((compose(lemma, klass, rule.template), rule.rule_id))
    return results


def inflect_lexical(
    lemma: str,
    bundle: FeatureBundle,
    lexicon: Lexicon,
    inventory: RuleInventory,
) -> list[tuple[str, str, str]]:
    """(lemma, form, rule id) matches across a verb and its honorifics.

    A request for 行く with FORM;HUMB features returns both the periphrasis
    (お行きする) and the lexical humble alternatives (伺う, まいる, 上がる),
    because honorific markers may come from the rule or from the verb.
    """
    results = []
    for member in lexicon.politeness_cluster(lemma):
        verb = lexicon.entry(member)
        markers = HONORIFIC_MARKERS[verb.politeness]
        for rule in inventory.rules:
            if not rule.applies_to(verb):
                continue
            effective = with_labels(rule.bundle, markers) if markers else rule.bundle
            if effective.labels != bundle.labels:
                continue
            results.append((member, compose(member, verb.conj_class, rule.template), rule.rule_id))
    return results
