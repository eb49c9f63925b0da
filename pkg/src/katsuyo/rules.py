"""The inflection rule catalog.

Rules live in a versioned data file, not in code: each line binds a feature
bundle to a suffix template plus the conjugation classes and politeness
types it applies to. The load-time contract is the applicable-rule count
per (politeness, class) combination; a file that drifts from those counts
is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import ConjugationClass, SuffixTemplate, TemplateKind
from .errors import CountMismatch, DuplicateRuleId, InvariantViolation, ParseError
from .features import FeatureBundle, parse_bundle
from .lexicon import PolitenessType, VerbEntry

# Applicable-rule counts per (politeness, class); the generation contract.
EXPECTED_RULE_COUNTS: dict[tuple[PolitenessType, ConjugationClass], int] = {
    (PolitenessType.BASIC, ConjugationClass.REGULAR_I): 126,
    (PolitenessType.BASIC, ConjugationClass.REGULAR_II): 118,
    (PolitenessType.BASIC, ConjugationClass.IRREGULAR_KURU): 100,
    (PolitenessType.BASIC, ConjugationClass.IRREGULAR_SURU): 102,
    (PolitenessType.RESPECTFUL, ConjugationClass.REGULAR_I): 103,
    (PolitenessType.RESPECTFUL, ConjugationClass.REGULAR_II): 94,
    (PolitenessType.HUMBLE, ConjugationClass.REGULAR_I): 92,
    (PolitenessType.HUMBLE, ConjugationClass.REGULAR_II): 84,
    (PolitenessType.HUMBLE, ConjugationClass.IRREGULAR_SURU): 84,
}

EXCLUDED_LABELS = frozenset({"INT", "LKLY", "COND"})


@dataclass(frozen=True)
class InflectionRule:
    rule_id: str
    bundle: FeatureBundle
    template: SuffixTemplate
    classes: frozenset[ConjugationClass]
    politeness: frozenset[PolitenessType]
    notes: str = ""

    def applies_to(self, verb: VerbEntry) -> bool:
        return verb.conj_class in self.classes and verb.politeness in self.politeness


@dataclass
class RuleInventory:
    rules: list[InflectionRule]
    version: str = "unversioned"

    def __post_init__(self):
        self.by_id = {r.rule_id: r for r in self.rules}

    def __len__(self) -> int:
        return len(self.rules)


def rules_for(verb: VerbEntry, inventory: RuleInventory) -> list[InflectionRule]:
    """All rules applicable to a verb, in inventory (file) order."""
    return [r for r in inventory.rules if r.applies_to(verb)]


def _parse_template(kind_text: str, pieces: str, path, line_no: int) -> SuffixTemplate:
    kind = TemplateKind.from_text(kind_text)
    parts = pieces.split("|")
    if kind is TemplateKind.SUFFIX:
        if len(parts) != 2:
            raise ParseError(path, line_no, f"suffix template needs role|text, got {pieces!r}")
        return SuffixTemplate(kind, stem_role=parts[0], suffix=parts[1])
    if kind is TemplateKind.PERIPHRASIS:
        if len(parts) != 3:
            raise ParseError(path, line_no, f"periphrasis needs prefix|role|text, got {pieces!r}")
        return SuffixTemplate(kind, prefix=parts[0], stem_role=parts[1], suffix=parts[2])
    if len(parts) != 2:
        raise ParseError(path, line_no, f"substitution needs strip|replacement, got {pieces!r}")
    return SuffixTemplate(kind, strip=parts[0], replacement=parts[1])


def _check_invariants(rules: list[InflectionRule]) -> None:
    regular_i_only = frozenset({ConjugationClass.REGULAR_I})
    for rule in rules:
        if rule.bundle.labels & EXCLUDED_LABELS:
            raise InvariantViolation(f"rule {rule.rule_id} carries an excluded label")
        # Passive-causative contraction never leaves Regular I.
        if {"CAUS", "PASS"} <= rule.bundle.labels and "contr" in rule.rule_id:
            if rule.classes != regular_i_only:
                raise InvariantViolation(
                    f"rule {rule.rule_id}: passive-causative contraction must be Regular I only"
                )
        # Bare ELEV (no FORM) is reserved for the れる/られる respectful suffix.
        if "ELEV" in rule.bundle and "FORM" not in rule.bundle:
            if rule.template.stem_role != "passive_stem":
                raise InvariantViolation(
                    f"rule {rule.rule_id}: ELEV without FORM outside the れる/られる suffix"
                )
        if "HUMB" in rule.bundle and "FORM" not in rule.bundle:
            raise InvariantViolation(f"rule {rule.rule_id}: HUMB requires FORM")


def _check_counts(rules: list[InflectionRule]) -> None:
    for (politeness, klass), expected in EXPECTED_RULE_COUNTS.items():
        actual = sum(1 for r in rules if klass in r.classes and politeness in r.politeness)
        if actual != expected:
            raise CountMismatch(f"rules for {politeness.value}/{klass.value}", expected, actual)


def load_rules(path) -> RuleInventory:
    """Load, validate, and count-check a rule file."""
    rules: list[InflectionRule] = []
    version = "unversioned"
    with open(path, encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    for line_no, line in enumerate(lines, start=1):
        if line.startswith("# version="):
            version = line.split("=", 1)[1].strip()
            continue
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 6:
            raise ParseError(path, line_no, f"expected 6 columns, got {len(cols)}")
        rule_id, bundle_text, kind_text, pieces, class_text, pol_text = cols
        try:
            bundle = parse_bundle(bundle_text)
        except Exception as exc:
            raise ParseError(path, line_no, f"bad bundle {bundle_text!r}: {exc}") from None
        template = _parse_template(kind_text, pieces, path, line_no)
        try:
            classes = frozenset(ConjugationClass.from_text(t) for t in class_text.split(",") if t)
            politeness = frozenset(PolitenessType.from_text(t) for t in pol_text.split(",") if t)
        except Exception as exc:
            raise ParseError(path, line_no, str(exc)) from None
        if not classes or not politeness:
            raise ParseError(path, line_no, "empty class or politeness list")
        rules.append(InflectionRule(rule_id, bundle, template, classes, politeness))

    seen: set[str] = set()
    for rule in rules:
        if rule.rule_id in seen:
            raise DuplicateRuleId(rule.rule_id)
        seen.add(rule.rule_id)

    _check_invariants(rules)
    _check_counts(rules)
    return RuleInventory(rules, version)
