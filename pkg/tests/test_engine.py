import pytest

from katsuyo.engine import (
    ConjugationClass,
    SuffixTemplate,
    TemplateKind,
    apply_euphony,
    compose,
    compute_stems,
)
from katsuyo.errors import MalformedLemma, TemplateNotApplicable
from katsuyo.lexicon import PolitenessType

RI = ConjugationClass.REGULAR_I
RII = ConjugationClass.REGULAR_II
KU = ConjugationClass.IRREGULAR_KURU
SU = ConjugationClass.IRREGULAR_SURU

# Independent onbin oracle, keyed by final kana, taken from reference
# grammar class listings. apply_euphony must agree with it on every
# Regular I verb; 行く is the single listed exception.
ONBIN_ORACLE = {
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


def oracle_te_ta(lemma):
    if lemma.endswith("行く"):
        return lemma[:-1] + "って", lemma[:-1] + "った"
    te, ta = ONBIN_ORACLE[lemma[-1]]
    return lemma[:-1] + te, lemma[:-1] + ta


@pytest.mark.parametrize(
    "lemma, te, ta",
    [
        ("走る", "走って", "走った"),
        ("会う", "会って", "会った"),    # frozen from the oracle
        ("行く", "行って", "行った"),    # sole exception
        ("勝つ", "勝って", "勝った"),
        ("読む", "読んで", "読んだ"),
        ("遊ぶ", "遊んで", "遊んだ"),
        ("死ぬ", "死んで", "死んだ"),
        ("書く", "書いて", "書いた"),
        ("泳ぐ", "泳いで", "泳いだ"),
        ("話す", "話して", "話した"),
    ],
)
def test_euphony_golden(lemma, te, ta):
    assert apply_euphony(lemma) == (te, ta)


def test_euphony_matches_oracle_for_every_regular_i_verb(lexicon):
    for verb in lexicon.entries:
        if verb.conj_class is RI:
            assert apply_euphony(verb.lemma) == oracle_te_ta(verb.lemma), verb.lemma


def test_euphony_rejects_non_godan_ending():
    with pytest.raises(MalformedLemma):
        apply_euphony("あい")


def test_stems_regular_i():
    stems = compute_stems("書く", RI)
    assert stems.negative_stem == "書か"
    assert stems.masu_stem == "書き"
    assert stems.te_form == "書いて"
    assert stems.ta_form == "書いた"
    assert stems.imperative_base == "書け"
    assert stems.volitional_form == "書こう"
    assert stems.potential_stem == "書け"
    assert stems.passive_stem == "書かれ"
    assert stems.causative_stem == "書かせ"  # 書かせる


def test_stems_u_verb_uses_wa_row():
    stems = compute_stems("会う", RI)
    assert stems.negative_stem == "会わ"
    assert stems.passive_stem == "会われ"   # 会われる


def test_stems_regular_ii():
    stems = compute_stems("食べる", RII)
    assert stems.masu_stem == "食べ"
    assert stems.ta_form == "食べた"
    assert stems.imperative_base == "食べろ"
    assert stems.potential_stem == "食べられ"
    assert stems.passive_stem == "食べられ"
    assert stems.causative_stem == "食べさせ"


def test_stems_kuru():
    stems = compute_stems("来る", KU)
    assert stems.te_form == "来て"
    assert stems.imperative_base == "来い"
    assert stems.volitional_form == "来よう"
    assert stems.causative_stem == "来させ"


def test_stems_suru_and_contraction_basis():
    stems = compute_stems("する", SU)
    assert stems.causative_stem == "させ"   # させる; contraction さす
    assert stems.passive_stem == "され"
    assert stems.potential_stem == "でき"   # できる stands in as the potential
    assert stems.imperative_base == "しろ"


def test_stems_suru_compound():
    stems = compute_stems("拝見する", SU)
    assert stems.masu_stem == "拝見し"
    assert stems.causative_stem == "拝見させ"


def test_honorific_godan_irregular_stems():
    stems = compute_stems("いらっしゃる", RI)
    assert stems.masu_stem == "いらっしゃい"      # いらっしゃいます
    assert stems.imperative_base == "いらっしゃい"
    assert compute_stems("くださる", RI).masu_stem == "ください"
    assert compute_stems("くれる", RII).imperative_base == "くれ"


@pytest.mark.parametrize(
    "lemma, klass",
    [
        ("食べ", RII),      # no る
        ("たべい", RI),     # い is not an u-row kana
        ("来た", KU),       # only 来る itself
        ("勉強", SU),       # no する tail
        ("", RI),
    ],
)
def test_malformed_lemmas(lemma, klass):
    with pytest.raises(MalformedLemma):
        compute_stems(lemma, klass)


def test_compose_periphrasis():
    template = SuffixTemplate(TemplateKind.PERIPHRASIS, prefix="お", stem_role="masu_stem", suffix="になる")
    assert compose("会う", RI, template) == "お会いになる"


def test_compose_identity():
    template = SuffixTemplate(TemplateKind.SUFFIX, stem_role="lemma", suffix="")
    assert compose("食べる", RII, template) == "食べる"


def test_compose_negation_of_aru_is_nai():
    template = SuffixTemplate(TemplateKind.SUFFIX, stem_role="negative_stem", suffix="ない")
    assert compose("ある", RI, template) == "ない"
    assert compose("走る", RI, template) == "走らない"
    # the special case is scoped to ない…, not to every negative-stem suffix
    prohibitive = SuffixTemplate(TemplateKind.SUFFIX, stem_role="negative_stem", suffix="される")
    assert compose("ある", RI, prohibitive) == "あらされる"


def test_compose_substitution():
    template = SuffixTemplate(TemplateKind.SUBSTITUTION, strip="する", replacement="せよ")
    assert compose("する", SU, template) == "せよ"
    assert compose("拝見する", SU, template) == "拝見せよ"
    with pytest.raises(TemplateNotApplicable):
        compose("食べる", RII, template)


def test_unknown_stem_role_rejected():
    with pytest.raises(TemplateNotApplicable):
        SuffixTemplate(TemplateKind.SUFFIX, stem_role="nonexistent", suffix="た")


def test_composition_is_deterministic(lexicon, inventory):
    from katsuyo.rules import rules_for

    verb = lexicon.entry("書く")
    rules = rules_for(verb, inventory)
    first = [compose(verb.lemma, verb.conj_class, r.template) for r in rules]
    second = [compose(verb.lemma, verb.conj_class, r.template) for r in rules]
    assert first == second


def test_class_closure_no_template_failures(lexicon, inventory):
    """Every shipped rule composes for every verb it is declared for."""
    from katsuyo.rules import rules_for

    for verb in lexicon.entries:
        for rule in rules_for(verb, inventory):
            form = compose(verb.lemma, verb.conj_class, rule.template)
            assert form, (verb.lemma, rule.rule_id)


def test_politeness_enum_rejects_unknown():
    with pytest.raises(ValueError):
        PolitenessType.from_text("shiny")


def test_aru_negation_family(lexicon, inventory):
    """Every ない/なかった-series form of ある drops the classical stem."""
    from katsuyo.generate import generate_verb

    surfaces = {e.rule_id: e.surface for e in generate_verb(lexicon.entry("ある"), inventory)}
    assert surfaces["plain.neg.prs"] == "ない"
    assert surfaces["plain.neg.pst"] == "なかった"
    assert surfaces["polite.neg.col.prs"] == "ないです"
    assert surfaces["polite.neg.col.pst"] == "なかったです"
    assert surfaces["prosp.neg.prs"] == "ないだろう"
    assert surfaces["imp.neg.col"] == "ないで"
    # ません attaches to the continuative stem and keeps it
    assert surfaces["polite.neg.prs"] == "ありません"
