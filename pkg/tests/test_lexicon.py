import pytest

from katsuyo import data_path
from katsuyo.engine import ConjugationClass
from katsuyo.errors import CountMismatch, DanglingHonorificLink, ParseError, UnknownLemma
from katsuyo.lexicon import PolitenessType, load_lexicon


def test_shipped_population(lexicon):
    assert len(lexicon) == 147
    by_politeness = {}
    for verb in lexicon.entries:
        by_politeness.setdefault(verb.politeness, []).append(verb)
    assert len(by_politeness[PolitenessType.BASIC]) == 107
    assert len(by_politeness[PolitenessType.RESPECTFUL]) == 19
    assert len(by_politeness[PolitenessType.HUMBLE]) == 21

    def count(politeness, klass):
        return sum(1 for v in by_politeness[politeness] if v.conj_class is klass)

    assert count(PolitenessType.BASIC, ConjugationClass.REGULAR_I) == 76
    assert count(PolitenessType.BASIC, ConjugationClass.REGULAR_II) == 29
    assert count(PolitenessType.RESPECTFUL, ConjugationClass.REGULAR_I) == 18
    assert count(PolitenessType.RESPECTFUL, ConjugationClass.REGULAR_II) == 1
    assert count(PolitenessType.HUMBLE, ConjugationClass.REGULAR_I) == 15
    assert count(PolitenessType.HUMBLE, ConjugationClass.REGULAR_II) == 2
    assert count(PolitenessType.HUMBLE, ConjugationClass.IRREGULAR_SURU) == 4


def test_honorific_equivalents_of_iku(lexicon):
    respectful, humble = lexicon.honorific_equivalents("行く")
    assert {"まいる", "伺う", "上がる"} <= humble
    assert "いらっしゃる" in respectful


def test_inverse_lookup_for_ukagau(lexicon):
    assert lexicon.sources("伺う") == {"来る", "行く", "聞く"}


def test_verb_without_lexical_honorific(lexicon):
    respectful, humble = lexicon.honorific_equivalents("書く")
    assert respectful == set()
    assert humble == set()


def test_unknown_lemma(lexicon):
    with pytest.raises(UnknownLemma):
        lexicon.honorific_equivalents("存在しない")


def test_reload_is_deterministic(lexicon):
    again = load_lexicon(data_path("lexicon.tsv"))
    assert again.entries == lexicon.entries
    assert again.sources_of == lexicon.sources_of


def test_count_mismatch_on_missing_verb(tmp_path):
    lines = data_path("lexicon.tsv").read_text(encoding="utf-8").splitlines()
    pruned = [l for l in lines if not l.startswith("書く\t")]
    path = tmp_path / "lexicon.tsv"
    path.write_text("\n".join(pruned) + "\n", encoding="utf-8")
    with pytest.raises(CountMismatch) as exc:
        load_lexicon(path)
    assert exc.value.expected == 76
    assert exc.value.actual == 75


def test_dangling_honorific_link(tmp_path):
    lines = data_path("lexicon.tsv").read_text(encoding="utf-8").splitlines()
    # strip 伺う out of every link column so it dangles
    def drop(line):
        cols = line.split("\t")
        if len(cols) == 7:
            cols[5] = ",".join(t for t in cols[5].split(",") if t != "伺う")
            cols[6] = ",".join(t for t in cols[6].split(",") if t != "伺う")
        return "\t".join(cols)

    path = tmp_path / "lexicon.tsv"
    path.write_text("\n".join(drop(l) for l in lines) + "\n", encoding="utf-8")
    with pytest.raises(DanglingHonorificLink) as exc:
        load_lexicon(path)
    assert exc.value.lemma == "伺う"


def test_parse_error_on_bad_column_count(tmp_path):
    path = tmp_path / "lexicon.tsv"
    path.write_text(
        "lemma\tromanization\tgloss\tclass\tpoliteness\trespectful\thumble\n"
        "書く\tkaku\twrite\tRegularI\n",
        encoding="utf-8",
    )
    with pytest.raises(ParseError):
        load_lexicon(path)


def test_parse_error_on_missing_header(tmp_path):
    path = tmp_path / "lexicon.tsv"
    path.write_text("書く\tkaku\twrite\tRegularI\tbasic\t\t\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_lexicon(path)


def test_no_denominal_suru_compounds(lexicon):
    """Only the humble suru-type honorifics may end in する."""
    for verb in lexicon.entries:
        if verb.lemma != "する" and verb.lemma.endswith("する"):
            assert verb.politeness is PolitenessType.HUMBLE
