"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line (run with -s to see them inline). Everything runs offline against the
shipped data files.
"""

import contextlib
import time
from pathlib import Path

from katsuyo.analyze import analyze, build_index
from katsuyo.dataset import compute_stats, read_tsv
from katsuyo.engine import compose
from katsuyo.features import parse_bundle
from katsuyo.frequency import HitCache, HitRecord, filter_entries
from katsuyo.generate import EntryStatus, generate_all, generate_verb
from katsuyo.pipeline import PipelineConfig, run_filter, run_generate

from test_dataset import wiktionary_style_fixture


@contextlib.contextmanager
def criterion(name, max_seconds=None):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    elapsed = time.monotonic() - start
    if max_seconds is not None and elapsed >= max_seconds:
        print(f"[FAIL] {name}: {elapsed:.2f}s exceeds {max_seconds}s budget")
        raise AssertionError(f"{name} exceeded its {max_seconds}s budget: {elapsed:.2f}s")
    print(f"[PASS] {name} ({elapsed:.2f}s)")


# The twenty imperative grades: ten for the basic verb, ten for its lexical
# respectful counterpart.
IMPERATIVE_TABLE = [
    ("食べる", "食べろ", "V;IMP;OBLIG"),
    ("食べる", "食べな", "V;IMP;OBLIG;COL"),
    ("食べる", "食べなさい", "V;IMP;OBLIG;POL"),
    ("食べる", "食べて", "V;IMP;COL"),
    ("食べる", "食べてください", "V;IMP;POL"),
    ("食べる", "お食べください", "V;FORM;IMP;POL"),
    ("食べる", "食べるな", "V;IMP;OBLIG;NEG"),
    ("食べる", "食べないで", "V;IMP;NEG;COL"),
    ("食べる", "食べないでください", "V;IMP;POL;NEG"),
    ("食べる", "お食べにならないでください", "V;FORM;IMP;POL;NEG"),
    ("召し上がる", "召し上がれ", "V;FORM;ELEV;IMP;OBLIG"),
    ("召し上がる", "召し上がりな", "V;FORM;ELEV;IMP;OBLIG;COL"),
    ("召し上がる", "召し上がりなさい", "V;FORM;ELEV;IMP;OBLIG;POL"),
    ("召し上がる", "召し上がって", "V;FORM;ELEV;IMP;COL"),
    ("召し上がる", "召し上がってください", "V;FORM;ELEV;IMP;POL"),
    ("召し上がる", "お召し上がりください", "V;FORM;ELEV;IMP;POL;COL"),
    ("召し上がる", "召し上がるな", "V;FORM;ELEV;IMP;OBLIG;NEG"),
    ("召し上がる", "召し上がらないで", "V;FORM;ELEV;IMP;NEG;COL"),
    ("召し上がる", "召し上がらないでください", "V;FORM;ELEV;IMP;POL;NEG"),
    ("召し上がる", "お召し上がりにならないでください", "V;FORM;ELEV;IMP;POL;NEG;COL"),
]


def test_imperative_table_golden(lexicon, inventory):
    with criterion("imperative table: 20 rows for 食べる / 召し上がる", max_seconds=1.0):
        entries = {}
        for lemma in ("食べる", "召し上がる"):
            for e in generate_verb(lexicon.entry(lemma), inventory):
                if "IMP" in e.bundle:
                    entries.setdefault((e.lemma, e.surface), set()).add(e.bundle.labels)

        mismatches = []
        for lemma, surface, bundle_text in IMPERATIVE_TABLE:
            expected = {parse_bundle(bundle_text).labels}
            if entries.get((lemma, surface)) != expected:
                mismatches.append((lemma, surface))
        assert mismatches == []

        # the basic verb's imperative rows are exhaustive; the respectful
        # verb additionally carries the ませ imperative (召し上がりませ)
        tabemono = {k for k in entries if k[0] == "食べる"}
        assert tabemono == {(l, s) for l, s, _ in IMPERATIVE_TABLE if l == "食べる"}
        extra = {k for k in entries if k[0] == "召し上がる"} - {
            (l, s) for l, s, _ in IMPERATIVE_TABLE
        }
        assert extra == {("召し上がる", "召し上がりませ")}


CAUSATIVE_TRIPLES = [
    # lemma, ordinary causative, contraction
    ("書く", "書かせる", "書かす"),
    ("見る", "見させる", "見さす"),
    ("来る", "来させる", "来さす"),
    ("する", "させる", "さす"),
]

STARRED_FORMS = ["見さされる", "来さされる", "さされる"]


def test_causative_tables(lexicon, inventory, generated):
    with criterion("causative tables: contraction triples and starred gaps", max_seconds=1.0):
        caus = parse_bundle("V;PRS;IPFV;CAUS").labels
        caus_pass = parse_bundle("V;PRS;IPFV;CAUS;PASS").labels
        for lemma, ordinary, contraction in CAUSATIVE_TRIPLES:
            produced = {
                (e.surface, e.bundle.labels)
                for e in generate_verb(lexicon.entry(lemma), inventory)
            }
            assert (ordinary, caus) in produced, lemma
            assert (contraction, caus) in produced, lemma

        # passive-causative: the Regular I contraction exists...
        kaku = {(e.surface, e.bundle.labels) for e in generate_verb(lexicon.entry("書く"), inventory)}
        assert ("書かせられる", caus_pass) in kaku
        assert ("書かされる", caus_pass) in kaku
        miru = {(e.surface, e.bundle.labels) for e in generate_verb(lexicon.entry("見る"), inventory)}
        assert ("見させられる", caus_pass) in miru

        # ...and the starred forms are absent from the entire dataset
        all_surfaces = {e.surface for e in generated}
        for starred in STARRED_FORMS:
            assert starred not in all_surfaces, starred


# Golden inflected-form/bundle pairs quoted across the politeness, mood,
# tense, negation, passive, and causative discussions.
SECTION_EXAMPLES = [
    ("行く", "行かれる", "V;ELEV;PRS;IPFV"),
    ("いらっしゃる", "いらっしゃる", "V;FORM;ELEV;PRS;IPFV"),
    ("会う", "会われる", "V;ELEV;PRS;IPFV"),
    ("会う", "お会いになる", "V;FORM;ELEV;PRS;IPFV"),
    ("伺う", "伺う", "V;FORM;HUMB;PRS;IPFV"),
    ("書く", "お書きする", "V;FORM;HUMB;PRS;IPFV"),
    ("走る", "走りたい", "V;PRS;IPFV;OPT;1"),
    ("走る", "走りたがる", "V;PRS;IPFV;OPT;3"),
    ("書く", "書ける", "V;PRS;IPFV;POT"),
    ("見る", "見られる", "V;PRS;IPFV;POT"),
    ("答える", "答えさせていただきます", "V;FORM;HUMB;PRS;IPFV;PERM;POL;FOREG"),
    ("休む", "休ませていただきます", "V;FORM;HUMB;PRS;IPFV;PERM;POL;FOREG"),
    ("走る", "走る", "V;PRS;IPFV"),
    ("走る", "走った", "V;PST;PFV"),
    ("食べる", "食べた", "V;PST;PFV"),
    ("見る", "見ない", "V;PRS;IPFV;NEG"),
    ("見る", "見ないです", "V;PRS;IPFV;POL;NEG;COL"),
    ("見る", "見ません", "V;PRS;IPFV;POL;FOREG;NEG"),
    ("見る", "見られる", "V;PRS;IPFV;PASS"),
    ("見る", "見られた", "V;PST;PFV;PASS"),
    ("見る", "見させた", "V;PST;PFV;CAUS"),
    ("見る", "見させられた", "V;PST;PFV;CAUS;PASS"),
    ("食べる", "食べさせる", "V;PRS;IPFV;CAUS"),
    ("食べる", "食べさす", "V;PRS;IPFV;CAUS"),
    ("召し上がる", "召し上がりなさい", "V;FORM;ELEV;IMP;OBLIG;POL"),
    ("ある", "ない", "V;PRS;IPFV;NEG"),
    ("食べる", "食べよう", "V;INTEN"),
    ("食べる", "食べましょう", "V;INTEN;POL;FOREG"),
]


def test_section_example_suite(generated):
    with criterion("politeness/mood/tense/negation/voice example suite"):
        produced = {(e.lemma, e.surface, e.bundle.labels) for e in generated}
        missing = [
            (lemma, surface, bundle_text)
            for lemma, surface, bundle_text in SECTION_EXAMPLES
            if (lemma, surface, parse_bundle(bundle_text).labels) not in produced
        ]
        assert missing == []


def test_per_class_counts_and_total(lexicon, inventory, exclusions):
    with criterion("per-class form counts and 17,032 pre-filter total", max_seconds=10.0):
        entries = generate_all(lexicon, inventory, exclusions)

        per_lemma = {}
        for e in entries:
            per_lemma[e.lemma] = per_lemma.get(e.lemma, 0) + 1
        expected_counts = {
            ("basic", "RegularI"): 126,
            ("basic", "RegularII"): 118,
            ("basic", "IrregularKuru"): 100,
            ("basic", "IrregularSuru"): 102,
            ("respectful", "RegularI"): 103,
            ("respectful", "RegularII"): 94,
            ("humble", "RegularI"): 92,
            ("humble", "RegularII"): 84,
            ("humble", "IrregularSuru"): 84,
        }
        verbs_per_combo = {}
        for verb in lexicon.entries:
            key = (verb.politeness.value, verb.conj_class.value)
            assert per_lemma[verb.lemma] == expected_counts[key], verb.lemma
            verbs_per_combo[key] = verbs_per_combo.get(key, 0) + 1

        # independently derived total: the weighted sum over the table
        oracle_total = sum(
            n * expected_counts[key] for key, n in verbs_per_combo.items()
        )
        assert oracle_total == 17032
        assert len(entries) == 17032


def test_filter_boundary_and_manual_exclusions(lexicon, inventory, exclusions):
    with criterion("frequency filter boundary and the sixteen manual exclusions"):
        entries = generate_all(lexicon, inventory, exclusions)
        # synthetic cache sweeping hits across the boundary; manual
        # exclusions get a huge count to prove precedence
        cache = HitCache()
        forms = sorted({e.surface for e in entries})
        for i, form in enumerate(forms):
            cache.put(HitRecord(form, i % 22, "synthetic", "2025-11-30T00:00:00+00:00"))
        for e in entries:
            if e.status is EntryStatus.DISCARDED_MANUAL:
                cache.put(HitRecord(e.surface, 10**6, "synthetic", "2025-11-30T00:00:00+00:00"))

        kept, discarded = filter_entries(entries, cache, threshold=10)
        assert len(kept) + len(discarded) == len(entries)

        manual = [e for e in discarded if e.status is EntryStatus.DISCARDED_MANUAL]
        assert len(manual) == 16
        assert all(e.lemma == "死ぬ" for e in manual)

        for e in kept:
            assert e.hits >= 11
        for e in discarded:
            if e.status is EntryStatus.DISCARDED_LOW_FREQUENCY:
                assert e.hits <= 10


def test_round_trip_all_kept_entries(lexicon, inventory, filtered):
    with criterion("round trip: analyze() and compose() recover every kept entry"):
        kept, _ = filtered
        index = build_index(kept)
        by_id = inventory.by_id
        for e in kept:
            readings = analyze(index, e.surface).readings
            assert any(
                r.lemma == e.lemma and r.bundle.labels == e.bundle.labels for r in readings
            ), (e.lemma, e.surface)
            verb = lexicon.entry(e.lemma)
            rule = by_id[e.rule_id]
            assert compose(verb.lemma, verb.conj_class, rule.template) == e.surface


def test_reference_format_stats(tmp_path):
    with criterion("reference-format stats: 10,000 records / 800 lemmas = 12.5"):
        path = wiktionary_style_fixture(tmp_path)
        stats = compute_stats(read_tsv(path))
        assert stats.total_records == 10000
        assert stats.distinct_lemmas == 800
        assert stats.records_per_lemma == 12.5


def test_pipeline_determinism(tmp_path):
    with criterion("two clean pipeline runs emit byte-identical TSVs"):
        outputs = []
        for run in ("one", "two"):
            out_dir = tmp_path / run
            config = PipelineConfig(output_dir=out_dir)
            run_generate(config)
            run_filter(config)
            outputs.append(
                {
                    name: (Path(out_dir) / name).read_bytes()
                    for name in ("generated.tsv", "kept.tsv", "discarded.tsv")
                }
            )
        assert outputs[0] == outputs[1]
        assert len(outputs[0]["generated.tsv"].splitlines()) == 17032
