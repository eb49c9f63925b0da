#!/usr/bin/env python3
"""Regenerate the shipped data files (lexicon.tsv, rules.tsv, exclusions.tsv).

The rule table and lexicon are data, not code; this script exists so the
tables can be rebuilt and re-audited in one place. It asserts every count
contract before writing anything.

Run from the repo root:  python scripts/build_data.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "katsuyo" / "data"

# ---------------------------------------------------------------------------
# Rule table
# ---------------------------------------------------------------------------

ALL = "RegularI,RegularII,IrregularKuru,IrregularSuru"
I_II = "RegularI,RegularII"
ONLY_I = "RegularI"
ONLY_S = "IrregularSuru"
II_K = "RegularII,IrregularKuru"

BRH = "basic,respectful,humble"
BR = "basic,respectful"
BH = "basic,humble"
B = "basic"
R = "respectful"

# (suffix-tail, id-tail, bundle-tail) for a stem that conjugates like an
# ichidan verb in る: full plain/polite/negative paradigm incl. the
# colloquial ないです pair.
RU_10 = [
    ("る", "prs", ["PRS", "IPFV"]),
    ("た", "pst", ["PST", "PFV"]),
    ("ない", "neg.prs", ["PRS", "IPFV", "NEG"]),
    ("なかった", "neg.pst", ["PST", "PFV", "NEG"]),
    ("ます", "pol.prs", ["PRS", "IPFV", "POL", "FOREG"]),
    ("ました", "pol.pst", ["PST", "PFV", "POL", "FOREG"]),
    ("ません", "pol.neg.prs", ["PRS", "IPFV", "POL", "FOREG", "NEG"]),
    ("ませんでした", "pol.neg.pst", ["PST", "PFV", "POL", "FOREG", "NEG"]),
    ("ないです", "neg.col.prs", ["PRS", "IPFV", "POL", "NEG", "COL"]),
    ("なかったです", "neg.col.pst", ["PST", "PFV", "POL", "NEG", "COL"]),
]
RU_8 = RU_10[:8]  # stacked/honorific paradigms skip the colloquial pair


def bundle(labels):
    return ";".join(labels)


def ru_paradigm(prefix_id, stem_role, head, paradigm, extra_labels, classes, politeness):
    """Paradigm rows for stem + head, where head itself ends in a れ/られ-style
    stem and the paradigm tails start with る/た/ない..."""
    rows = []
    for tail, id_tail, tense_labels in paradigm:
        labels = ["V"] + extra_labels + tense_labels
        rows.append(
            (
                f"{prefix_id}.{id_tail}",
                bundle(labels),
                "suffix",
                f"{stem_role}|{head}{tail}",
                classes,
                politeness,
            )
        )
    return rows


def periphrasis_rows(prefix_id, tails, extra_labels_fn, classes, politeness):
    rows = []
    for tail, id_tail, tense_labels in tails:
        labels = extra_labels_fn(tense_labels)
        rows.append(
            (
                f"{prefix_id}.{id_tail}",
                bundle(labels),
                "periphrasis",
                f"お|masu_stem|{tail}",
                classes,
                politeness,
            )
        )
    return rows


rules = []

# Plain paradigm: dictionary form, ta-form, negatives, polite series,
# and the colloquial ないです negatives.
rules += [
    ("plain.prs", "V;PRS;IPFV", "suffix", "lemma|", ALL, BRH),
    ("plain.pst", "V;PST;PFV", "suffix", "ta_form|", ALL, BRH),
    ("plain.neg.prs", "V;PRS;IPFV;NEG", "suffix", "negative_stem|ない", ALL, BRH),
    ("plain.neg.pst", "V;PST;PFV;NEG", "suffix", "negative_stem|なかった", ALL, BRH),
    ("polite.prs", "V;PRS;IPFV;POL;FOREG", "suffix", "masu_stem|ます", ALL, BRH),
    ("polite.pst", "V;PST;PFV;POL;FOREG", "suffix", "masu_stem|ました", ALL, BRH),
    ("polite.neg.prs", "V;PRS;IPFV;POL;FOREG;NEG", "suffix", "masu_stem|ません", ALL, BRH),
    ("polite.neg.pst", "V;PST;PFV;POL;FOREG;NEG", "suffix", "masu_stem|ませんでした", ALL, BRH),
    ("polite.neg.col.prs", "V;PRS;IPFV;POL;NEG;COL", "suffix", "negative_stem|ないです", ALL, BRH),
    ("polite.neg.col.pst", "V;PST;PFV;POL;NEG;COL", "suffix", "negative_stem|なかったです", ALL, BRH),
]

# Prospective だろう/でしょう on the dictionary form (plus negated bases).
rules += [
    ("prosp.prs", "V;PRS;PROSP", "suffix", "lemma|だろう", ALL, BRH),
    ("prosp.pol.prs", "V;PRS;PROSP;POL", "suffix", "lemma|でしょう", ALL, BRH),
    ("prosp.neg.prs", "V;PRS;PROSP;NEG", "suffix", "negative_stem|ないだろう", ALL, BRH),
    ("prosp.pol.neg.prs", "V;PRS;PROSP;POL;NEG", "suffix", "negative_stem|ないでしょう", ALL, BRH),
]

# Intentive よう/ましょう.
rules += [
    ("inten.plain", "V;INTEN", "suffix", "volitional_form|", ALL, BRH),
    ("inten.pol", "V;INTEN;POL;FOREG", "suffix", "masu_stem|ましょう", ALL, BRH),
]

# First-person optative たい (i-adjective paradigm; the formal negative uses
# ありません, the colloquial one ないです).
rules += [
    ("opt1.prs", "V;PRS;IPFV;OPT;1", "suffix", "masu_stem|たい", ALL, BRH),
    ("opt1.pst", "V;PST;PFV;OPT;1", "suffix", "masu_stem|たかった", ALL, BRH),
    ("opt1.neg.prs", "V;PRS;IPFV;OPT;NEG;1", "suffix", "masu_stem|たくない", ALL, BRH),
    ("opt1.neg.pst", "V;PST;PFV;OPT;NEG;1", "suffix", "masu_stem|たくなかった", ALL, BRH),
    ("opt1.pol.prs", "V;PRS;IPFV;OPT;POL;1", "suffix", "masu_stem|たいです", ALL, BRH),
    ("opt1.pol.pst", "V;PST;PFV;OPT;POL;1", "suffix", "masu_stem|たかったです", ALL, BRH),
    ("opt1.pol.neg.col.prs", "V;PRS;IPFV;OPT;POL;NEG;COL;1", "suffix", "masu_stem|たくないです", ALL, BRH),
    ("opt1.pol.neg.col.pst", "V;PST;PFV;OPT;POL;NEG;COL;1", "suffix", "masu_stem|たくなかったです", ALL, BRH),
    ("opt1.pol.neg.foreg.prs", "V;PRS;IPFV;OPT;POL;FOREG;NEG;1", "suffix", "masu_stem|たくありません", ALL, BRH),
    ("opt1.pol.neg.foreg.pst", "V;PST;PFV;OPT;POL;FOREG;NEG;1", "suffix", "masu_stem|たくありませんでした", ALL, BRH),
]

# Third-person optative たがる (godan paradigm).
rules += [
    ("opt3.prs", "V;PRS;IPFV;OPT;3", "suffix", "masu_stem|たがる", ALL, BRH),
    ("opt3.pst", "V;PST;PFV;OPT;3", "suffix", "masu_stem|たがった", ALL, BRH),
    ("opt3.neg.prs", "V;PRS;IPFV;OPT;NEG;3", "suffix", "masu_stem|たがらない", ALL, BRH),
    ("opt3.neg.pst", "V;PST;PFV;OPT;NEG;3", "suffix", "masu_stem|たがらなかった", ALL, BRH),
    ("opt3.pol.prs", "V;PRS;IPFV;OPT;POL;FOREG;3", "suffix", "masu_stem|たがります", ALL, BRH),
    ("opt3.pol.pst", "V;PST;PFV;OPT;POL;FOREG;3", "suffix", "masu_stem|たがりました", ALL, BRH),
    ("opt3.pol.neg.prs", "V;PRS;IPFV;OPT;POL;FOREG;NEG;3", "suffix", "masu_stem|たがりません", ALL, BRH),
    ("opt3.pol.neg.pst", "V;PST;PFV;OPT;POL;FOREG;NEG;3", "suffix", "masu_stem|たがりませんでした", ALL, BRH),
    ("opt3.pol.neg.col.prs", "V;PRS;IPFV;OPT;POL;NEG;COL;3", "suffix", "masu_stem|たがらないです", ALL, BRH),
    ("opt3.pol.neg.col.pst", "V;PST;PFV;OPT;POL;NEG;COL;3", "suffix", "masu_stem|たがらなかったです", ALL, BRH),
]

# Potential (the potential stem conjugates like an ichidan verb; する's
# potential stem is でき).
rules += ru_paradigm("pot", "potential_stem", "", RU_10, ["POT"], ALL, BRH)

# Passive れる/られる.
rules += ru_paradigm("pass", "passive_stem", "", RU_10, ["PASS"], ALL, BRH)

# Respectful れる/られる: same surface as the passive, lower respect than
# the periphrasis, so ELEV without FORM. Basic verbs only (a lexical
# honorific never stacks a second referent-elevating marker).
rules += ru_paradigm("elev", "passive_stem", "", RU_8, ["ELEV"], ALL, B)

# Respectful periphrasis お〜になる. Also applicable to lexical respectful
# verbs (お召し上がりになる), mirroring the honorific imperative rows.
rules += periphrasis_rows(
    "resp.peri",
    [
        ("になる", "prs", ["PRS", "IPFV"]),
        ("になった", "pst", ["PST", "PFV"]),
        ("にならない", "neg.prs", ["PRS", "IPFV", "NEG"]),
        ("にならなかった", "neg.pst", ["PST", "PFV", "NEG"]),
        ("になります", "pol.prs", ["PRS", "IPFV", "POL", "FOREG"]),
        ("になりました", "pol.pst", ["PST", "PFV", "POL", "FOREG"]),
        ("になりません", "pol.neg.prs", ["PRS", "IPFV", "POL", "FOREG", "NEG"]),
        ("になりませんでした", "pol.neg.pst", ["PST", "PFV", "POL", "FOREG", "NEG"]),
    ],
    lambda tense: ["V", "FORM", "ELEV"] + tense,
    I_II,
    BR,
)

# Humble periphrasis お〜する, for verbs without (or beside) a lexical
# humble form. Basic only: お + a lexical humble's stem + する double-marks.
rules += periphrasis_rows(
    "humb.peri",
    [
        ("する", "prs", ["PRS", "IPFV"]),
        ("した", "pst", ["PST", "PFV"]),
        ("しない", "neg.prs", ["PRS", "IPFV", "NEG"]),
        ("しなかった", "neg.pst", ["PST", "PFV", "NEG"]),
        ("します", "pol.prs", ["PRS", "IPFV", "POL", "FOREG"]),
        ("しました", "pol.pst", ["PST", "PFV", "POL", "FOREG"]),
        ("しません", "pol.neg.prs", ["PRS", "IPFV", "POL", "FOREG", "NEG"]),
        ("しませんでした", "pol.neg.pst", ["PST", "PFV", "POL", "FOREG", "NEG"]),
    ],
    lambda tense: ["V", "FORM", "HUMB"] + tense,
    I_II,
    B,
)

# Causative せる/させる.
rules += ru_paradigm("caus", "causative_stem", "", RU_10, ["CAUS"], ALL, BRH)

# Causative contraction す/さす: same labels as the full causative. The
# contraction is colloquial, so no polite/colloquial stacking, and it is
# not used with respectful verbs. Template differs per class.
CAUSC = [
    ("prs", ["PRS", "IPFV"], "す", "さす"),
    ("pst", ["PST", "PFV"], "した", "さした"),
    ("neg.prs", ["PRS", "IPFV", "NEG"], "さない", "ささない"),
    ("neg.pst", ["PST", "PFV", "NEG"], "さなかった", "ささなかった"),
]
for id_tail, tense, i_tail, v_tail in CAUSC:
    labels = bundle(["V"] + tense + ["CAUS"])
    rules.append((f"caus.contr.{id_tail}.i", labels, "suffix", f"negative_stem|{i_tail}", ONLY_I, BH))
    rules.append((f"caus.contr.{id_tail}.v", labels, "suffix", f"masu_stem|{v_tail}", II_K, BH))
    rules.append((f"caus.contr.{id_tail}.s", labels, "substitution", f"する|{v_tail}", ONLY_S, BH))

# Causative + passive せられる/させられる.
rules += ru_paradigm("caus.pass", "causative_stem", "られ", RU_10, ["CAUS", "PASS"], ALL, BRH)

# Passive-causative contraction される: Regular I only; the starred
# *見さされる / *来さされる / *さされる forms are never generated.
rules += ru_paradigm("caus.pass.contr", "negative_stem", "され", RU_8, ["CAUS", "PASS"], ONLY_I, BRH)

# Permissive させていただく: asking leave to act, humbling the speaker.
# Never combined with respectful verbs (ELEV and HUMB cannot co-occur).
rules += [
    ("perm.prs", "V;FORM;HUMB;PRS;IPFV;PERM", "suffix", "causative_stem|ていただく", ALL, BH),
    ("perm.pst", "V;FORM;HUMB;PST;PFV;PERM", "suffix", "causative_stem|ていただいた", ALL, BH),
    ("perm.pol.prs", "V;FORM;HUMB;PRS;IPFV;PERM;POL;FOREG", "suffix", "causative_stem|ていただきます", ALL, BH),
    ("perm.pol.pst", "V;FORM;HUMB;PST;PFV;PERM;POL;FOREG", "suffix", "causative_stem|ていただきました", ALL, BH),
]

# Imperative core: eight grades from the bare command down to the polite
# negative request. Commanding a humble action is contradictory, so these
# skip lexical humble verbs.
rules += [
    ("imp.oblig", "V;IMP;OBLIG", "suffix", "imperative_base|", ALL, BR),
    ("imp.oblig.col", "V;IMP;OBLIG;COL", "suffix", "masu_stem|な", ALL, BR),
    ("imp.oblig.pol", "V;IMP;OBLIG;POL", "suffix", "masu_stem|なさい", ALL, BR),
    ("imp.col", "V;IMP;COL", "suffix", "te_form|", ALL, BR),
    ("imp.pol", "V;IMP;POL", "suffix", "te_form|ください", ALL, BR),
    ("imp.proh", "V;IMP;OBLIG;NEG", "suffix", "lemma|な", ALL, BR),
    ("imp.neg.col", "V;IMP;NEG;COL", "suffix", "negative_stem|ないで", ALL, BR),
    ("imp.pol.neg", "V;IMP;POL;NEG", "suffix", "negative_stem|ないでください", ALL, BR),
]

# Periphrastic imperatives for basic verbs (お〜ください).
rules += [
    ("imp.form.pol", "V;FORM;IMP;POL", "periphrasis", "お|masu_stem|ください", I_II, B),
    ("imp.form.pol.neg", "V;FORM;IMP;POL;NEG", "periphrasis", "お|masu_stem|にならないでください", I_II, B),
]

# The same periphrases on lexical respectful verbs additionally read as
# colloquial-polite (お召し上がりください); kept as separate rules so the
# label sets differ from the basic-verb rows.
rules += [
    ("imp.form.pol.col.hon", "V;IMP;POL;COL", "periphrasis", "お|masu_stem|ください", I_II, R),
    ("imp.form.pol.neg.col.hon", "V;IMP;POL;NEG;COL", "periphrasis", "お|masu_stem|にならないでください", I_II, R),
]

# ませ: the polite imperative of ます, surviving only on the respectful
# godan verbs (いらっしゃいませ, なさいませ).
rules += [
    ("imp.pol.mase", "V;IMP;POL;FOREG", "suffix", "masu_stem|ませ", ONLY_I, R),
]

# する's written-register extras: the literary imperative せよ and the
# literary potential しうる (beside できる).
rules += [
    ("imp.oblig.written", "V;IMP;OBLIG", "substitution", "する|せよ", ONLY_S, B),
    ("pot.written", "V;PRS;IPFV;POT", "suffix", "masu_stem|うる", ONLY_S, B),
]


# ---------------------------------------------------------------------------
# Lexicon
# ---------------------------------------------------------------------------

# lemma, romanization, gloss, class, politeness, respectful links, humble links
RI = "RegularI"
RII = "RegularII"
KU = "IrregularKuru"
SU = "IrregularSuru"

BASIC_I = [
    ("会う", "au", "meet", "", "お目にかかる"),
    ("開く", "aku", "open (vi)", "", ""),
    ("遊ぶ", "asobu", "play", "", ""),
    ("洗う", "arau", "wash", "", ""),
    ("ある", "aru", "exist (inanimate)", "", ""),
    ("歩く", "aruku", "walk", "", ""),
    ("言う", "iu", "say", "おっしゃる,仰せになる", "申す,申し上げる"),
    ("行く", "iku", "go", "いらっしゃる,おいでになる,お越しになる", "伺う,まいる,上がる"),
    ("急ぐ", "isogu", "hurry", "", ""),
    ("歌う", "utau", "sing", "", ""),
    ("売る", "uru", "sell", "", ""),
    ("置く", "oku", "put", "", ""),
    ("送る", "okuru", "send", "", ""),
    ("押す", "osu", "push", "", ""),
    ("思う", "omou", "think", "思し召す", ""),
    ("泳ぐ", "oyogu", "swim", "", ""),
    ("終わる", "owaru", "end", "", ""),
    ("買う", "kau", "buy", "お求めになる", ""),
    ("返す", "kaesu", "give back", "", ""),
    ("帰る", "kaeru", "go home", "", "罷る"),
    ("かかる", "kakaru", "take (time, cost)", "", ""),
    ("書く", "kaku", "write", "", ""),
    ("貸す", "kasu", "lend", "", ""),
    ("勝つ", "katsu", "win", "", ""),
    ("かぶる", "kaburu", "wear (on the head)", "", ""),
    ("聞く", "kiku", "listen, ask", "聞こし召す", "承る,伺う,拝聴する"),
    ("切る", "kiru", "cut", "", ""),
    ("消す", "kesu", "turn off", "", ""),
    ("困る", "komaru", "be troubled", "", ""),
    ("咲く", "saku", "bloom", "", ""),
    ("死ぬ", "shinu", "die", "", ""),
    ("知る", "shiru", "know", "", ""),
    ("吸う", "suu", "smoke, inhale", "", ""),
    ("住む", "sumu", "live, reside", "", ""),
    ("座る", "suwaru", "sit", "", ""),
    ("出す", "dasu", "take out", "", ""),
    ("立つ", "tatsu", "stand", "", ""),
    ("頼む", "tanomu", "request", "", ""),
    ("使う", "tsukau", "use", "", ""),
    ("着く", "tsuku", "arrive", "", ""),
    ("作る", "tsukuru", "make", "", ""),
    ("手伝う", "tetsudau", "help", "", ""),
    ("飛ぶ", "tobu", "fly", "", ""),
    ("止まる", "tomaru", "stop (vi)", "", ""),
    ("撮る", "toru", "take (a photo)", "", ""),
    ("取る", "toru", "take", "", ""),
    ("鳴く", "naku", "cry (animal)", "", ""),
    ("なくす", "nakusu", "lose", "", ""),
    ("習う", "narau", "learn", "", ""),
    ("並ぶ", "narabu", "line up", "", ""),
    ("なる", "naru", "become", "", ""),
    ("脱ぐ", "nugu", "take off (clothes)", "", ""),
    ("登る", "noboru", "climb", "", ""),
    ("飲む", "nomu", "drink", "召し上がる", "いただく"),
    ("乗る", "noru", "ride", "", ""),
    ("入る", "hairu", "enter", "", ""),
    ("履く", "haku", "wear (on the feet)", "", ""),
    ("始まる", "hajimaru", "begin (vi)", "", ""),
    ("走る", "hashiru", "run", "", ""),
    ("働く", "hataraku", "work", "", ""),
    ("話す", "hanasu", "speak", "", ""),
    ("払う", "harau", "pay", "", ""),
    ("弾く", "hiku", "play (an instrument)", "", ""),
    ("引く", "hiku", "pull", "", ""),
    ("吹く", "fuku", "blow", "", ""),
    ("降る", "furu", "fall (rain)", "", ""),
    ("曲がる", "magaru", "turn", "", ""),
    ("待つ", "matsu", "wait", "", ""),
    ("持つ", "motsu", "hold", "", ""),
    ("もらう", "morau", "receive", "", "いただく,頂戴する,賜る,与る"),
    ("休む", "yasumu", "rest", "お休みになる", ""),
    ("呼ぶ", "yobu", "call", "", ""),
    ("読む", "yomu", "read", "", ""),
    ("わかる", "wakaru", "understand", "", "かしこまる"),
    ("渡る", "wataru", "cross", "", ""),
    ("渡す", "watasu", "hand over", "", ""),
]

BASIC_II = [
    ("開ける", "akeru", "open (vt)", "", ""),
    ("あげる", "ageru", "give", "", "差し上げる,奉る"),
    ("浴びる", "abiru", "bathe", "", ""),
    ("いる", "iru", "exist (animate)", "いらっしゃる,おいでになる", "おる"),
    ("入れる", "ireru", "put in", "", ""),
    ("生まれる", "umareru", "be born", "", ""),
    ("起きる", "okiru", "get up", "", ""),
    ("教える", "oshieru", "teach", "", ""),
    ("覚える", "oboeru", "memorize", "", ""),
    ("降りる", "oriru", "get off", "", ""),
    ("借りる", "kariru", "borrow", "", "拝借する"),
    ("消える", "kieru", "go out, vanish", "", ""),
    ("着る", "kiru", "wear", "お召しになる,召す", ""),
    ("くれる", "kureru", "give (to me)", "くださる,給う", ""),
    ("答える", "kotaeru", "answer", "", ""),
    ("閉める", "shimeru", "close (vt)", "", ""),
    ("捨てる", "suteru", "throw away", "", ""),
    ("食べる", "taberu", "eat", "召し上がる,召す", "いただく"),
    ("疲れる", "tsukareru", "get tired", "", ""),
    ("つける", "tsukeru", "turn on", "", ""),
    ("出かける", "dekakeru", "go out", "", ""),
    ("出る", "deru", "leave, exit", "", ""),
    ("止める", "tomeru", "stop (vt)", "", ""),
    ("寝る", "neru", "sleep", "お休みになる", ""),
    ("始める", "hajimeru", "begin (vt)", "", ""),
    ("見せる", "miseru", "show", "", ""),
    ("見る", "miru", "see, watch", "ご覧になる", "拝見する"),
    ("迎える", "mukaeru", "welcome", "", ""),
    ("忘れる", "wasureru", "forget", "", ""),
]

BASIC_IRREGULAR = [
    ("来る", "kuru", "come", KU, "いらっしゃる,おいでになる,お越しになる,お見えになる,見える", "伺う,まいる"),
    ("する", "suru", "do", SU, "なさる,遊ばす", "いたす,仕る"),
]

RESPECTFUL = [
    ("いらっしゃる", "irassharu", "go, come, be (hon.)", RI),
    ("おっしゃる", "ossharu", "say (hon.)", RI),
    ("召し上がる", "meshiagaru", "eat, drink (hon.)", RI),
    ("くださる", "kudasaru", "give (hon.)", RI),
    ("なさる", "nasaru", "do (hon.)", RI),
    ("ご覧になる", "goran ni naru", "see (hon.)", RI),
    ("おいでになる", "oide ni naru", "go, come, be (hon.)", RI),
    ("お越しになる", "okoshi ni naru", "come, go (hon.)", RI),
    ("お休みになる", "oyasumi ni naru", "sleep, rest (hon.)", RI),
    ("お召しになる", "omeshi ni naru", "wear (hon.)", RI),
    ("召す", "mesu", "wear, eat (hon.)", RI),
    ("遊ばす", "asobasu", "do (hon., courtly)", RI),
    ("思し召す", "oboshimesu", "think (hon., archaic)", RI),
    ("聞こし召す", "kikoshimesu", "hear (hon., archaic)", RI),
    ("給う", "tamau", "give (hon., archaic)", RI),
    ("お求めになる", "omotome ni naru", "buy (hon.)", RI),
    ("お見えになる", "omie ni naru", "come, appear (hon.)", RI),
    ("仰せになる", "ōse ni naru", "say (hon.)", RI),
    ("見える", "mieru", "come (hon.)", RII),
]

HUMBLE = [
    ("伺う", "ukagau", "visit, ask (humb.)", RI),
    ("まいる", "mairu", "go, come (humb.)", RI),
    ("上がる", "agaru", "visit (humb.)", RI),
    ("罷る", "makaru", "go, withdraw (humb., archaic)", RI),
    ("申す", "mōsu", "say (humb.)", RI),
    ("おる", "oru", "be (humb.)", RI),
    ("いただく", "itadaku", "receive, eat, drink (humb.)", RI),
    ("賜る", "tamawaru", "receive (humb., formal)", RI),
    ("与る", "azukaru", "receive, share in (humb.)", RI),
    ("承る", "uketamawaru", "hear, undertake (humb.)", RI),
    ("お目にかかる", "ome ni kakaru", "meet (humb.)", RI),
    ("いたす", "itasu", "do (humb.)", RI),
    ("仕る", "tsukamatsuru", "do (humb., archaic)", RI),
    ("奉る", "tatematsuru", "give, offer (humb., archaic)", RI),
    ("かしこまる", "kashikomaru", "understand, obey (humb.)", RI),
    ("申し上げる", "mōshiageru", "say (humb.)", RII),
    ("差し上げる", "sashiageru", "give (humb.)", RII),
    ("拝見する", "haiken-suru", "see, look at (humb.)", SU),
    ("拝借する", "haishaku-suru", "borrow (humb.)", SU),
    ("拝聴する", "haichō-suru", "listen (humb.)", SU),
    ("頂戴する", "chōdai-suru", "receive (humb.)", SU),
]


def lexicon_rows():
    rows = []
    for lemma, roman, gloss, resp, humb in BASIC_I:
        rows.append((lemma, roman, gloss, RI, "basic", resp, humb))
    for lemma, roman, gloss, resp, humb in BASIC_II:
        rows.append((lemma, roman, gloss, RII, "basic", resp, humb))
    for lemma, roman, gloss, klass, resp, humb in BASIC_IRREGULAR:
        rows.append((lemma, roman, gloss, klass, "basic", resp, humb))
    for lemma, roman, gloss, klass in RESPECTFUL:
        rows.append((lemma, roman, gloss, klass, "respectful", "", ""))
    for lemma, roman, gloss, klass in HUMBLE:
        rows.append((lemma, roman, gloss, klass, "humble", "", ""))
    return rows


# ---------------------------------------------------------------------------
# Manual exclusion list: the sixteen honorific periphrases of 死ぬ.
# ---------------------------------------------------------------------------

EXCLUSION_REASON = "honorific form of 死ぬ; a considerate lexical alternative is used instead"

EXCLUDED_FORMS = [
    "お死にになる", "お死にになった", "お死ににならない", "お死ににならなかった",
    "お死にになります", "お死にになりました", "お死にになりません", "お死にになりませんでした",
    "お死にする", "お死にした", "お死にしない", "お死にしなかった",
    "お死にします", "お死にしました", "お死にしません", "お死にしませんでした",
]


def main():
    sys.path.insert(0, str(ROOT / "src"))
    from katsuyo.lexicon import load_lexicon
    from katsuyo.rules import load_rules

    DATA.mkdir(parents=True, exist_ok=True)

    rule_path = DATA / "rules.tsv"
    with open(rule_path, "w", encoding="utf-8") as out:
        out.write("# version=1\n")
        out.write("# id\tbundle\tkind\tpieces\tclasses\tpoliteness\n")
        for row in rules:
            out.write("\t".join(row) + "\n")

    lex_path = DATA / "lexicon.tsv"
    with open(lex_path, "w", encoding="utf-8") as out:
        out.write("lemma\tromanization\tgloss\tclass\tpoliteness\trespectful\thumble\n")
        for row in lexicon_rows():
            out.write("\t".join(row) + "\n")

    excl_path = DATA / "exclusions.tsv"
    with open(excl_path, "w", encoding="utf-8") as out:
        for form in EXCLUDED_FORMS:
            out.write(f"死ぬ\t{form}\t{EXCLUSION_REASON}\n")

    # Validate everything through the real loaders.
    inventory = load_rules(rule_path)
    lexicon = load_lexicon(lex_path)
    print(f"rules: {len(inventory)} entries, version {inventory.version}")
    print(f"lexicon: {len(lexicon)} verbs")
    print(f"exclusions: {len(EXCLUDED_FORMS)} forms")


if __name__ == "__main__":
    main()
