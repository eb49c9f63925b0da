#!/usr/bin/env python3
"""Build the shipped hit-count fixture (data/hits.tsv).

Live web hit counts are a point-in-time measurement and not reproducible,
so the repository ships a synthetic but deterministic cache with the same
long-tail shape: common paradigm forms rate high, mechanically
over-generated honorific stacks rate low, and a realistic share of forms
falls at or below the filter threshold. Forms that are attested in any
grammar reference (the golden list) are pinned well above the threshold.

Run from the repo root:  python scripts/build_hit_cache.py
"""

import hashlib
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from katsuyo import data_path
from katsuyo.frequency import HitCache, HitRecord, save_hit_cache
from katsuyo.generate import generate_all, load_exclusions
from katsuyo.lexicon import PolitenessType, load_lexicon
from katsuyo.rules import load_rules

FETCHED_AT = "2025-11-30T00:00:00+00:00"
SOURCE = "synthetic-fixture"

# Attested forms that must stay above the filter threshold.
PINNED = {
    # imperative grades of 食べる and 召し上がる
    "食べろ", "食べな", "食べなさい", "食べて", "食べてください", "お食べください",
    "食べるな", "食べないで", "食べないでください", "お食べにならないでください",
    "召し上がれ", "召し上がりな", "召し上がりなさい", "召し上がって", "召し上がってください",
    "お召し上がりください", "召し上がるな", "召し上がらないで", "召し上がらないでください",
    "お召し上がりにならないでください",
    # causative and contraction sets
    "書かせる", "書かす", "見させる", "見さす", "来させる", "来さす", "させる", "さす",
    "書かせられる", "書かされる", "見させられる", "来させられる", "させられる",
    "食べさせる", "食べさす", "食べさせた", "見させた", "見させられた",
    # politeness showcases
    "行かれる", "いらっしゃる", "会われる", "お会いになる", "伺う", "お書きする",
    "召し上がる", "いただく", "まいる", "上がる",
    # mood, tense, negation showcases
    "走りたい", "走りたがる", "書ける", "見られる", "見られた",
    "答えさせていただきます", "休ませていただきます",
    "食べよう", "食べましょう", "食べるだろう", "食べるでしょう",
    "走る", "走った", "食べる", "食べた", "見ない", "見ないです", "見ません",
    "行く", "会う", "書く", "見る", "ない",
}

PLAIN_FAMILIES = ("plain.", "polite.")
CORE_FAMILIES = PLAIN_FAMILIES + (
    "prosp.", "inten.", "opt1.", "opt3.", "pot.", "pass.", "elev.", "imp.",
)
STACKED_FAMILIES = ("caus.pass.contr", "caus.contr", "caus.pass", "caus.")
ARU_ODD_FAMILIES = (
    "pot.", "pass.", "elev.", "caus", "opt1.", "opt3.", "imp.",
    "resp.peri", "humb.peri", "perm.", "inten.",
)


def tier_for(verb, rule_id: str) -> str:
    """high: never filtered; mid: occasionally filtered; low: mostly filtered."""
    lemma, politeness = verb.lemma, verb.politeness
    if lemma == "ある" and rule_id.startswith(ARU_ODD_FAMILIES):
        return "low"   # あられる, あらせる and friends
    if lemma == "死ぬ" and rule_id.startswith(("elev.", "resp.peri", "humb.peri", "imp.form")):
        return "low"   # honorifics of 死ぬ sound wrong even where not excluded
    if politeness is PolitenessType.BASIC:
        if rule_id.startswith("caus.pass.contr") or rule_id.startswith("caus.contr"):
            return "mid"  # contractions are colloquial, patchily attested
        if rule_id.startswith(CORE_FAMILIES) or rule_id.startswith(("perm.", "resp.peri", "humb.peri")):
            return "high"
        return "mid"
    # lexical honorifics: the plain paradigm is common, stacked voice and
    # double honorific marking mostly is not
    if rule_id.startswith("resp.peri") or rule_id.startswith(STACKED_FAMILIES):
        return "low"
    if rule_id.startswith(PLAIN_FAMILIES) or rule_id.startswith(("perm.", "pot.", "imp.")):
        return "mid"
    return "low"


def synth_hits(form: str, tier: str) -> int:
    digest = hashlib.blake2b(f"hits:{form}".encode(), digest_size=8).digest()
    u = int.from_bytes(digest, "big") / 2**64
    if tier == "high":
        return int(10 ** (3 + u * 4))          # 10^3 .. 10^7
    if tier == "mid":
        return int(10 ** (u * 5))              # 1 .. 10^5, ~1/5 filtered
    return max(int(10 ** (u * 2)) - 1, 0)      # 0 .. 99, mostly filtered


def main():
    lexicon = load_lexicon(data_path("lexicon.tsv"))
    inventory = load_rules(data_path("rules.tsv"))
    exclusions = load_exclusions(data_path("exclusions.tsv"))
    entries = generate_all(lexicon, inventory, exclusions)

    tiers: dict[str, str] = {}
    rank = {"low": 0, "mid": 1, "high": 2}
    for entry in entries:
        verb = lexicon.entry(entry.lemma)
        tier = "high" if entry.surface in PINNED else tier_for(verb, entry.rule_id)
        best = tiers.get(entry.surface)
        if best is None or rank[tier] > rank[best]:
            tiers[entry.surface] = tier

    cache = HitCache()
    for form, tier in tiers.items():
        cache.put(HitRecord(form, synth_hits(form, tier), SOURCE, FETCHED_AT))

    out = ROOT / "src" / "katsuyo" / "data" / "hits.tsv"
    save_hit_cache(cache, out)

    kept = sum(1 for e in entries if e.status.value == "pending" and cache.hits(e.surface) > 10)
    low = sum(1 for e in entries if e.status.value == "pending" and cache.hits(e.surface) <= 10)
    zeros = sum(1 for r in cache.records.values() if r.hits == 0)
    print(f"forms: {len(cache)} (zero-hit: {zeros})")
    print(f"entries kept: {kept}, low-frequency: {low}, manual: 16")


if __name__ == "__main__":
    main()
