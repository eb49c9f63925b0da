"""Command-line entry point.

Subcommands: inflect, analyze, generate, filter, stats, diff, serve.
Exit codes: 0 success, 1 validation error, 2 I/O or provider error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import data_path
from .analyze import analyze
from .dataset import compute_stats, diff, format_diff, format_stats, read_tsv
from .engine import ConjugationClass
from .errors import KatsuyoError, MissingHitRecord, ProviderUnavailable, QuotaExceeded
from .features import parse_bundle
from .frequency import load_hit_cache
from .generate import EntryStatus
from .inflect import inflect_adhoc
from .pipeline import PipelineConfig, build_runtime, run_filter, run_generate
from .rules import EXPECTED_RULE_COUNTS, load_rules


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", default=None, help="JSON config file; flags override it")
    parser.add_argument("--lexicon", default=None, help="lexicon TSV (default: shipped)")
    parser.add_argument("--rules", default=None, help="rule table TSV (default: shipped)")
    parser.add_argument("--exclusions", default=None, help="exclusion list TSV (default: shipped)")
    parser.add_argument("--hits-cache", default=None, help="hit cache TSV (default: shipped fixture)")
    parser.add_argument("--threshold", type=int, default=None, help="discard at or below this many hits")
    parser.add_argument("--out", default=None, help="output directory")
    parser.add_argument("--provider", choices=["offline", "live"], default=None)


# config-file key -> PipelineConfig field
_CONFIG_KEYS = {
    "lexicon": "lexicon_path",
    "rules": "rules_path",
    "exclusions": "exclusion_path",
    "hits_cache": "hit_cache_path",
    "out": "output_dir",
    "threshold": "threshold",
    "provider": "provider_mode",
    "provider_endpoint": "provider_endpoint",
    "provider_rate_per_minute": "provider_rate_per_minute",
}


def _config(args) -> PipelineConfig:
    kwargs = {}
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as handle:
            loaded = json.load(handle)
        for key, value in loaded.items():
            if key not in _CONFIG_KEYS:
                raise KatsuyoError(f"unknown config key {key!r}")
            kwargs[_CONFIG_KEYS[key]] = value
    # explicit flags win over the config file
    if args.lexicon:
        kwargs["lexicon_path"] = args.lexicon
    if args.rules:
        kwargs["rules_path"] = args.rules
    if args.exclusions:
        kwargs["exclusion_path"] = args.exclusions
    if getattr(args, "hits_cache", None):
        kwargs["hit_cache_path"] = args.hits_cache
    if getattr(args, "out", None):
        kwargs["output_dir"] = args.out
    if getattr(args, "threshold", None) is not None:
        kwargs["threshold"] = args.threshold
    if getattr(args, "provider", None):
        kwargs["provider_mode"] = args.provider
    return PipelineConfig(**kwargs)


def cmd_inflect(args) -> int:
    klass = ConjugationClass.from_text(args.conj_class)
    bundle = parse_bundle(args.features)
    inventory = load_rules(args.rules or data_path("rules.tsv"))
    matches = inflect_adhoc(args.lemma, klass, bundle, inventory)
    if not matches:
        print(f"no rule matches {bundle.text} for class {klass.value}", file=sys.stderr)
        return 1
    for form, rule_id in matches:
        print(f"{form}\t{rule_id}")
    return 0


def cmd_generate(args) -> int:
    config = _config(args)
    data, entries = run_generate(config)
    manual = sum(1 for e in entries if e.status is EntryStatus.DISCARDED_MANUAL)
    print(f"generated {len(entries)} entries from {len(data.lexicon)} verbs "
          f"({manual} manually excluded)")
    print("per-verb counts by class:")
    for (politeness, klass), expected in EXPECTED_RULE_COUNTS.items():
        verbs = [v for v in data.lexicon.entries
                 if v.politeness is politeness and v.conj_class is klass]
        if not verbs:
            continue
        per_verb = sum(1 for e in entries if e.lemma == verbs[0].lemma)
        print(f"  {politeness.value:<11} {klass.value:<14} {len(verbs):>3} verbs x {per_verb} forms")
    print(f"wrote {config.output_dir}/generated.tsv")
    return 0


def cmd_filter(args) -> int:
    config = _config(args)
    _, kept, discarded = run_filter(config)
    manual = sum(1 for e in discarded if e.status is EntryStatus.DISCARDED_MANUAL)
    low = len(discarded) - manual
    print(f"kept {len(kept)}, discarded {low} low-frequency + {manual} manual")
    print(f"wrote {config.output_dir}/kept.tsv and {config.output_dir}/discarded.tsv")
    return 0


def cmd_stats(args) -> int:
    records = read_tsv(args.dataset)
    print(format_stats(compute_stats(records)))
    return 0


def cmd_analyze(args) -> int:
    if args.dataset:
        records = read_tsv(args.dataset)
        cache = load_hit_cache(args.hits_cache) if args.hits_cache else None
        from .analyze import build_index
        from .generate import GeneratedEntry

        entries = []
        for r in records:
            hits = cache.get(r.surface).hits if cache and r.surface in cache else 0
            entries.append(GeneratedEntry(r.lemma, r.surface, r.bundle, rule_id="", hits=hits,
                                          status=EntryStatus.KEPT))
        index = build_index(entries)
        result = analyze(index, args.form)
    else:
        config = _config(args)
        data, index = build_runtime(config)
        result = analyze(index, args.form, data.lexicon)
    if not result.found:
        print(f"{args.form}: not found")
        return 0
    for reading, related in zip(result.readings, result.related):
        print(f"{result.form}\t{reading.lemma}\t{reading.bundle.text}\tconfidence={reading.confidence}")
        for form, score in related:
            print(f"    related: {form} ({score})")
    return 0


def cmd_diff(args) -> int:
    report = diff(read_tsv(args.a), read_tsv(args.b))
    print(format_diff(report))
    return 0


def cmd_serve(args) -> int:
    from .server import serve

    config = _config(args)
    serve(config, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="katsuyo",
                                     description="Japanese verb morphology toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inflect", help="inflect a lemma with a feature bundle")
    p.add_argument("lemma")
    p.add_argument("conj_class", help="RegularI, RegularII, IrregularKuru, IrregularSuru")
    p.add_argument("features", help='e.g. "V;PST;PFV"')
    p.add_argument("--rules", default=None)
    p.set_defaults(func=cmd_inflect)

    p = sub.add_parser("generate", help="write the pre-filter dataset")
    _add_pipeline_flags(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("filter", help="generate, apply the frequency filter, write kept + sidecar")
    _add_pipeline_flags(p)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("stats", help="print statistics for a dataset TSV")
    p.add_argument("dataset")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("analyze", help="look up readings of a surface form")
    p.add_argument("form")
    p.add_argument("--dataset", default=None, help="analyze a dataset TSV instead of the built pipeline")
    _add_pipeline_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("diff", help="compare two dataset TSVs")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("serve", help="serve the query API over HTTP")
    _add_pipeline_flags(p)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MissingHitRecord, ProviderUnavailable, QuotaExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KatsuyoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
