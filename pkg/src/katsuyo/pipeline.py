"""Shared pipeline assembly used by the CLI and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from . import data_path
from .analyze import AnalysisIndex, build_index
from .dataset import records_from_entries, write_sidecar, write_tsv
from .errors import InvariantViolation
from .frequency import (
    DEFAULT_THRESHOLD,
    HitCache,
    WebSearchHitProvider,
    fetch_hits,
    filter_entries,
    load_hit_cache,
)
from .generate import ExclusionList, GeneratedEntry, generate_all, load_exclusions
from .lexicon import Lexicon, load_lexicon
from .rules import RuleInventory, load_rules


@dataclass
class PipelineConfig:
    lexicon_path: Path | str = field(default_factory=lambda: data_path("lexicon.tsv"))
    rules_path: Path | str = field(default_factory=lambda: data_path("rules.tsv"))
    exclusion_path: Path | str = field(default_factory=lambda: data_path("exclusions.tsv"))
    hit_cache_path: Path | str | None = field(default_factory=lambda: data_path("hits.tsv"))
    output_dir: Path | str = "out"
    threshold: int = DEFAULT_THRESHOLD
    provider_mode: str = "offline"  # offline | live
    # live-provider settings; the API key comes from $SEARCH_API_KEY only
    provider_endpoint: str = "https://serpapi.com/search"
    provider_rate_per_minute: int = 60

    def __post_init__(self):
        if self.threshold < 0:
            raise InvariantViolation("threshold must be >= 0")
        if self.provider_mode not in ("offline", "live"):
            raise InvariantViolation(f"unknown provider mode {self.provider_mode!r}")
        if self.provider_mode == "offline" and not self.hit_cache_path:
            raise InvariantViolation("offline mode requires a hit cache path")


@dataclass
class PipelineData:
    lexicon: Lexicon
    inventory: RuleInventory
    exclusions: ExclusionList
    cache: HitCache | None = None


def load_inputs(config: PipelineConfig, with_cache: bool = True) -> PipelineData:
    lexicon = load_lexicon(config.lexicon_path)
    inventory = load_rules(config.rules_path)
    exclusions = load_exclusions(config.exclusion_path)
    cache = None
    if with_cache and config.hit_cache_path:
        cache = load_hit_cache(config.hit_cache_path)
    return PipelineData(lexicon, inventory, exclusions, cache)


def run_generate(config: PipelineConfig) -> tuple[PipelineData, list[GeneratedEntry]]:
    data = load_inputs(config, with_cache=False)
    entries = generate_all(data.lexicon, data.inventory, data.exclusions)
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_tsv(records_from_entries(entries), out_dir / "generated.tsv")
    return data, entries


def _ensure_live_hits(config: PipelineConfig, data: PipelineData, entries: list[GeneratedEntry]) -> None:
    """In live mode, fetch hit counts for forms the cache does not cover."""
    if config.provider_mode != "live":
        return
    if data.cache is None:
        data.cache = HitCache()
    missing = sorted({e.surface for e in entries if e.surface not in data.cache})
    if not missing:
        return
    provider = WebSearchHitProvider(
        endpoint=config.provider_endpoint,
        rate_per_minute=config.provider_rate_per_minute,
    )
    fetch_hits(provider, missing, cache=data.cache)


def run_filter(config: PipelineConfig) -> tuple[PipelineData, list[GeneratedEntry], list[GeneratedEntry]]:
    data = load_inputs(config)
    entries = generate_all(data.lexicon, data.inventory, data.exclusions)
    _ensure_live_hits(config, data, entries)
    kept, discarded = filter_entries(entries, data.cache, config.threshold)
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_tsv(records_from_entries(kept), out_dir / "kept.tsv")
    write_sidecar(discarded, out_dir / "discarded.tsv")
    return data, kept, discarded


def build_runtime(config: PipelineConfig) -> tuple[PipelineData, AnalysisIndex]:
    """Generate, filter, and index in memory; used by analyze/serve."""
    data = load_inputs(config)
    entries = generate_all(data.lexicon, data.inventory, data.exclusions)
    _ensure_live_hits(config, data, entries)
    kept, _ = filter_entries(entries, data.cache, config.threshold)
    return data, build_index(kept)
