"""Web-frequency evidence: hit providers, cache, filtering, confidence.

Hit counts are a point-in-time web measurement, so the toolkit never
depends on live results: providers are pluggable and the repository ships
a cached fixture that makes the whole pipeline reproducible offline.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import time
import urllib.parse
import urllib.request
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .errors import MissingHitRecord, ParseError, ProviderUnavailable, QuotaExceeded
from .generate import EntryStatus, GeneratedEntry

DEFAULT_THRESHOLD = 10


@dataclass(frozen=True)
class HitRecord:
    form: str
    hits: int
    source: str
    fetched_at: str  # ISO-8601

    def __post_init__(self):
        if self.hits < 0:
            raise ValueError(f"negative hit count for {self.form!r}")


@dataclass
class HitCache:
    records: dict[str, HitRecord] = field(default_factory=dict)

    def __contains__(self, form: str) -> bool:
        return form in self.records

    def __len__(self) -> int:
        return len(self.records)

    def get(self, form: str) -> HitRecord | None:
        return self.records.get(form)

    def hits(self, form: str) -> int:
        record = self.records.get(form)
        if record is None:
            raise MissingHitRecord(form)
        return record.hits

    def put(self, record: HitRecord) -> None:
        self.records[record.form] = record

    def max_hits(self) -> int:
        return max((r.hits for r in self.records.values()), default=1)


def load_hit_cache(path) -> HitCache:
    """Read a cache file: form <TAB> hits <TAB> source <TAB> ISO timestamp."""
    cache = HitCache()
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle.read().splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 4:
                raise ParseError(path, line_no, f"expected 4 columns, got {len(cols)}")
            form, hits_text, source, fetched_at = cols
            try:
                hits = int(hits_text)
            except ValueError:
                raise ParseError(path, line_no, f"bad hit count {hits_text!r}") from None
            if hits < 0:
                raise ParseError(path, line_no, f"negative hit count for {form!r}")
            if (form, source) in seen:
                raise ParseError(path, line_no, f"duplicate record for {form!r} from {source!r}")
            seen.add((form, source))
            cache.put(HitRecord(form, hits, source, fetched_at))
    return cache


def save_hit_cache(cache: HitCache, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for form in sorted(cache.records):
            r = cache.records[form]
            out.write(f"{r.form}\t{r.hits}\t{r.source}\t{r.fetched_at}\n")


# ---------------------------------------------------------------------------
# Providers
# ---------------------------------------------------------------------------


class SyntheticHitProvider:
    """Deterministic pseudo-hits with a long-tail shape; used for fixtures."""

    source = "synthetic"

    def __init__(self, seed: str = "katsuyo"):
        self.seed = seed

    def query(self, form: str) -> int:
        digest = hashlib.blake2b(f"{self.seed}:{form}".encode(), digest_size=8).digest()
        u = int.from_bytes(digest, "big") / 2**64
        # Log-uniform between 1 and 10^7, so a realistic share of forms
        # lands at or below the filter threshold.
        return int(10 ** (u * 7))


class FixtureHitProvider:
    """Serves hits from an in-memory mapping; anything else is unavailable."""

    source = "fixture"

    def __init__(self, table: dict[str, int]):
        self.table = dict(table)

    def query(self, form: str) -> int:
        try:
            return self.table[form]
        except KeyError:
            raise ProviderUnavailable(f"fixture has no entry for {form!r}") from None


class WebSearchHitProvider:
    """Exact-match hit counts from a JSON search endpoint.

    Optional live plug-in; requires an endpoint plus an API key in the
    environment variable named by ``api_key_env``. Queries are quoted so
    only exact matches count, and calls are rate limited.
    """

    source = "websearch"

    def __init__(
        self,
        endpoint: str,
        api_key_env: str = "SEARCH_API_KEY",
        rate_per_minute: int = 60,
        timeout: float = 10.0,
    ):
        self.endpoint = endpoint
        self.api_key = os.environ.get(api_key_env, "")
        self.min_interval = 60.0 / max(rate_per_minute, 1)
        self.timeout = timeout
        self._last_call = 0.0
        if not self.api_key:
            raise ProviderUnavailable(f"no API key in ${api_key_env}")

    def query(self, form: str) -> int:
        wait = self.min_interval - (time.monotonic() - self._last_call)
        if wait > 0:
            time.sleep(wait)
        self._last_call = time.monotonic()
        params = urllib.parse.urlencode({"q": f'"{form}"', "api_key": self.api_key})
        try:
            with urllib.request.urlopen(f"{self.endpoint}?{params}", timeout=self.timeout) as resp:
                payload = json.loads(resp.read().decode("utf-8"))
        except Exception as exc:
            raise ProviderUnavailable(f"search request failed: {exc}") from exc
        try:
            return int(payload["search_information"]["total_results"])
        except (KeyError, TypeError, ValueError):
            raise ProviderUnavailable(f"malformed response for {form!r}") from None


# ---------------------------------------------------------------------------
# Fetching and filtering
# ---------------------------------------------------------------------------


@dataclass
class FetchReport:
    cache: HitCache
    failures: list[tuple[str, str]] = field(default_factory=list)  # form, reason


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def fetch_hits(
    provider,
    forms: list[str],
    cache: HitCache | None = None,
    ttl_seconds: float | None = None,
    now: datetime | None = None,
) -> FetchReport:
    """Ensure a hit record for every form, reusing fresh cached values.

    A per-form provider failure leaves that form out of the cache and adds
    it to the failure report; it is never recorded as zero hits. A
    provider-level QuotaExceeded aborts the batch, attaching the partial
    cache and a resume index to the raised error.
    """
    cache = cache if cache is not None else HitCache()
    now = now or datetime.now(timezone.utc)
    report = FetchReport(cache)
    for index, form in enumerate(forms):
        existing = cache.get(form)
        if existing is not None:
            if ttl_seconds is None:
                continue
            fetched = datetime.fromisoformat(existing.fetched_at)
            if (now - fetched).total_seconds() <= ttl_seconds:
                continue
        try:
            hits = provider.query(form)
        except QuotaExceeded as exc:
            raise QuotaExceeded(str(exc), partial_cache=cache, resume_index=index) from None
        except ProviderUnavailable as exc:
            report.failures.append((form, str(exc)))
            continue
        cache.put(HitRecord(form, hits, provider.source, _now_iso()))
    return report


def filter_entries(
    entries: list[GeneratedEntry],
    cache: HitCache,
    threshold: int = DEFAULT_THRESHOLD,
) -> tuple[list[GeneratedEntry], list[GeneratedEntry]]:
    """Split entries into (kept, discarded) by hit count.

    Hits at or below the threshold discard the entry; manual exclusions
    pass through untouched. Every pending entry must have a hit record:
    silently keeping an unverified form would defeat the filter.
    """
    kept: list[GeneratedEntry] = []
    discarded: list[GeneratedEntry] = []
    for entry in entries:
        if entry.status is EntryStatus.DISCARDED_MANUAL:
            record = cache.get(entry.surface)
            if record is not None and entry.hits is None:
                entry.hits = record.hits
            discarded.append(entry)
            continue
        if entry.status is EntryStatus.PENDING:
            entry.hits = cache.hits(entry.surface)
            if entry.hits <= threshold:
                entry.mark(EntryStatus.DISCARDED_LOW_FREQUENCY)
                discarded.append(entry)
            else:
                entry.mark(EntryStatus.KEPT)
                kept.append(entry)
        elif entry.status is EntryStatus.KEPT:
            kept.append(entry)
        else:
            discarded.append(entry)
    return kept, discarded


def confidence(hits: int, max_hits: int) -> int:
    """Log-scaled 0–100 score; 0 for no hits, 100 at the dataset maximum."""
    if hits <= 0:
        return 0
    if max_hits < 1:
        raise ValueError("max_hits must be positive")
    hits = min(hits, max_hits)
    return round(100 * math.log1p(hits) / math.log1p(max_hits))


def rank_plot_data(cache: HitCache) -> list[tuple[int, float]]:
    """(rank, hits) pairs for a log-log rank plot.

    Forms are ranked by hits descending (ties broken by form string), and
    zero-hit forms are plotted as 0.5 so they stay visible on a log axis.
    """
    ordered = sorted(cache.records.values(), key=lambda r: (-r.hits, r.form))
    return [(rank, r.hits if r.hits > 0 else 0.5) for rank, r in enumerate(ordered, start=1)]
