"""Dataset I/O: three-column TSV records, statistics, and diffing.

One record per line: lemma <TAB> surface form <TAB> canonical feature
string. No header, UTF-8, LF line endings. Discarded entries go to a
four-column sidecar that appends the hit count.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .features import FeatureBundle, format_bundle, parse_bundle
from .generate import GeneratedEntry
from .lexicon import Lexicon


@dataclass(frozen=True)
class DatasetRecord:
    lemma: str
    surface: str
    feature_text: str  # canonical bundle string

    @property
    def bundle(self) -> FeatureBundle:
        return parse_bundle(self.feature_text)


@dataclass
class DatasetStats:
    total_records: int
    distinct_lemmas: int
    records_per_lemma: float
    per_lemma_counts: dict[str, int] = field(default_factory=dict)
    per_class_counts: dict[str, int] = field(default_factory=dict)


def records_from_entries(entries: list[GeneratedEntry]) -> list[DatasetRecord]:
    return [DatasetRecord(e.lemma, e.surface, format_bundle(e.bundle)) for e in entries]


def write_tsv(records: list[DatasetRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for r in records:
            out.write(f"{r.lemma}\t{r.surface}\t{r.feature_text}\n")


def write_sidecar(entries: list[GeneratedEntry], path) -> None:
    """Discarded entries with their hit counts, for reference."""
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        for e in entries:
            hits = e.hits if e.hits is not None else ""
            out.write(f"{e.lemma}\t{e.surface}\t{format_bundle(e.bundle)}\t{hits}\n")


def read_tsv(path) -> list[DatasetRecord]:
    """Read and validate a three-column dataset file.

    Bundles must parse; (lemma, form, bundle set) triples must be unique.
    """
    records: list[DatasetRecord] = []
    seen: set[tuple[str, str, frozenset]] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle.read().splitlines(), start=1):
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise ParseError(path, line_no, f"expected 3 columns, got {len(cols)}")
            lemma, surface, feature_text = cols
            if not lemma or not surface or not feature_text:
                raise ParseError(path, line_no, "empty field")
            try:
                bundle = parse_bundle(feature_text)
            except Exception as exc:
                raise ParseError(path, line_no, f"bad features {feature_text!r}: {exc}") from None
            key = (lemma, surface, bundle.labels)
            if key in seen:
                raise ParseError(path, line_no, f"duplicate record {lemma}/{surface}")
            seen.add(key)
            records.append(DatasetRecord(lemma, surface, format_bundle(bundle)))
    return records


def compute_stats(records: list[DatasetRecord], lexicon: Lexicon | None = None) -> DatasetStats:
    per_lemma: dict[str, int] = {}
    for r in records:
        per_lemma[r.lemma] = per_lemma.get(r.lemma, 0) + 1
    total = len(records)
    distinct = len(per_lemma)
    per_class: dict[str, int] = {}
    if lexicon is not None:
        for lemma, count in per_lemma.items():
            entry = lexicon.by_lemma.get(lemma)
            klass = entry.conj_class.value if entry else "unknown"
            per_class[klass] = per_class.get(klass, 0) + count
    return DatasetStats(
        total_records=total,
        distinct_lemmas=distinct,
        records_per_lemma=(total / distinct) if distinct else 0.0,
        per_lemma_counts=per_lemma,
        per_class_counts=per_class,
    )


@dataclass
class DiffReport:
    only_in_a: list[DatasetRecord] = field(default_factory=list)
    only_in_b: list[DatasetRecord] = field(default_factory=list)
    # (lemma, form, bundles only in a, bundles only in b)
    bundle_mismatches: list[tuple[str, str, list[str], list[str]]] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not (self.only_in_a or self.only_in_b or self.bundle_mismatches)


def diff(a: list[DatasetRecord], b: list[DatasetRecord]) -> DiffReport:
    """Set-based comparison; bundle equality is set equality, never string
    comparison of the feature column."""

    def keyed(records):
        table: dict[tuple[str, str], set[frozenset]] = {}
        for r in records:
            table.setdefault((r.lemma, r.surface), set()).add(r.bundle.labels)
        return table

    table_a, table_b = keyed(a), keyed(b)
    report = DiffReport()
    for key in sorted(set(table_a) | set(table_b)):
        lemma, surface = key
        in_a, in_b = table_a.get(key), table_b.get(key)
        if in_b is None:
            for labels in sorted(in_a, key=sorted):
                report.only_in_a.append(DatasetRecord(lemma, surface, format_bundle(FeatureBundle(labels))))
        elif in_a is None:
            for labels in sorted(in_b, key=sorted):
                report.only_in_b.append(DatasetRecord(lemma, surface, format_bundle(FeatureBundle(labels))))
        elif in_a != in_b:
            only_a = [format_bundle(FeatureBundle(l)) for l in sorted(in_a - in_b, key=sorted)]
            only_b = [format_bundle(FeatureBundle(l)) for l in sorted(in_b - in_a, key=sorted)]
            report.bundle_mismatches.append((lemma, surface, only_a, only_b))
    return report


def format_stats(stats: DatasetStats) -> str:
    lines = [
        f"records:            {stats.total_records}",
        f"distinct lemmas:    {stats.distinct_lemmas}",
        f"records per lemma:  {stats.records_per_lemma:g}",
    ]
    for klass in sorted(stats.per_class_counts):
        lines.append(f"  {klass}: {stats.per_class_counts[klass]}")
    return "\n".join(lines)


def format_diff(report: DiffReport) -> str:
    if report.empty:
        return "identical"
    lines = []
    for r in report.only_in_a:
        lines.append(f"only in A: {r.lemma}\t{r.surface}\t{r.feature_text}")
    for r in report.only_in_b:
        lines.append(f"only in B: {r.lemma}\t{r.surface}\t{r.feature_text}")
    for lemma, surface, only_a, only_b in report.bundle_mismatches:
        lines.append(
            f"bundle mismatch: {lemma}\t{surface}\tA={';'.join(only_a) or '-'} B={';'.join(only_b) or '-'}"
        )
    return "\n".join(lines)
