"""Year-sharded plain-text corpus store.

A corpus on disk is ``<root>/<year>/<doc_id>.txt`` (UTF-8 body only) plus
``<root>/manifest.tsv`` with columns doc_id, year, path, token_count. The
store is written once (by ingest_csv or generate_synthetic) and read-only
afterwards.
"""

from __future__ import annotations

import csv
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import DataError
from .tokenization import tokenize

MANIFEST_NAME = "manifest.tsv"
_MANIFEST_COLUMNS = ("doc_id", "year", "path", "token_count")

MIN_YEAR = 1000
MAX_YEAR = 9999

# overlapping scan so e.g. "0319-2012" still finds 2012
_YEAR_WINDOW_RE = re.compile(r"(?=(\d{4}))")


@dataclass
class DocumentRecord:
    """One document: id, calendar year, metadata, and the body text."""

    doc_id: str
    year: int
    authors: list[str] = field(default_factory=list)
    subjects: list[str] = field(default_factory=list)
    body: str = ""


@dataclass(frozen=True)
class ManifestEntry:
    doc_id: str
    year: int
    path: str
    token_count: int


@dataclass
class CorpusLayout:
    """Root directory plus the parsed manifest, sorted by (year, doc_id)."""

    root: Path
    entries: list[ManifestEntry]

    def years(self) -> list[int]:
        return sorted({e.year for e in self.entries})

    @property
    def doc_count(self) -> int:
        return len(self.entries)


@dataclass
class IngestReport:
    documents: int
    tokens: int
    skipped: int
    reasons: dict[str, int] = field(default_factory=dict)


def extract_year(date_text: str) -> int | None:
    """First 4-digit substring of date_text that parses as a valid year."""
    for m in _YEAR_WINDOW_RE.finditer(date_text or ""):
        year = int(m.group(1))
        if MIN_YEAR <= year <= MAX_YEAR:
            return year
    return None


def _read_body(path: Path) -> str:
    # newline='' so bodies round-trip byte-for-byte (no \r\n translation)
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return fh.read()


def _require_empty_dir(root: Path) -> None:
    if root.exists():
        if not root.is_dir():
            raise DataError(f"corpus root {root} exists and is not a directory")
        if any(root.iterdir()):
            raise DataError(f"corpus root {root} is not empty; refusing to overwrite")
    root.mkdir(parents=True, exist_ok=True)


def _write_documents(root: Path, records: Iterable[DocumentRecord]) -> CorpusLayout:
    """Write one file per record plus the manifest; records become immutable files."""
    _require_empty_dir(root)
    entries: list[ManifestEntry] = []
    for rec in records:
        shard = root / str(rec.year)
        shard.mkdir(exist_ok=True)
        rel = f"{rec.year}/{rec.doc_id}.txt"
        with open(root / rel, "w", encoding="utf-8", newline="") as fh:
            fh.write(rec.body)
        entries.append(ManifestEntry(rec.doc_id, rec.year, rel, len(tokenize(rec.body))))
    entries.sort(key=lambda e: (e.year, e.doc_id))
    with open(root / MANIFEST_NAME, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
        writer.writerow(_MANIFEST_COLUMNS)
        for e in entries:
            writer.writerow([e.doc_id, e.year, e.path, e.token_count])
    return CorpusLayout(root=root, entries=entries)


def _split_list_cell(cell: str) -> list[str]:
    if not cell:
        return []
    parts = cell.split(";") if ";" in cell else cell.split(",")
    return [p.strip() for p in parts if p.strip()]


def ingest_csv(
    source: str | Path | IO[str],
    out_root: str | Path,
    column_map: dict[str, str],
) -> tuple[CorpusLayout, IngestReport]:
    """Parse a CSV export and persist it as a year-sharded corpus.

    column_map binds roles to header names and must cover "date" and "body";
    "authors" and "subjects" are optional. Rows with no recognizable year or
    no body tokens are skipped and counted in the report, never dropped
    silently. doc_ids are ``<year>-<row ordinal>`` so re-running the same
    ingest is fully deterministic.
    """
    for role in ("date", "body"):
        if role not in column_map:
            raise DataError(f"column_map must bind the {role!r} column")

    out_root = Path(out_root)
    if isinstance(source, (str, Path)):
        fh: IO[str] = open(source, "r", encoding="utf-8-sig", newline="")
        close = True
    else:
        fh, close = source, False

    try:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for role, col in column_map.items():
            if col not in header:
                raise DataError(f"bound column {col!r} (for {role!r}) not found in CSV header")

        reasons: Counter[str] = Counter()
        records: list[DocumentRecord] = []
        total_tokens = 0
        rows = 0
        for ordinal, row in enumerate(reader):
            rows += 1
            year = extract_year(row.get(column_map["date"]) or "")
            if year is None:
                reasons["no year in date"] += 1
                continue
            body = row.get(column_map["body"]) or ""
            n_tokens = len(tokenize(body))
            if n_tokens == 0:
                reasons["empty body"] += 1
                continue
            authors = _split_list_cell(row.get(column_map.get("authors", ""), "") or "")
            subjects = _split_list_cell(row.get(column_map.get("subjects", ""), "") or "")
            records.append(
                DocumentRecord(
                    doc_id=f"{year}-{ordinal:06d}",
                    year=year,
                    authors=authors,
                    subjects=subjects,
                    body=body,
                )
            )
            total_tokens += n_tokens
    finally:
        if close:
            fh.close()

    layout = _write_documents(out_root, records)
    report = IngestReport(
        documents=len(records),
        tokens=total_tokens,
        skipped=sum(reasons.values()),
        reasons=dict(sorted(reasons.items())),
    )
    assert report.documents + report.skipped == rows
    return layout, report


def load_layout(root: str | Path) -> CorpusLayout:
    """Parse and validate the manifest; every entry must resolve to a file."""
    root = Path(root)
    manifest = root / MANIFEST_NAME
    if not manifest.is_file():
        raise DataError(f"no manifest at {manifest}")
    entries: list[ManifestEntry] = []
    with open(manifest, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh, delimiter="\t")
        header = next(reader, None)
        if header is None or tuple(header) != _MANIFEST_COLUMNS:
            raise DataError(f"manifest {manifest} has unexpected header {header!r}")
        for row in reader:
            if len(row) != 4:
                raise DataError(f"manifest {manifest} has malformed row {row!r}")
            entries.append(ManifestEntry(row[0], int(row[1]), row[2], int(row[3])))

    seen: set[str] = set()
    for e in entries:
        if e.doc_id in seen:
            raise DataError(f"duplicate doc_id in manifest: {e.doc_id}")
        seen.add(e.doc_id)
    missing = [e.path for e in entries if not (root / e.path).is_file()]
    if missing:
        raise DataError(
            "manifest entries point at missing files: " + ", ".join(sorted(missing))
        )
    entries.sort(key=lambda e: (e.year, e.doc_id))
    return CorpusLayout(root=root, entries=entries)


def load_corpus(root: str | Path) -> Iterator[DocumentRecord]:
    """Yield every document, grouped by year ascending then doc_id ascending.

    Authors/subjects are not persisted in the store and come back empty.
    """
    layout = load_layout(root)
    for e in layout.entries:
        yield DocumentRecord(
            doc_id=e.doc_id,
            year=e.year,
            body=_read_body(layout.root / e.path),
        )


def read_document(layout: CorpusLayout, entry: ManifestEntry) -> str:
    """Read one document body from an already-validated layout."""
    return _read_body(layout.root / entry.path)


def verify_shards(layout: CorpusLayout) -> None:
    """Directory-walk check: every shard dir is a 4-digit year that matches
    the year of every manifest entry inside it, with no stray files."""
    by_path = {e.path: e for e in layout.entries}
    for shard in sorted(p for p in layout.root.iterdir() if p.is_dir()):
        if not re.fullmatch(r"\d{4}", shard.name):
            raise DataError(f"shard directory {shard.name!r} is not a 4-digit year")
        for doc in shard.iterdir():
            rel = f"{shard.name}/{doc.name}"
            entry = by_path.get(rel)
            if entry is None:
                raise DataError(f"file {rel} is not in the manifest")
            if str(entry.year) != shard.name:
                raise DataError(f"{rel}: manifest year {entry.year} != shard {shard.name}")


def generate_synthetic(
    out_root: str | Path,
    seed: int,
    years: Iterable[int],
    docs_per_year: int,
    vocabulary: list[str],
) -> CorpusLayout:
    """Write a deterministic synthetic corpus for demos and tests.

    Vocabulary entries may be multiword phrases; each is inserted whole, so
    seeded corpora can contain multi-token entity names. The output is a pure
    function of the arguments: the same seed gives byte-identical corpora.
    """
    vocabulary = [w.strip() for w in vocabulary if w.strip()]
    if not vocabulary:
        raise DataError("vocabulary must not be empty")
    for word in vocabulary:
        if not tokenize(word):
            raise DataError(f"vocabulary entry {word!r} contains no tokens")
    if docs_per_year < 0:
        raise DataError("docs_per_year must be >= 0")
    year_list = sorted(set(int(y) for y in years))
    for y in year_list:
        if not MIN_YEAR <= y <= MAX_YEAR:
            raise DataError(f"year {y} outside [{MIN_YEAR}, {MAX_YEAR}]")

    rng = random.Random(seed)
    records: list[DocumentRecord] = []
    ordinal = 0
    for year in year_list:
        for _ in range(docs_per_year):
            n_words = rng.randint(20, 80)
            words = [vocabulary[rng.randrange(len(vocabulary))] for _ in range(n_words)]
            records.append(
                DocumentRecord(
                    doc_id=f"{year}-{ordinal:06d}",
                    year=year,
                    body=" ".join(words),
                )
            )
            ordinal += 1
    return _write_documents(Path(out_root), records)
