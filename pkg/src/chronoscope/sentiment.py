"""Polarity-lexicon word counting by year.

Counts are raw token occurrences of positive/negative lexicon words; there
is no negation handling and no per-document classification. Percentages are
shares of all tokens in a year, so they only make sense against the full
token totals kept by the index.

Lexicon file format: two-column CSV ``word,polarity`` with polarity
"positive" or "negative". A literal first row ``word,polarity`` is treated
as a header. Entries are single words, case-folded on load.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Union

from .corpus import CorpusLayout, DocumentRecord, load_corpus, read_document
from .errors import DataError
from .indexing import CorpusIndex
from .series import MODE_PERCENTAGE, MODE_RATE, TrendSeries, Value
from .tokenization import tokenize

_POLARITIES = ("positive", "negative")


@dataclass
class Lexicon:
    positive: set[str]
    negative: set[str]
    source_name: str = ""

    def __post_init__(self):
        overlap = self.positive & self.negative
        if overlap:
            raise DataError(
                "lexicon words listed under both polarities: "
                + ", ".join(sorted(overlap))
            )
        if not self.positive and not self.negative:
            raise DataError("lexicon is empty")


@dataclass
class SentimentYearStats:
    year: int
    pos_tokens: int
    neg_tokens: int
    total_tokens: int
    doc_count: int


def load_lexicon(path: str | Path) -> Lexicon:
    """Load a word,polarity CSV; duplicate rows collapse, conflicts fail."""
    path = Path(path)
    positive: set[str] = set()
    negative: set[str] = set()
    with open(path, "r", encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if lineno == 1 and [c.strip().lower() for c in row[:2]] == ["word", "polarity"]:
                continue
            if len(row) < 2:
                raise DataError(f"{path}:{lineno}: expected word,polarity, got {row!r}")
            word = row[0].strip().lower()
            polarity = row[1].strip().lower()
            if not word:
                raise DataError(f"{path}:{lineno}: empty word")
            if polarity not in _POLARITIES:
                raise DataError(
                    f"{path}:{lineno}: polarity for {word!r} must be positive or "
                    f"negative, got {polarity!r}"
                )
            (positive if polarity == "positive" else negative).add(word)
    return Lexicon(positive=positive, negative=negative, source_name=path.name)


CorpusSource = Union[CorpusIndex, CorpusLayout, str, Path, Iterable[DocumentRecord]]


def sentiment_by_year(source: CorpusSource, lexicon: Lexicon) -> dict[int, SentimentYearStats]:
    """Per-year positive/negative token occurrence totals.

    Accepts a built CorpusIndex (postings lookups) or a corpus layout / root
    path / document iterable (full scan); both routes count identically.
    """
    if isinstance(source, CorpusIndex):
        stats: dict[int, SentimentYearStats] = {}
        for year in source.years():
            yi = source.year_index(year)
            assert yi is not None
            pos = sum(yi.token_frequency(w) for w in lexicon.positive)
            neg = sum(yi.token_frequency(w) for w in lexicon.negative)
            stats[year] = SentimentYearStats(
                year=year,
                pos_tokens=pos,
                neg_tokens=neg,
                total_tokens=yi.token_total,
                doc_count=yi.doc_count,
            )
        return stats

    if isinstance(source, (str, Path)):
        docs: Iterable[DocumentRecord] = load_corpus(source)
    elif isinstance(source, CorpusLayout):
        layout = source
        docs = (
            DocumentRecord(doc_id=e.doc_id, year=e.year, body=read_document(layout, e))
            for e in layout.entries
        )
    else:
        docs = source

    acc: dict[int, SentimentYearStats] = {}
    for doc in docs:
        tokens = tokenize(doc.body)
        st = acc.get(doc.year)
        if st is None:
            st = acc[doc.year] = SentimentYearStats(doc.year, 0, 0, 0, 0)
        st.pos_tokens += sum(1 for t in tokens if t in lexicon.positive)
        st.neg_tokens += sum(1 for t in tokens if t in lexicon.negative)
        st.total_tokens += len(tokens)
        st.doc_count += 1
    return dict(sorted(acc.items()))


def _stats_series(
    stats: dict[int, SentimentYearStats],
    labels: tuple[str, str],
    mode: str,
    cell,
) -> tuple[TrendSeries, TrendSeries]:
    if not stats:
        raise DataError("no yearly stats to build series from")
    years = sorted(stats)
    start, end = years[0], years[-1]
    pos_vals: list[Value] = []
    neg_vals: list[Value] = []
    for y in range(start, end + 1):
        st = stats.get(y)
        pair = cell(st) if st is not None else (None, None)
        pos_vals.append(pair[0])
        neg_vals.append(pair[1])
    return (
        TrendSeries(labels[0], start, end, pos_vals, mode),
        TrendSeries(labels[1], start, end, neg_vals, mode),
    )


def sentiment_percentages(stats: dict[int, SentimentYearStats]) -> tuple[TrendSeries, TrendSeries]:
    """Positive/negative share of all tokens, per year, in percent.

    A year with no tokens yields null, never 0: absence of text is not
    neutrality.
    """

    def cell(st: SentimentYearStats):
        if st.total_tokens <= 0:
            return (None, None)
        return (
            100.0 * st.pos_tokens / st.total_tokens,
            100.0 * st.neg_tokens / st.total_tokens,
        )

    return _stats_series(stats, ("positive %", "negative %"), MODE_PERCENTAGE, cell)


def sentiment_per_article(stats: dict[int, SentimentYearStats]) -> tuple[TrendSeries, TrendSeries]:
    """Average positive/negative words per document, per year."""

    def cell(st: SentimentYearStats):
        if st.doc_count <= 0:
            return (None, None)
        return (st.pos_tokens / st.doc_count, st.neg_tokens / st.doc_count)

    return _stats_series(
        stats, ("positive per article", "negative per article"), MODE_RATE, cell
    )


def convert_general_inquirer(source: str | Path | IO[str], dest: str | Path) -> list[str]:
    """Convert a General-Inquirer-style spreadsheet CSV to the lexicon format.

    Expects columns named Entry, Positiv, Negativ (other columns ignored).
    Sense tags like WELL#1 are stripped and entries are case-folded. Words
    that end up marked both positive and negative are dropped from the
    output and returned so the caller can report them.
    """
    if isinstance(source, (str, Path)):
        fh: IO[str] = open(source, "r", encoding="utf-8-sig", newline="")
        close = True
    else:
        fh, close = source, False
    positive: set[str] = set()
    negative: set[str] = set()
    try:
        reader = csv.DictReader(fh)
        fields = {name.strip().lower(): name for name in (reader.fieldnames or [])}
        for needed in ("entry", "positiv", "negativ"):
            if needed not in fields:
                raise DataError(f"General Inquirer CSV is missing the {needed!r} column")
        for row in reader:
            entry = (row.get(fields["entry"]) or "").split("#")[0].strip().lower()
            if not entry:
                continue
            if (row.get(fields["positiv"]) or "").strip():
                positive.add(entry)
            if (row.get(fields["negativ"]) or "").strip():
                negative.add(entry)
    finally:
        if close:
            fh.close()

    conflicted = sorted(positive & negative)
    positive -= set(conflicted)
    negative -= set(conflicted)
    with open(dest, "w", encoding="utf-8", newline="") as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["word", "polarity"])
        for word in sorted(positive):
            writer.writerow([word, "positive"])
        for word in sorted(negative):
            writer.writerow([word, "negative"])
    return conflicted
