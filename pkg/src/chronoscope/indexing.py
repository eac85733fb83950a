"""Per-year inverted indexes over a year-sharded corpus.

Postings map a term to the documents of one year that contain it, with
per-document occurrence counts, so both document frequency and token
frequency come from the same structure. Co-occurrence is a sorted-postings
intersection; the window is always the whole document.

Serialized form (one UTF-8 text file per year, ``<year>.idx``):

    chronoscope-index 1
    year<TAB>1992
    docs<TAB>3
    tokens<TAB>42
    D<TAB><doc_id><TAB><token_count>        one per document, doc_id ascending
    T<TAB><term><TAB>g:c,g:c,...            terms sorted lexicographically

Document ordinals are the 0-based positions of the D lines. In a T line the
first ``g`` is the ordinal of the first posting and every later ``g`` is the
gap to the previous ordinal (strictly positive); ``c`` is the term's
occurrence count in that document. The format is line-oriented on purpose so
an independent reader needs nothing beyond split().
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING

from .errors import DataError
from .tokenization import tokenize

if TYPE_CHECKING:
    from .corpus import CorpusLayout

FORMAT_MAGIC = "chronoscope-index"
FORMAT_VERSION = 1

# posting = (doc ordinal within the year, occurrences in that doc)
Posting = tuple[int, int]


@dataclass
class YearIndex:
    """Inverted index for the documents of a single year."""

    year: int
    doc_ids: list[str]
    doc_token_counts: list[int]
    postings: dict[str, list[Posting]] = field(default_factory=dict)

    @property
    def doc_count(self) -> int:
        return len(self.doc_ids)

    @property
    def token_total(self) -> int:
        return sum(self.doc_token_counts)

    @property
    def per_doc_token_counts(self) -> dict[str, int]:
        return dict(zip(self.doc_ids, self.doc_token_counts))

    def doc_frequency(self, term: str) -> int:
        return len(self.postings.get(term, ()))

    def token_frequency(self, term: str) -> int:
        return sum(count for _, count in self.postings.get(term, ()))

    def cooccurrence(self, term_a: str, term_b: str) -> int:
        return _intersection_size(self.postings.get(term_a, []), self.postings.get(term_b, []))


def _intersection_size(a: list[Posting], b: list[Posting]) -> int:
    i = j = hits = 0
    while i < len(a) and j < len(b):
        if a[i][0] == b[j][0]:
            hits += 1
            i += 1
            j += 1
        elif a[i][0] < b[j][0]:
            i += 1
        else:
            j += 1
    return hits


def build_year_index(year: int, docs: list[tuple[str, str]]) -> YearIndex:
    """Index one year's documents given (doc_id, body) pairs."""
    docs = sorted(docs, key=lambda d: d[0])
    doc_ids = [doc_id for doc_id, _ in docs]
    doc_token_counts: list[int] = []
    postings: dict[str, list[Posting]] = {}
    for ordinal, (_, body) in enumerate(docs):
        tokens = tokenize(body)
        doc_token_counts.append(len(tokens))
        for term, count in Counter(tokens).items():
            postings.setdefault(term, []).append((ordinal, count))
    return YearIndex(year=year, doc_ids=doc_ids, doc_token_counts=doc_token_counts, postings=postings)


class CorpusIndex:
    """Immutable map year -> YearIndex answering frequency queries.

    Query terms go through the tokenizer first, so matching is
    case-insensitive and a multi-token input is rejected rather than
    silently matching nothing.
    """

    def __init__(self, years: dict[int, YearIndex]):
        self._years = dict(sorted(years.items()))

    def years(self) -> list[int]:
        return list(self._years)

    def coverage(self) -> tuple[int, int] | None:
        if not self._years:
            return None
        ys = self.years()
        return ys[0], ys[-1]

    def year_index(self, year: int) -> YearIndex | None:
        return self._years.get(year)

    def doc_count(self, year: int) -> int:
        yi = self._years.get(year)
        return yi.doc_count if yi else 0

    def token_total(self, year: int) -> int:
        yi = self._years.get(year)
        return yi.token_total if yi else 0

    @property
    def total_documents(self) -> int:
        return sum(yi.doc_count for yi in self._years.values())

    @property
    def total_tokens(self) -> int:
        return sum(yi.token_total for yi in self._years.values())

    def doc_frequency(self, term: str, year: int) -> int:
        """Documents of ``year`` containing the term at least once."""
        token = normalize_term(term)
        yi = self._years.get(year)
        return yi.doc_frequency(token) if yi else 0

    def token_frequency(self, term: str, year: int) -> int:
        """Total occurrences of the term across the year's documents."""
        token = normalize_term(term)
        yi = self._years.get(year)
        return yi.token_frequency(token) if yi else 0

    def cooccurrence(self, term_a: str, term_b: str, year: int) -> int:
        """Documents of ``year`` containing both terms (whole-document window)."""
        tok_a = normalize_term(term_a)
        tok_b = normalize_term(term_b)
        yi = self._years.get(year)
        return yi.cooccurrence(tok_a, tok_b) if yi else 0

    def vocabulary(self, year: int) -> list[str]:
        yi = self._years.get(year)
        return sorted(yi.postings) if yi else []


def normalize_term(term: str) -> str:
    """Reduce a query term to its single index token, or fail loudly."""
    tokens = tokenize(term)
    if len(tokens) != 1:
        raise DataError(
            f"term {term!r} is {len(tokens)} tokens after tokenization; the index is "
            "strictly unigram (use cooccurrence for term pairs, the entity layer for "
            "multiword names)"
        )
    return tokens[0]


def build_index(layout: "CorpusLayout", workers: int = 1) -> CorpusIndex:
    """Build every YearIndex, optionally fanning out one task per year shard.

    The merge is a plain sorted-dict assembly, so the result is identical for
    any worker count.
    """
    from .corpus import read_document

    by_year: dict[int, list] = {}
    for entry in layout.entries:
        by_year.setdefault(entry.year, []).append(entry)

    def one_year(year: int) -> YearIndex:
        docs = [(e.doc_id, read_document(layout, e)) for e in by_year[year]]
        return build_year_index(year, docs)

    years_sorted = sorted(by_year)
    if workers <= 1 or len(years_sorted) <= 1:
        built = [one_year(y) for y in years_sorted]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            built = list(pool.map(one_year, years_sorted))
    return CorpusIndex({yi.year: yi for yi in built})


def save_index(index: CorpusIndex, out_dir: str | Path) -> list[Path]:
    """Write one .idx file per year; output bytes are fully deterministic."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for year in index.years():
        yi = index.year_index(year)
        assert yi is not None
        lines = [f"{FORMAT_MAGIC} {FORMAT_VERSION}"]
        lines.append(f"year\t{yi.year}")
        lines.append(f"docs\t{yi.doc_count}")
        lines.append(f"tokens\t{yi.token_total}")
        for doc_id, n in zip(yi.doc_ids, yi.doc_token_counts):
            if "\t" in doc_id or "\n" in doc_id:
                raise DataError(f"doc_id {doc_id!r} cannot be serialized")
            lines.append(f"D\t{doc_id}\t{n}")
        for term in sorted(yi.postings):
            cells = []
            prev = None
            for ordinal, count in yi.postings[term]:
                gap = ordinal if prev is None else ordinal - prev
                cells.append(f"{gap}:{count}")
                prev = ordinal
            lines.append(f"T\t{term}\t{','.join(cells)}")
        path = out_dir / f"{year}.idx"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        written.append(path)
    return written


def load_index(in_dir: str | Path) -> CorpusIndex:
    """Read every ``<year>.idx`` file under in_dir back into a CorpusIndex."""
    in_dir = Path(in_dir)
    if not in_dir.is_dir():
        raise DataError(f"index directory {in_dir} does not exist")
    years: dict[int, YearIndex] = {}
    for path in sorted(in_dir.glob("*.idx")):
        yi = _parse_year_file(path)
        years[yi.year] = yi
    return CorpusIndex(years)


def _parse_year_file(path: Path) -> YearIndex:
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != f"{FORMAT_MAGIC} {FORMAT_VERSION}":
        raise DataError(f"{path}: not a version-{FORMAT_VERSION} {FORMAT_MAGIC} file")

    header: dict[str, int] = {}
    doc_ids: list[str] = []
    doc_token_counts: list[int] = []
    postings: dict[str, list[Posting]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        kind, _, rest = line.partition("\t")
        if kind in ("year", "docs", "tokens"):
            header[kind] = int(rest)
        elif kind == "D":
            doc_id, _, count = rest.partition("\t")
            doc_ids.append(doc_id)
            doc_token_counts.append(int(count))
        elif kind == "T":
            term, _, cells = rest.partition("\t")
            plist: list[Posting] = []
            ordinal = 0
            for i, cell in enumerate(cells.split(",")):
                gap, _, count = cell.partition(":")
                ordinal = int(gap) if i == 0 else ordinal + int(gap)
                plist.append((ordinal, int(count)))
            postings[term] = plist
        else:
            raise DataError(f"{path}:{lineno}: unexpected line {line!r}")

    for key in ("year", "docs", "tokens"):
        if key not in header:
            raise DataError(f"{path}: missing {key!r} header line")
    yi = YearIndex(
        year=header["year"],
        doc_ids=doc_ids,
        doc_token_counts=doc_token_counts,
        postings=postings,
    )
    if yi.doc_count != header["docs"] or yi.token_total != header["tokens"]:
        raise DataError(f"{path}: header totals disagree with the D lines")
    return yi
