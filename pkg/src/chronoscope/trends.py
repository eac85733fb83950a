"""Trend construction and comparison helpers on top of the indexes.

Everything here returns TrendSeries or plain data structures; formatting
(CSV/JSON) lives in series.py and the service layer.
"""

from __future__ import annotations

import csv
import logging
from pathlib import Path

from .entities import Gazetteer, MentionIndex, MentionSource, _as_mention_index
from .errors import DataError
from .indexing import CorpusIndex, normalize_term
from .series import (
    MODE_DOC_COUNT,
    MODE_PERCENTAGE,
    MODE_TOKEN_COUNT,
    AlignedTable,
    ExternalSeries,
    TrendSeries,
    Value,
)

log = logging.getLogger(__name__)


def _index_year_range(
    index: CorpusIndex, start: int | None, end: int | None
) -> tuple[int, int]:
    if start is None or end is None:
        coverage = index.coverage()
        if coverage is None:
            raise DataError("corpus is empty; pass an explicit year range")
        start = coverage[0] if start is None else start
        end = coverage[1] if end is None else end
    if start > end:
        raise DataError(f"year range is backwards: {start} > {end}")
    return start, end


def decade_range(text: str) -> tuple[int, int]:
    """Expand a decade label like "1990s" to its year span (1990, 1999)."""
    label = text.strip().lower()
    if not label.endswith("s") or not label[:-1].isdigit() or len(label) != 5:
        raise DataError(f"not a decade label: {text!r} (expected e.g. 1990s)")
    start = int(label[:-1])
    if start % 10 != 0:
        raise DataError(f"decade label must end in 0s: {text!r}")
    return start, start + 9


def keyword_trend(
    index: CorpusIndex,
    term: str,
    start: int | None = None,
    end: int | None = None,
    mode: str = MODE_DOC_COUNT,
) -> TrendSeries:
    """Per-year document or occurrence counts for one token.

    Years inside the range but outside corpus coverage come back null;
    covered years where the term never appears are 0.
    """
    if mode not in (MODE_DOC_COUNT, MODE_TOKEN_COUNT):
        raise DataError(f"keyword trends support doc_count or token_count, not {mode!r}")
    term = normalize_term(term)
    start, end = _index_year_range(index, start, end)
    count = index.doc_frequency if mode == MODE_DOC_COUNT else index.token_frequency
    values: list[Value] = [
        count(term, y) if index.year_index(y) is not None else None
        for y in range(start, end + 1)
    ]
    return TrendSeries(term, start, end, values, mode)


def cooccurrence_trend(
    index: CorpusIndex,
    term_a: str,
    term_b: str,
    start: int | None = None,
    end: int | None = None,
) -> TrendSeries:
    """Documents per year containing both tokens (whole document window)."""
    a = normalize_term(term_a)
    b = normalize_term(term_b)
    start, end = _index_year_range(index, start, end)
    values: list[Value] = [
        index.cooccurrence(a, b, y) if index.year_index(y) is not None else None
        for y in range(start, end + 1)
    ]
    return TrendSeries(f"{a} & {b}", start, end, values, MODE_DOC_COUNT)


def yoy_change(series: ExternalSeries) -> TrendSeries:
    """Year-over-year percent change of an external series.

    change(y) = 100 * (v(y) - v(y-1)) / v(y-1). Years whose predecessor is
    missing yield null; a zero predecessor also yields null (logged), since
    the ratio is undefined.
    """
    years = series.years()
    if len(years) < 2:
        raise DataError(f"series {series.label!r} needs at least two years for changes")
    pairs = sum(1 for y in years if y - 1 in series.values)
    if pairs == 0:
        raise DataError(
            f"series {series.label!r} has no consecutive years; changes are undefined"
        )
    start, end = years[0] + 1, years[-1]
    values: list[Value] = []
    for y in range(start, end + 1):
        cur = series.values.get(y)
        prev = series.values.get(y - 1)
        if cur is None or prev is None:
            values.append(None)
        elif prev == 0:
            log.warning("%s: value in %d is 0; change for %d is undefined", series.label, y - 1, y)
            values.append(None)
        else:
            values.append(100.0 * (cur - prev) / prev)
    return TrendSeries(f"{series.label} yoy %", start, end, values, MODE_PERCENTAGE)


def align(series_list: list[TrendSeries], start: int | None = None, end: int | None = None) -> AlignedTable:
    """Clip several series to one shared year axis for side-by-side plots."""
    if not series_list:
        raise DataError("nothing to align")
    start = min(s.start for s in series_list) if start is None else start
    end = max(s.end for s in series_list) if end is None else end
    if start > end:
        raise DataError(f"year range is backwards: {start} > {end}")
    years = list(range(start, end + 1))
    clipped = [s.clip(start, end) for s in series_list]
    return AlignedTable(
        years=years,
        labels=[s.label for s in clipped],
        columns=[list(s.values) for s in clipped],
    )


def top_entities(
    source: MentionSource,
    gazetteer: Gazetteer,
    kind: str,
    start: int | None = None,
    end: int | None = None,
    k: int = 10,
) -> list[tuple[str, int]]:
    """Most-mentioned entities of a kind over a year range.

    Counts are mentioning-document totals summed over the range. Sorted by
    count descending, canonical ascending on ties; entities never mentioned
    in the range are left out.
    """
    index = _as_mention_index(source, gazetteer)
    if k < 1:
        raise DataError(f"k must be at least 1, got {k}")
    names = gazetteer.canonicals(kind)  # validates the kind
    if start is None or end is None:
        cov_start, cov_end = index.coverage()  # raises on an empty corpus
        start = cov_start if start is None else start
        end = cov_end if end is None else end
    if start > end:
        raise DataError(f"year range is backwards: {start} > {end}")
    counts = [(name, index.total_mentions(name, start, end)) for name in names]
    counts = [(name, n) for name, n in counts if n > 0]
    counts.sort(key=lambda pair: (-pair[1], pair[0]))
    return counts[:k]


# -- geography ---------------------------------------------------------------


def load_geo_table(path: str | Path) -> dict[str, tuple[float, float]]:
    """Country -> (latitude, longitude) from a name,lat,lon CSV."""
    path = Path(path)
    table: dict[str, tuple[float, float]] = {}
    with open(path, "r", encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if not row or row[0].lstrip().startswith("#"):
                continue
            if lineno == 1 and [c.strip().lower() for c in row[:3]] == ["name", "latitude", "longitude"]:
                continue
            if len(row) < 3:
                raise DataError(f"{path}:{lineno}: expected name,latitude,longitude")
            name = row[0].strip()
            try:
                lat, lon = float(row[1]), float(row[2])
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: bad coordinate in {row!r}") from exc
            if not (-90.0 <= lat <= 90.0 and -180.0 <= lon <= 180.0):
                raise DataError(f"{path}:{lineno}: coordinates out of range for {name!r}")
            if name in table:
                raise DataError(f"{path}:{lineno}: duplicate entry for {name!r}")
            table[name] = (lat, lon)
    if not table:
        raise DataError(f"{path}: no coordinates found")
    return table


def map_markers(
    ranking: list[tuple[str, int]], geo_table: dict[str, tuple[float, float]]
) -> list[dict]:
    """Attach coordinates to a ranking; every name must have coordinates.

    Silently dropping an uncharted country would make the map lie about
    the ranking, so a missing name is a hard error.
    """
    missing = [name for name, _ in ranking if name not in geo_table]
    if missing:
        raise DataError(
            "no coordinates for: " + ", ".join(missing) + "; extend the geo table"
        )
    return [
        {
            "canonical": name,
            "latitude": geo_table[name][0],
            "longitude": geo_table[name][1],
            "count": count,
            "rank": rank,
        }
        for rank, (name, count) in enumerate(ranking, start=1)
    ]


# -- external series ----------------------------------------------------------


def load_external_csv(path: str | Path, label: str | None = None) -> ExternalSeries:
    """Read a two-column year,value CSV into an ExternalSeries.

    Lines starting with # are comments; a literal year,value header row is
    skipped. Years may arrive in any order but must not repeat.
    """
    path = Path(path)
    values: dict[int, float] = {}
    with open(path, "r", encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if not row or row[0].lstrip().startswith("#"):
                continue
            if [c.strip().lower() for c in row[:2]] == ["year", "value"]:
                continue
            if len(row) < 2:
                raise DataError(f"{path}:{lineno}: expected year,value")
            try:
                year = int(row[0].strip())
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: bad year {row[0]!r}") from exc
            try:
                value = float(row[1].strip())
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: bad value {row[1]!r}") from exc
            if year in values:
                raise DataError(f"{path}:{lineno}: year {year} appears twice")
            values[year] = value
    if not values:
        raise DataError(f"{path}: no data rows")
    return ExternalSeries(label=label or path.stem, values=values)
