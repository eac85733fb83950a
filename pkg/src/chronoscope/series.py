"""Trend series containers and their CSV/JSON wire formats.

Every analysis in the toolkit answers with a TrendSeries: a label, an
inclusive year range, one value (or null) per year, and a mode tag saying
how the values were computed. Null always means "no data for that year";
zero is a real measurement.

CSV form (round-trips through parse_series_csv):

    label,<label>
    mode,<mode>
    year,value
    1992,5
    1993,            <- empty cell encodes null

JSON form: {"label":..., "mode":..., "from":..., "to":..., "values":[...]}.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .errors import DataError

SCHEMA_VERSION = 1

MODE_DOC_COUNT = "doc_count"
MODE_TOKEN_COUNT = "token_count"
MODE_PERCENTAGE = "percentage"
MODE_RATE = "rate"
MODE_EXTERNAL = "external"
MODES = (MODE_DOC_COUNT, MODE_TOKEN_COUNT, MODE_PERCENTAGE, MODE_RATE, MODE_EXTERNAL)

_COUNT_MODES = (MODE_DOC_COUNT, MODE_TOKEN_COUNT)

Value = int | float | None


@dataclass
class TrendSeries:
    """(year -> value) over a contiguous inclusive range [start, end]."""

    label: str
    start: int
    end: int
    values: list[Value]
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise DataError(f"unknown series mode {self.mode!r}; expected one of {MODES}")
        if self.start > self.end:
            raise DataError(f"series year range [{self.start}, {self.end}] is empty")
        expected = self.end - self.start + 1
        if len(self.values) != expected:
            raise DataError(
                f"series {self.label!r} has {len(self.values)} values for "
                f"{expected} years [{self.start}, {self.end}]"
            )
        if self.mode in _COUNT_MODES:
            for v in self.values:
                if v is not None and (not isinstance(v, int) or isinstance(v, bool) or v < 0):
                    raise DataError(
                        f"series {self.label!r} ({self.mode}) has non-count value {v!r}"
                    )

    def years(self) -> list[int]:
        return list(range(self.start, self.end + 1))

    def value(self, year: int) -> Value:
        if not self.start <= year <= self.end:
            return None
        return self.values[year - self.start]

    def items(self) -> list[tuple[int, Value]]:
        return list(zip(self.years(), self.values))

    def clip(self, start: int, end: int) -> "TrendSeries":
        """Re-range the series to [start, end], padding missing years with null."""
        if start > end:
            raise DataError(f"year range [{start}, {end}] is empty")
        values = [self.value(y) for y in range(start, end + 1)]
        return TrendSeries(self.label, start, end, values, self.mode)

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "mode": self.mode,
            "from": self.start,
            "to": self.end,
            "values": list(self.values),
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "TrendSeries":
        return cls(
            label=payload["label"],
            start=payload["from"],
            end=payload["to"],
            values=list(payload["values"]),
            mode=payload["mode"],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", self.label])
        writer.writerow(["mode", self.mode])
        writer.writerow(["year", "value"])
        for year, value in self.items():
            writer.writerow([year, "" if value is None else value])
        return buf.getvalue()


def _parse_cell(cell: str, mode: str) -> Value:
    if cell == "":
        return None
    if mode in _COUNT_MODES:
        return int(cell)
    return float(cell)


def parse_series_csv(text: str) -> TrendSeries:
    """Inverse of TrendSeries.to_csv."""
    rows = list(csv.reader(io.StringIO(text)))
    if len(rows) < 3 or rows[0][:1] != ["label"] or rows[1][:1] != ["mode"]:
        raise DataError("not a trend-series CSV (expected label/mode preamble)")
    label = rows[0][1] if len(rows[0]) > 1 else ""
    mode = rows[1][1] if len(rows[1]) > 1 else ""
    if rows[2] != ["year", "value"]:
        raise DataError("trend-series CSV missing the year,value header row")
    years: list[int] = []
    values: list[Value] = []
    for row in rows[3:]:
        if not row:
            continue
        years.append(int(row[0]))
        values.append(_parse_cell(row[1] if len(row) > 1 else "", mode))
    if not years:
        raise DataError("trend-series CSV has no year rows")
    if years != list(range(years[0], years[0] + len(years))):
        raise DataError("trend-series CSV years are not contiguous ascending")
    return TrendSeries(label=label, start=years[0], end=years[-1], values=values, mode=mode)


@dataclass
class ExternalSeries:
    """A sparse externally-sourced series: at most one value per year."""

    label: str
    values: dict[int, float] = field(default_factory=dict)

    def years(self) -> list[int]:
        return sorted(self.values)

    def to_trend_series(self) -> TrendSeries:
        """Densify onto the [min, max] year range; gaps become null."""
        if not self.values:
            raise DataError(f"external series {self.label!r} is empty")
        years = self.years()
        start, end = years[0], years[-1]
        vals: list[Value] = [self.values.get(y) for y in range(start, end + 1)]
        return TrendSeries(self.label, start, end, vals, MODE_EXTERNAL)


@dataclass
class AlignedTable:
    """Several series laid out over one shared year range, column per series."""

    years: list[int]
    labels: list[str]
    columns: list[list[Value]]

    def rows(self) -> list[list[Value]]:
        return [[col[i] for col in self.columns] for i in range(len(self.years))]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["year", *self.labels])
        for i, year in enumerate(self.years):
            writer.writerow([year, *["" if c[i] is None else c[i] for c in self.columns]])
        return buf.getvalue()

    def to_json_dict(self) -> dict:
        return {
            "years": list(self.years),
            "series": [
                {"label": label, "values": list(col)}
                for label, col in zip(self.labels, self.columns)
            ],
        }


def parse_aligned_csv(text: str) -> AlignedTable:
    """Inverse of AlignedTable.to_csv; cells parse as int when possible."""

    def cell_value(cell: str) -> Value:
        if cell == "":
            return None
        try:
            return int(cell)
        except ValueError:
            return float(cell)

    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0][:1] != ["year"]:
        raise DataError("not an aligned-table CSV (expected a year,... header)")
    labels = rows[0][1:]
    years: list[int] = []
    columns: list[list[Value]] = [[] for _ in labels]
    for row in rows[1:]:
        if not row:
            continue
        years.append(int(row[0]))
        for i in range(len(labels)):
            cell = row[i + 1] if i + 1 < len(row) else ""
            columns[i].append(cell_value(cell))
    return AlignedTable(years=years, labels=labels, columns=columns)
