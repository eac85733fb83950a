"""Keyword trends, year-over-year changes, rankings, and map payloads."""

import logging
import random

import pytest

from chronoscope.entities import MentionIndex
from chronoscope.errors import DataError
from chronoscope.indexing import build_index
from chronoscope.series import MODE_DOC_COUNT, MODE_TOKEN_COUNT, ExternalSeries, TrendSeries
from chronoscope.trends import (
    align,
    cooccurrence_trend,
    decade_range,
    keyword_trend,
    load_external_csv,
    load_geo_table,
    map_markers,
    top_entities,
    yoy_change,
)
from conftest import make_gazetteer, write_corpus


def test_keyword_trend_counts(small_index):
    series = keyword_trend(small_index, "Japan")
    assert series.label == "japan"
    assert series.mode == MODE_DOC_COUNT
    assert series.items() == [(1992, 2), (1993, 1), (1994, 0)]
    tf = keyword_trend(small_index, "japan", mode=MODE_TOKEN_COUNT)
    assert tf.items() == [(1992, 2), (1993, 1), (1994, 0)]


def test_keyword_trend_gap_years_are_null(tmp_path):
    layout = write_corpus(tmp_path, [(1990, "alpha"), (1993, "alpha beta")])
    index = build_index(layout)
    series = keyword_trend(index, "alpha", 1989, 1994)
    assert series.items() == [
        (1989, None), (1990, 1), (1991, None), (1992, None), (1993, 1), (1994, None),
    ]


def test_keyword_trend_rejects_bad_input(small_index):
    with pytest.raises(DataError):
        keyword_trend(small_index, "two words")
    with pytest.raises(DataError, match="backwards"):
        keyword_trend(small_index, "japan", 1999, 1990)
    with pytest.raises(DataError, match="doc_count or token_count"):
        keyword_trend(small_index, "japan", mode="percentage")


def test_cooccurrence_trend(small_index):
    series = cooccurrence_trend(small_index, "USA", "Japan")
    assert series.label == "usa & japan"
    assert series.items() == [(1992, 1), (1993, 0), (1994, 0)]


def test_yoy_change_basics():
    series = ExternalSeries("gdp", {2000: 100.0, 2001: 110.0, 2002: 99.0})
    change = yoy_change(series)
    assert change.label == "gdp yoy %"
    assert change.start == 2001 and change.end == 2002
    assert abs(change.value(2001) - 10.0) < 1e-9
    assert abs(change.value(2002) - -10.0) < 1e-9


def test_yoy_change_gaps_stay_null():
    change = yoy_change(ExternalSeries("x", {2000: 1.0, 2001: 2.0, 2003: 4.0}))
    assert change.value(2001) == 100.0
    assert change.value(2002) is None  # no 2002 value
    assert change.value(2003) is None  # no 2002 predecessor


def test_yoy_change_zero_predecessor_is_null_and_logged(caplog):
    with caplog.at_level(logging.WARNING):
        change = yoy_change(ExternalSeries("x", {2000: 0.0, 2001: 5.0}))
    assert change.value(2001) is None
    assert any("undefined" in r.message for r in caplog.records)


def test_yoy_change_needs_consecutive_years():
    with pytest.raises(DataError, match="two years"):
        yoy_change(ExternalSeries("x", {2000: 1.0}))
    with pytest.raises(DataError, match="consecutive"):
        yoy_change(ExternalSeries("x", {2000: 1.0, 2005: 2.0}))


def test_yoy_change_constant_ratio_is_constant_percent():
    values = {y: 100.0 * (1.03 ** (y - 1990)) for y in range(1990, 2011)}
    change = yoy_change(ExternalSeries("g", values))
    for v in change.values:
        assert abs(v - 3.0) < 1e-9


def test_align_pads_and_orders():
    a = TrendSeries("a", 1990, 1992, [1, 2, 3], MODE_DOC_COUNT)
    b = TrendSeries("b", 1991, 1993, [9, 8, 7], MODE_DOC_COUNT)
    table = align([a, b])
    assert table.years == [1990, 1991, 1992, 1993]
    assert table.labels == ["a", "b"]
    assert table.columns == [[1, 2, 3, None], [None, 9, 8, 7]]
    narrowed = align([a, b], 1991, 1991)
    assert narrowed.years == [1991]
    assert narrowed.columns == [[2], [9]]
    with pytest.raises(DataError):
        align([])


def test_align_never_invents_values():
    rng = random.Random(77)
    for _ in range(25):
        start = rng.randint(1950, 1990)
        n = rng.randint(1, 12)
        values = [rng.choice([None, rng.randint(0, 9)]) for _ in range(n)]
        s = TrendSeries("s", start, start + n - 1, values, MODE_DOC_COUNT)
        lo, hi = start - rng.randint(0, 4), start + n - 1 + rng.randint(0, 4)
        table = align([s], lo, hi)
        for year, row in zip(table.years, table.rows()):
            assert row[0] == s.value(year)


def top_fixture(tmp_path):
    rows = [
        (1990, "Japan and Germany and Japan again"),
        (1990, "Japan alone"),
        (1991, "Germany and the USA"),
        (1991, "Germany and IBM"),
    ]
    layout = write_corpus(tmp_path, rows)
    gaz = make_gazetteer()
    return MentionIndex.build(layout, gaz), gaz


def test_top_entities_ranking(tmp_path):
    index, gaz = top_fixture(tmp_path)
    # Japan 2 docs, Germany 3, United States 1; ties break alphabetically
    assert top_entities(index, gaz, "country") == [
        ("Germany", 3), ("Japan", 2), ("United States", 1),
    ]
    assert top_entities(index, gaz, "country", k=2) == [("Germany", 3), ("Japan", 2)]
    assert top_entities(index, gaz, "country", 1991, 1991) == [
        ("Germany", 2), ("United States", 1),
    ]
    assert top_entities(index, gaz, "company") == [("IBM", 1)]
    assert top_entities(index, gaz, "person") == []


def test_top_entities_k_prefix_property(tmp_path):
    index, gaz = top_fixture(tmp_path)
    for k in range(1, 6):
        assert top_entities(index, gaz, "country", k=k) == top_entities(
            index, gaz, "country", k=k + 1
        )[:k]


def test_top_entities_rejects_bad_args(tmp_path):
    index, gaz = top_fixture(tmp_path)
    with pytest.raises(DataError, match="at least 1"):
        top_entities(index, gaz, "country", k=0)
    with pytest.raises(DataError, match="unknown entity kind"):
        top_entities(index, gaz, "planet")


def test_geo_table_and_markers(tmp_path):
    path = tmp_path / "geo.csv"
    path.write_text(
        "name,latitude,longitude\n# comment\nJapan,36.0,138.0\nGermany,51.0,9.0\n"
    )
    table = load_geo_table(path)
    assert table["Japan"] == (36.0, 138.0)
    markers = map_markers([("Germany", 3), ("Japan", 2)], table)
    assert markers == [
        {"canonical": "Germany", "latitude": 51.0, "longitude": 9.0, "count": 3, "rank": 1},
        {"canonical": "Japan", "latitude": 36.0, "longitude": 138.0, "count": 2, "rank": 2},
    ]


def test_map_markers_missing_name_is_hard_error(tmp_path):
    path = tmp_path / "geo.csv"
    path.write_text("Japan,36.0,138.0\n")
    with pytest.raises(DataError, match="Atlantis"):
        map_markers([("Atlantis", 5)], load_geo_table(path))


def test_geo_table_validation(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("Japan,999,0\n")
    with pytest.raises(DataError, match="out of range"):
        load_geo_table(bad)
    dup = tmp_path / "dup.csv"
    dup.write_text("Japan,36,138\nJapan,36,138\n")
    with pytest.raises(DataError, match="duplicate"):
        load_geo_table(dup)


def test_load_external_csv(tmp_path):
    path = tmp_path / "gdp.csv"
    path.write_text("# fixture\nyear,value\n2001,2.5\n2000,1.5\n")
    series = load_external_csv(path)
    assert series.label == "gdp"
    assert series.years() == [2000, 2001]
    assert series.values[2001] == 2.5
    named = load_external_csv(path, label="usa-gdp")
    assert named.label == "usa-gdp"


def test_load_external_csv_rejects_bad_rows(tmp_path):
    dup = tmp_path / "dup.csv"
    dup.write_text("2000,1\n2000,2\n")
    with pytest.raises(DataError, match="twice"):
        load_external_csv(dup)
    bad = tmp_path / "bad.csv"
    bad.write_text("abcd,1\n")
    with pytest.raises(DataError, match="bad year"):
        load_external_csv(bad)
    empty = tmp_path / "empty.csv"
    empty.write_text("# nothing\n")
    with pytest.raises(DataError, match="no data"):
        load_external_csv(empty)


def test_decade_range():
    assert decade_range("1990s") == (1990, 1999)
    assert decade_range(" 2000S ") == (2000, 2009)
    for bad in ("1990", "199s", "1995s", "90s", "nineties"):
        with pytest.raises(DataError):
            decade_range(bad)
