"""Shared fixtures: tiny corpora, a compact gazetteer, a full service tree."""

from __future__ import annotations

import io
import json
import random
from pathlib import Path

import pytest

from chronoscope.corpus import CorpusLayout, ingest_csv
from chronoscope.entities import Entity, Gazetteer, GroupDefinition
from chronoscope.indexing import build_index
from chronoscope.sentiment import Lexicon

# (canonical, kind, aliases) in plain tuples so tests can hand the same data
# to the oracle without going through library types.
GAZETTEER_ROWS: list[tuple[str, str, list[str]]] = [
    ("United States", "country", ["USA", "U.S.", "United States of America"]),
    ("Japan", "country", []),
    ("Germany", "country", ["West Germany"]),
    ("New Zealand", "country", []),
    ("Zealandia", "country", ["Zealand"]),
    ("South Korea", "country", ["Korea", "Republic of Korea"]),
    ("China", "country", ["People's Republic of China"]),
    ("IBM", "company", ["I.B.M.", "International Business Machines"]),
    ("Ford", "company", ["Ford Motor Company"]),
    ("Apple", "company", []),
    ("Peter Drucker", "person", ["Peter F. Drucker", "Drucker"]),
    ("Peter Senge", "person", ["Peter M. Senge", "Senge"]),
    ("Michael Porter", "person", ["Porter"]),
]

POSITIVE_WORDS = ["good", "great", "growth", "success", "improve", "strong"]
NEGATIVE_WORDS = ["bad", "crisis", "failure", "decline", "weak", "risk"]

FILLER_WORDS = [
    "the", "a", "of", "market", "strategy", "management", "company", "team",
    "plan", "quarter", "board", "product", "customers", "value", "change",
    "internet", "computer", "leadership", "quality", "capital", "industry",
]

# Alias phrases sprinkled into random bodies so entity oracles see real work.
ENTITY_PHRASES = [
    "United States", "USA", "U.S.", "Japan", "Germany", "West Germany",
    "New Zealand", "Zealand", "Korea", "South Korea", "IBM", "I.B.M.",
    "Ford", "Apple", "Peter Drucker", "Peter F. Drucker", "Drucker",
    "Peter Senge", "Senge", "Porter", "People's Republic of China",
]


def make_gazetteer() -> Gazetteer:
    return Gazetteer(
        Entity(canonical, kind, tuple(aliases))
        for canonical, kind, aliases in GAZETTEER_ROWS
    )


def make_lexicon() -> Lexicon:
    return Lexicon(set(POSITIVE_WORDS), set(NEGATIVE_WORDS), "test")


def write_corpus(root, rows: list[tuple[int, str]]) -> CorpusLayout:
    """Build a corpus under `root` from (year, body) pairs via the CSV path."""
    buf = io.StringIO()
    buf.write("date,body\n")
    for year, body in rows:
        quoted = '"' + body.replace('"', '""') + '"'
        buf.write(f"{year}-06-01,{quoted}\n")
    buf.seek(0)
    layout, report = ingest_csv(buf, root, {"date": "date", "body": "body"})
    assert report.documents == len(rows), report.reasons
    return layout


def random_body(rng: random.Random, length: int | None = None) -> str:
    """A body mixing filler, sentiment words, and entity alias phrases."""
    parts: list[str] = []
    for _ in range(length if length is not None else rng.randint(8, 40)):
        roll = rng.random()
        if roll < 0.55:
            parts.append(rng.choice(FILLER_WORDS))
        elif roll < 0.70:
            parts.append(rng.choice(POSITIVE_WORDS + NEGATIVE_WORDS))
        else:
            parts.append(rng.choice(ENTITY_PHRASES))
    return " ".join(parts)


def random_corpus(root, rng: random.Random, max_years: int = 30, max_docs: int = 500):
    """Random small corpus; returns its CorpusLayout."""
    start = rng.randint(1930, 2000)
    span = rng.randint(1, max_years)
    rows: list[tuple[int, str]] = []
    budget = rng.randint(10, max_docs)
    for year in range(start, start + span):
        for _ in range(rng.randint(0, max(1, budget // span))):
            if len(rows) >= max_docs:
                break
            rows.append((year, random_body(rng)))
    if not rows:
        rows.append((start, random_body(rng)))
    return write_corpus(root, rows)


@pytest.fixture
def gazetteer() -> Gazetteer:
    return make_gazetteer()


@pytest.fixture
def lexicon() -> Lexicon:
    return make_lexicon()


@pytest.fixture
def g7_group() -> GroupDefinition:
    return GroupDefinition(
        name="Pacific Seven",
        members=("United States", "Japan", "Germany", "New Zealand",
                 "South Korea", "China", "IBM"),
        regions={
            "east": ("Japan", "South Korea", "China"),
            "west": ("United States", "Germany"),
        },
    )


@pytest.fixture
def small_layout(tmp_path) -> CorpusLayout:
    rows = [
        (1992, "the USA and Japan signed a trade plan"),
        (1992, "Japan grew while the market slowed"),
        (1993, "U.S. computer makers and Japan both invested"),
        (1993, "good growth for IBM and Ford this quarter"),
        (1994, "a bad quarter with crisis talk at I.B.M."),
    ]
    return write_corpus(tmp_path / "corpus", rows)


@pytest.fixture
def small_index(small_layout):
    return build_index(small_layout)


# -- a complete service tree shared by engine/CLI/HTTP tests -------------------


SERVICE_ROWS = [
    (1990, "good growth in Japan as IBM and the USA signed"),
    (1990, "the internet plan was bad"),
    (1991, "Japan and Germany and Apple grew the internet market"),
    (1991, "crisis at Ford in the United States"),
    (1992, "internet internet growth in New Zealand and Japan"),
    (1992, "Peter Drucker and Peter Senge wrote on management"),
]

SERVICE_GROUP = {
    "name": "Pacific Five",
    "members": ["Japan", "South Korea", "China", "United States", "Germany"],
    "regions": {
        "east": ["Japan", "South Korea", "China"],
        "west": ["United States", "Germany"],
    },
}

GEO_ROWS = [
    ("United States", 39.8, -98.6),
    ("Japan", 36.2, 138.3),
    ("Germany", 51.2, 10.5),
    ("New Zealand", -41.5, 172.8),
    ("Zealandia", -42.0, 170.0),
    ("South Korea", 36.5, 127.8),
    ("China", 35.0, 103.0),
]

# geometric 10%/year so year-over-year change is a known constant
GDP_ROWS = [(1989, 100.0), (1990, 110.0), (1991, 121.0), (1992, 133.1), (1993, 146.41)]


def write_service_tree(base: Path) -> Path:
    """Materialize corpus + every config-referenced file; returns config path."""
    write_corpus(base / "corpus", SERVICE_ROWS)
    conf = base / "conf"
    conf.mkdir()
    (conf / "gazetteer.json").write_text(
        json.dumps(
            [
                {"canonical": c, "kind": k, "aliases": a}
                for c, k, a in GAZETTEER_ROWS
            ],
            indent=1,
        )
    )
    (conf / "group.json").write_text(json.dumps(SERVICE_GROUP, indent=1))
    lex_rows = ["word,polarity"]
    lex_rows += [f"{w},positive" for w in POSITIVE_WORDS]
    lex_rows += [f"{w},negative" for w in NEGATIVE_WORDS]
    (conf / "lexicon.csv").write_text("\n".join(lex_rows) + "\n")
    (conf / "geo.csv").write_text(
        "name,latitude,longitude\n"
        + "".join(f"{n},{lat},{lon}\n" for n, lat, lon in GEO_ROWS)
    )
    (conf / "gdp.csv").write_text(
        "year,value\n" + "".join(f"{y},{v}\n" for y, v in GDP_ROWS)
    )
    config = {
        "corpus_root": "corpus",
        "gazetteers": ["conf/gazetteer.json"],
        "groups": ["conf/group.json"],
        "lexicon": "conf/lexicon.csv",
        "geo_table": "conf/geo.csv",
        "externals": {"usa-gdp": "conf/gdp.csv"},
    }
    path = base / "config.json"
    path.write_text(json.dumps(config, indent=1))
    return path


@pytest.fixture(scope="session")
def service_config_path(tmp_path_factory) -> Path:
    return write_service_tree(tmp_path_factory.mktemp("service"))


@pytest.fixture(scope="session")
def engine(service_config_path):
    from chronoscope.engine import QueryEngine, ServiceConfig

    return QueryEngine.from_config(ServiceConfig.from_file(service_config_path))


@pytest.fixture(scope="session")
def client(engine):
    from fastapi.testclient import TestClient

    from chronoscope.server import create_app

    return TestClient(create_app(engine), raise_server_exceptions=False)
