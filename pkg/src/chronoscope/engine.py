"""Service configuration and the shared query engine.

The CLI and the HTTP API both call into QueryEngine and return its payload
dicts untouched, which is what keeps the two interfaces byte-for-byte
consistent. Payloads always carry schema_version so clients can detect
format drift.
"""

from __future__ import annotations

import difflib
import json
import logging
import os
from dataclasses import dataclass, field
from importlib.resources import files
from pathlib import Path

from .corpus import CorpusLayout, load_layout
from .entities import (
    Gazetteer,
    GroupDefinition,
    MentionIndex,
    comention_trend,
    entity_trend,
    group_comention,
    load_gazetteer,
    load_group,
)
from .errors import DataError, UnknownNameError
from .indexing import CorpusIndex, build_index, load_index
from .sentiment import (
    Lexicon,
    SentimentYearStats,
    load_lexicon,
    sentiment_by_year,
    sentiment_per_article,
    sentiment_percentages,
)
from .series import (
    MODE_DOC_COUNT,
    MODE_TOKEN_COUNT,
    SCHEMA_VERSION,
    ExternalSeries,
    TrendSeries,
)
from .tokenization import tokenize
from .trends import (
    cooccurrence_trend,
    keyword_trend,
    load_external_csv,
    load_geo_table,
    map_markers,
    top_entities,
    yoy_change,
)

log = logging.getLogger(__name__)

CONFIG_ENV_VAR = "CHRONOSCOPE_CONFIG"

SENTIMENT_VIEWS = ("percent", "per-article")
EXTERNAL_TRANSFORMS = ("yoy",)
TREND_MODES = {"df": MODE_DOC_COUNT, "tf": MODE_TOKEN_COUNT}

_CONFIG_KEYS = {
    "corpus_root",
    "index_dir",
    "lexicon",
    "gazetteers",
    "groups",
    "geo_table",
    "externals",
    "host",
    "port",
    "cors_origin",
}


def _data_path(*parts: str) -> Path:
    node = files("chronoscope").joinpath("data")
    for part in parts:
        node = node.joinpath(part)
    return Path(str(node))


def default_gazetteer_paths() -> list[Path]:
    return [
        _data_path("gazetteers", "countries.json"),
        _data_path("gazetteers", "companies.json"),
        _data_path("gazetteers", "people.json"),
    ]


def default_group_paths() -> list[Path]:
    return [_data_path("groups", "g20.json"), _data_path("groups", "oecd.json")]


@dataclass
class ServiceConfig:
    corpus_root: Path
    index_dir: Path | None = None
    lexicon: Path = field(default_factory=lambda: _data_path("lexicons", "basic.csv"))
    gazetteers: list[Path] = field(default_factory=default_gazetteer_paths)
    groups: list[Path] = field(default_factory=default_group_paths)
    geo_table: Path = field(default_factory=lambda: _data_path("geo", "country_centroids.csv"))
    externals: dict[str, Path] = field(
        default_factory=lambda: {"usa-gdp": _data_path("external", "usa_gdp.csv")}
    )
    host: str = "127.0.0.1"
    port: int = 8000
    cors_origin: str = "*"

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        """Read a JSON config; relative paths resolve against the file."""
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise DataError(f"config file not found: {path}")
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}: not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise DataError(f"{path}: config must be a JSON object")
        unknown = sorted(set(raw) - _CONFIG_KEYS)
        if unknown:
            raise DataError(f"{path}: unknown config keys: {', '.join(unknown)}")
        if "corpus_root" not in raw:
            raise DataError(f"{path}: corpus_root is required")
        base = path.parent

        def resolve(p) -> Path:
            p = Path(str(p))
            return p if p.is_absolute() else (base / p)

        cfg = cls(corpus_root=resolve(raw["corpus_root"]))
        if raw.get("index_dir") is not None:
            cfg.index_dir = resolve(raw["index_dir"])
        if "lexicon" in raw:
            cfg.lexicon = resolve(raw["lexicon"])
        if "gazetteers" in raw:
            if not isinstance(raw["gazetteers"], list):
                raise DataError(f"{path}: gazetteers must be a list of paths")
            cfg.gazetteers = [resolve(p) for p in raw["gazetteers"]]
        if "groups" in raw:
            if not isinstance(raw["groups"], list):
                raise DataError(f"{path}: groups must be a list of paths")
            cfg.groups = [resolve(p) for p in raw["groups"]]
        if "geo_table" in raw:
            cfg.geo_table = resolve(raw["geo_table"])
        if "externals" in raw:
            if not isinstance(raw["externals"], dict):
                raise DataError(f"{path}: externals must map names to paths")
            cfg.externals = {str(k): resolve(v) for k, v in raw["externals"].items()}
        if "host" in raw:
            cfg.host = str(raw["host"])
        if "port" in raw:
            if not isinstance(raw["port"], int) or isinstance(raw["port"], bool):
                raise DataError(f"{path}: port must be an integer")
            cfg.port = raw["port"]
        if "cors_origin" in raw:
            cfg.cors_origin = str(raw["cors_origin"])
        return cfg

    @classmethod
    def from_env_or_file(cls, explicit: str | Path | None) -> "ServiceConfig":
        if explicit is not None:
            return cls.from_file(explicit)
        env = os.environ.get(CONFIG_ENV_VAR)
        if env:
            return cls.from_file(env)
        raise DataError(
            f"no config given: pass --config or set {CONFIG_ENV_VAR}"
        )


class QueryEngine:
    """Loads every data source once, then answers queries as payload dicts."""

    def __init__(
        self,
        config: ServiceConfig,
        layout: CorpusLayout,
        index: CorpusIndex,
        gazetteer: Gazetteer,
        mentions: MentionIndex,
        groups: dict[str, GroupDefinition],
        lexicon: Lexicon,
        sentiment_stats: dict[int, SentimentYearStats],
        geo_table: dict[str, tuple[float, float]],
        externals: dict[str, ExternalSeries],
    ):
        self.config = config
        self.layout = layout
        self.index = index
        self.gazetteer = gazetteer
        self.mentions = mentions
        self.groups = groups
        self.lexicon = lexicon
        self.sentiment_stats = sentiment_stats
        self.geo_table = geo_table
        self.externals = externals

    @classmethod
    def from_config(cls, config: ServiceConfig) -> "QueryEngine":
        layout = load_layout(config.corpus_root)
        index = cls._load_or_build_index(config, layout)
        gazetteer = load_gazetteer(config.gazetteers)
        mentions = MentionIndex.build(layout, gazetteer)
        groups: dict[str, GroupDefinition] = {}
        for path in config.groups:
            group = load_group(path)
            if group.name in groups:
                raise DataError(f"group {group.name!r} is defined twice")
            groups[group.name] = group
        lexicon = load_lexicon(config.lexicon)
        stats = sentiment_by_year(index, lexicon)
        geo_table = load_geo_table(config.geo_table)
        externals = {
            name: load_external_csv(path, label=name)
            for name, path in sorted(config.externals.items())
        }
        return cls(
            config=config,
            layout=layout,
            index=index,
            gazetteer=gazetteer,
            mentions=mentions,
            groups=groups,
            lexicon=lexicon,
            sentiment_stats=stats,
            geo_table=geo_table,
            externals=externals,
        )

    @staticmethod
    def _load_or_build_index(config: ServiceConfig, layout: CorpusLayout) -> CorpusIndex:
        if config.index_dir is not None and any(Path(config.index_dir).glob("*.idx")):
            index = load_index(config.index_dir)
            if index.total_documents != layout.doc_count:
                raise DataError(
                    f"index at {config.index_dir} covers {index.total_documents} "
                    f"documents but the corpus has {layout.doc_count}; rebuild it"
                )
            return index
        log.info("no serialized index found; building in memory")
        return build_index(layout)

    # -- helpers -----------------------------------------------------------

    def _range(self, start: int | None, end: int | None) -> tuple[int, int]:
        if start is None or end is None:
            coverage = self.index.coverage()
            if coverage is None:
                raise DataError("corpus is empty; pass an explicit year range")
            start = coverage[0] if start is None else start
            end = coverage[1] if end is None else end
        if start > end:
            raise DataError(f"year range is backwards: {start} > {end}")
        return start, end

    @staticmethod
    def _series_payload(series_list: list[TrendSeries]) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "series": [s.to_json_dict() for s in series_list],
        }

    def _group(self, name: str) -> GroupDefinition:
        group = self.groups.get(name)
        if group is None:
            candidates = difflib.get_close_matches(name, list(self.groups), n=6, cutoff=0.3)
            raise UnknownNameError("group", name, candidates)
        return group

    # -- queries -----------------------------------------------------------

    def trend(
        self,
        terms: list[str] | None = None,
        entities: list[str] | None = None,
        start: int | None = None,
        end: int | None = None,
        mode: str | None = None,
    ) -> dict:
        """Trend series for terms and/or forced-entity names.

        Each element of `terms` routes by shape: a single token is a keyword
        counted in the text index, a multiword term is handed to the entity
        layer (the index is strictly unigram). `entities` skips the routing
        and always resolves against the gazetteer.
        """
        terms = terms or []
        entities = entities or []
        if not terms and not entities:
            raise DataError("no terms given")
        if mode is not None and mode not in TREND_MODES:
            raise DataError(f"mode must be df or tf, got {mode!r}")
        internal_mode = TREND_MODES[mode or "df"]
        start, end = self._range(start, end)
        series = []
        for term in terms:
            tokens = tokenize(term)
            if not tokens:
                raise DataError(f"term {term!r} has no tokens")
            if len(tokens) == 1:
                series.append(keyword_trend(self.index, term, start, end, internal_mode))
            else:
                if internal_mode == MODE_TOKEN_COUNT:
                    raise DataError(
                        f"mode tf applies to single-token terms; {term!r} is "
                        f"matched at the entity level, which counts documents"
                    )
                series.append(
                    entity_trend(self.mentions, self.gazetteer, term, start, end)
                )
        for name in entities:
            if mode == "tf":
                raise DataError("entity trends count documents; mode tf does not apply")
            series.append(entity_trend(self.mentions, self.gazetteer, name, start, end))
        return self._series_payload(series)

    def cooccur(
        self,
        a: str,
        b: str,
        start: int | None = None,
        end: int | None = None,
        entities: bool = False,
    ) -> dict:
        """Per-year count of documents containing both a and b.

        Single-token pairs intersect index postings; multiword pairs
        co-mention two gazetteer entities (aliases folded). `entities=True`
        forces the entity route for single-token names like "Japan".
        """
        start, end = self._range(start, end)
        if not entities:
            na, nb = len(tokenize(a)), len(tokenize(b))
            if na == 0 or nb == 0:
                raise DataError("both a and b need at least one token")
            if (na > 1) != (nb > 1):
                raise DataError(
                    "mixing a keyword with an entity name is not supported; "
                    "multiword names go to the entity layer together"
                )
            entities = na > 1
        if entities:
            series = comention_trend(self.mentions, self.gazetteer, a, b, start, end)
        else:
            series = cooccurrence_trend(self.index, a, b, start, end)
        return self._series_payload([series])

    def group_cooccur(
        self,
        group_name: str,
        anchor: str,
        start: int | None = None,
        end: int | None = None,
        region: str | None = None,
    ) -> dict:
        group = self._group(group_name)
        start, end = self._range(start, end)
        series = group_comention(
            self.mentions, self.gazetteer, group, anchor, start, end, region=region
        )
        return self._series_payload([series])

    def sentiment(
        self,
        view: str = "percent",
        start: int | None = None,
        end: int | None = None,
    ) -> dict:
        if view not in SENTIMENT_VIEWS:
            raise DataError(
                f"view must be one of {', '.join(SENTIMENT_VIEWS)}, got {view!r}"
            )
        start, end = self._range(start, end)
        build = sentiment_percentages if view == "percent" else sentiment_per_article
        pos, neg = build(self.sentiment_stats)
        return self._series_payload([pos.clip(start, end), neg.clip(start, end)])

    def external(
        self,
        name: str,
        transform: str | None = None,
        start: int | None = None,
        end: int | None = None,
    ) -> dict:
        if transform is not None and transform not in EXTERNAL_TRANSFORMS:
            raise DataError(f"transform must be yoy, got {transform!r}")
        ext = self.externals.get(name)
        if ext is None:
            candidates = difflib.get_close_matches(
                name, list(self.externals), n=6, cutoff=0.3
            )
            raise UnknownNameError("external series", name, candidates)
        series = yoy_change(ext) if transform == "yoy" else ext.to_trend_series()
        start = series.start if start is None else start
        end = series.end if end is None else end
        if start > end:
            raise DataError(f"year range is backwards: {start} > {end}")
        return self._series_payload([series.clip(start, end)])

    def top(
        self,
        kind: str,
        start: int | None = None,
        end: int | None = None,
        k: int = 10,
    ) -> dict:
        start, end = self._range(start, end)
        ranking = top_entities(self.mentions, self.gazetteer, kind, start, end, k)
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": kind,
            "from": start,
            "to": end,
            "ranking": [
                {"canonical": name, "count": count, "rank": rank}
                for rank, (name, count) in enumerate(ranking, start=1)
            ],
        }

    def map_payload(
        self,
        start: int | None = None,
        end: int | None = None,
        k: int = 10,
    ) -> dict:
        start, end = self._range(start, end)
        ranking = top_entities(self.mentions, self.gazetteer, "country", start, end, k)
        return {
            "schema_version": SCHEMA_VERSION,
            "from": start,
            "to": end,
            "markers": map_markers(ranking, self.geo_table),
        }

    def meta(self) -> dict:
        coverage = self.index.coverage()
        return {
            "schema_version": SCHEMA_VERSION,
            "years": None
            if coverage is None
            else {"from": coverage[0], "to": coverage[1]},
            "doc_count": self.layout.doc_count,
            "token_count": self.index.total_tokens,
            "entity_kinds": self.gazetteer.kinds(),
            "entity_counts": {
                kind: len(self.gazetteer.canonicals(kind))
                for kind in self.gazetteer.kinds()
            },
            "groups": [
                {
                    "name": g.name,
                    "members": list(g.members),
                    "regions": {r: list(ms) for r, ms in g.regions.items()},
                }
                for g in self.groups.values()
            ],
            "externals": sorted(self.externals),
            "sentiment_views": list(SENTIMENT_VIEWS),
            "lexicon": {
                "name": self.lexicon.source_name,
                "positive_words": len(self.lexicon.positive),
                "negative_words": len(self.lexicon.negative),
            },
        }
