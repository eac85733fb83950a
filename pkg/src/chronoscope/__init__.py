"""Year-over-year trend mining for dated document collections.

The library splits into a small pipeline: corpus (ingest + storage),
indexing (per-year inverted indexes), entities (gazetteer mentions),
sentiment (lexicon counting), trends (series assembly), and engine/cli/
server (query front doors).
"""

from .corpus import (
    CorpusLayout,
    DocumentRecord,
    IngestReport,
    generate_synthetic,
    ingest_csv,
    load_corpus,
    load_layout,
)
from .engine import QueryEngine, ServiceConfig
from .entities import (
    Entity,
    Gazetteer,
    GroupDefinition,
    MentionIndex,
    comention_trend,
    entity_trend,
    group_comention,
    load_gazetteer,
    load_group,
    match_entities,
)
from .errors import ChronoscopeError, DataError, UnknownNameError
from .indexing import CorpusIndex, YearIndex, build_index, load_index, save_index
from .sentiment import (
    Lexicon,
    SentimentYearStats,
    load_lexicon,
    sentiment_by_year,
    sentiment_per_article,
    sentiment_percentages,
)
from .series import AlignedTable, ExternalSeries, TrendSeries
from .tokenization import tokenize
from .trends import (
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

__version__ = "0.1.0"

__all__ = [
    "AlignedTable",
    "ChronoscopeError",
    "CorpusIndex",
    "CorpusLayout",
    "DataError",
    "DocumentRecord",
    "Entity",
    "ExternalSeries",
    "Gazetteer",
    "GroupDefinition",
    "IngestReport",
    "Lexicon",
    "MentionIndex",
    "QueryEngine",
    "SentimentYearStats",
    "ServiceConfig",
    "TrendSeries",
    "UnknownNameError",
    "YearIndex",
    "align",
    "build_index",
    "comention_trend",
    "cooccurrence_trend",
    "decade_range",
    "entity_trend",
    "generate_synthetic",
    "group_comention",
    "ingest_csv",
    "keyword_trend",
    "load_corpus",
    "load_external_csv",
    "load_gazetteer",
    "load_geo_table",
    "load_group",
    "load_index",
    "load_layout",
    "load_lexicon",
    "map_markers",
    "match_entities",
    "save_index",
    "sentiment_by_year",
    "sentiment_per_article",
    "sentiment_percentages",
    "tokenize",
    "top_entities",
    "yoy_change",
]
