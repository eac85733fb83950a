"""Sentiment shares next to GDP growth: does the mood track the economy?

Positive and negative word shares per year, side by side with the
year-over-year change of the bundled USA GDP fixture series.
"""

from demo_corpus import CORPUS_DIR, INDEX_DIR, ensure_corpus

from chronoscope.engine import QueryEngine, ServiceConfig
from chronoscope.series import TrendSeries
from chronoscope.trends import align

START, END = 1995, 2005


def main() -> None:
    ensure_corpus()
    engine = QueryEngine.from_config(ServiceConfig(corpus_root=CORPUS_DIR, index_dir=INDEX_DIR))
    print()

    pos, neg = (TrendSeries.from_json_dict(s) for s in engine.sentiment(start=START, end=END)["series"])
    gdp = TrendSeries.from_json_dict(
        engine.external("usa-gdp", transform="yoy", start=START, end=END)["series"][0]
    )
    print(align([pos, neg, gdp]).to_csv(), end="")
    print()
    print("sentiment columns are shares of all tokens in a year (percent);")
    print("the GDP column is year-over-year percent change of fixture data.")


if __name__ == "__main__":
    main()
