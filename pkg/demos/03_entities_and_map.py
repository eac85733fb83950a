"""Entities, groups and the country map: who gets talked about, with whom.

Runs the same query engine the CLI and HTTP service use, with the
bundled gazetteers, G20/OECD groups and country coordinates. Names
resolve through aliases, so "U.S." and "United States" are one entity.
"""

from demo_corpus import CORPUS_DIR, INDEX_DIR, ensure_corpus

from chronoscope.engine import QueryEngine, ServiceConfig

START, END = 1990, 2012


def main() -> None:
    ensure_corpus()
    engine = QueryEngine.from_config(ServiceConfig(corpus_root=CORPUS_DIR, index_dir=INDEX_DIR))
    print()

    # The anchor must sit outside the queried members, so a member country
    # is compared against the *other* regions of its own group.
    for region in ("Asia-Pacific", "Europe"):
        series = engine.group_cooccur("G20", "United States", START, END, region=region)["series"][0]
        total = sum(v for v in series["values"] if v)
        peak = max(series["values"], key=lambda v: v or 0)
        print(f"{series['label']}: {total} co-mentions, peak {peak}")
    print()

    payload = engine.map_payload(START, END, k=5)
    print(f"top countries {START}-{END}, ready for a map:")
    for m in payload["markers"]:
        print(
            f"  #{m['rank']} {m['canonical']:<15} {m['count']:>5} mentions "
            f"at ({m['latitude']}, {m['longitude']})"
        )


if __name__ == "__main__":
    main()
