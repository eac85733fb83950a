"""Build a corpus, index it, and ask the first questions.

Walks the basic loop: synthetic corpus on disk, per-year indexes, then
document-frequency and token-frequency lookups for a few keywords.
"""

from demo_corpus import ensure_corpus

KEYWORDS = ["strategy", "computer", "internet", "crisis"]
SAMPLE_YEARS = [1975, 1985, 1995, 2005]


def main() -> None:
    layout, index = ensure_corpus()
    total = sum(index.token_total(y) for y in layout.years())
    print(f"tokens: {total}")
    print()

    header = "keyword".ljust(12) + "".join(f"{y:>10}" for y in SAMPLE_YEARS)
    print(header)
    print("-" * len(header))
    for word in KEYWORDS:
        cells = []
        for year in SAMPLE_YEARS:
            df = index.doc_frequency(word, year)
            tf = index.token_frequency(word, year)
            cells.append(f"{df}/{tf}".rjust(10))
        print(word.ljust(12) + "".join(cells))
    print()
    print("cells are docs/tokens; docs count each document once,")
    print("tokens count every occurrence.")


if __name__ == "__main__":
    main()
