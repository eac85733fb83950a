"""Chart-ready keyword trends: rising technologies, aligned as CSV.

Produces the classic did-the-internet-displace-the-telephone table.
Feed the CSV to any plotting tool; nulls stay empty cells, not zeros.
"""

from demo_corpus import ensure_corpus

from chronoscope.trends import align, cooccurrence_trend, keyword_trend

TECH = ["telephone", "television", "computer", "internet"]
START, END = 1990, 2000


def main() -> None:
    _, index = ensure_corpus()
    print()

    series = [keyword_trend(index, word, START, END) for word in TECH]
    table = align(series)
    print(table.to_csv(), end="")
    print()

    pair = cooccurrence_trend(index, "internet", "strategy", START, END)
    print(f"documents mentioning both internet and strategy, {START}-{END}:")
    for year, value in pair.items():
        bar = "#" * (value or 0)
        print(f"  {year}  {str(value).rjust(3)}  {bar}")


if __name__ == "__main__":
    main()
