#!/usr/bin/env python3
"""Convert a General-Inquirer-style spreadsheet CSV into a word,polarity lexicon.

The spreadsheet carries dozens of category columns; only Entry, Positiv and
Negativ matter here. Words tagged with both polarities are dropped from the
output and reported, since raw polarity counting cannot use them.

Usage: python3 scripts/convert_gi_lexicon.py inquirerbasic.csv lexicon.csv
"""

import argparse
import sys

from chronoscope.errors import ChronoscopeError
from chronoscope.sentiment import convert_general_inquirer, load_lexicon


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("source", help="General Inquirer spreadsheet exported as CSV")
    parser.add_argument("dest", help="lexicon CSV to write (word,polarity)")
    args = parser.parse_args(argv)

    try:
        conflicted = convert_general_inquirer(args.source, args.dest)
        lexicon = load_lexicon(args.dest)
    except ChronoscopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.dest}: {len(lexicon.positive)} positive, {len(lexicon.negative)} negative")
    if conflicted:
        print(f"dropped {len(conflicted)} words tagged both ways: {', '.join(conflicted)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
