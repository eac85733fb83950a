"""Word segmentation shared by the index, the sentiment counter, and the
entity matcher.

A token is a maximal run of Unicode letters/digits; hyphens and apostrophes
(ASCII ' and U+2019) are kept when they sit between two such runs, so
"e-mail" and "USA's" stay single tokens while trailing punctuation is
dropped. Underscore is not a word character here.
"""

from __future__ import annotations

import re

# [^\W_] = \w minus underscore = Unicode letters and digits
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*", re.UNICODE)


def segment_tokens(text: str) -> list[str]:
    """Split text into tokens, preserving their original case."""
    return _TOKEN_RE.findall(text)


def tokenize(text: str) -> list[str]:
    """Split text into lowercased tokens; empty text gives an empty list."""
    return [t.lower() for t in _TOKEN_RE.findall(text)]
