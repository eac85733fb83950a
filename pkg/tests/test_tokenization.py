"""Word segmentation behavior, pinned examples first."""

import string

from hypothesis import given, strategies as st

import naive_oracle
from chronoscope.tokenization import segment_tokens, tokenize


def test_possessive_stays_attached():
    assert tokenize("USA's GDP grew") == ["usa's", "gdp", "grew"]


def test_hyphen_joins_and_punctuation_splits():
    assert tokenize("e-mail, e-mail.") == ["e-mail", "e-mail"]


def test_empty_and_whitespace():
    assert tokenize("") == []
    assert tokenize("   \t\n") == []


def test_case_preserved_only_by_segment():
    assert segment_tokens("Peter F. Drucker") == ["Peter", "F", "Drucker"]
    assert tokenize("Peter F. Drucker") == ["peter", "f", "drucker"]


def test_underscore_separates():
    assert tokenize("snake_case") == ["snake", "case"]


def test_leading_trailing_joiners_drop():
    assert tokenize("-dash 'quote' trail-") == ["dash", "quote", "trail"]


def test_curly_apostrophe():
    assert tokenize("company’s plan") == ["company’s", "plan"]


def test_numbers_kept():
    assert tokenize("GDP in 1992 rose 3.4%") == ["gdp", "in", "1992", "rose", "3", "4"]


text_strategy = st.text(
    alphabet=string.ascii_letters + string.digits + " .,'-_()\"!?:;\n\t",
    max_size=200,
)


@given(text_strategy)
def test_matches_character_scan_oracle(text):
    assert tokenize(text) == naive_oracle.tokens_of(text)
    assert segment_tokens(text) == naive_oracle.segment(text)


@given(text_strategy)
def test_tokens_rejoin_stably(text):
    toks = tokenize(text)
    assert tokenize(" ".join(toks)) == toks
    assert all(tok == tok.lower() for tok in toks)
    assert all(tok for tok in toks)
