"""Shared setup for the demo scripts: one synthetic corpus, built once.

The corpus lands under the system temp directory and is reused across
runs; delete the directory to force a rebuild. Everything is seeded, so
every run of every demo prints the same numbers.
"""

import tempfile
from importlib import resources
from pathlib import Path

from chronoscope.corpus import generate_synthetic, load_layout
from chronoscope.indexing import build_index, load_index, save_index

ROOT = Path(tempfile.gettempdir()) / "chronoscope-demo"
CORPUS_DIR = ROOT / "corpus"
INDEX_DIR = ROOT / "index"
SEED = 7
YEARS = range(1970, 2013)
DOCS_PER_YEAR = 40


def bundled_vocabulary() -> list[str]:
    text = (
        resources.files("chronoscope")
        .joinpath("data/vocab/demo_vocabulary.txt")
        .read_text(encoding="utf-8")
    )
    return [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]


def ensure_corpus():
    """Build (or reuse) the demo corpus and its serialized index."""
    if (CORPUS_DIR / "manifest.tsv").exists():
        layout = load_layout(CORPUS_DIR)
        index = load_index(INDEX_DIR)
    else:
        print(f"building demo corpus under {ROOT} ...")
        layout = generate_synthetic(
            CORPUS_DIR,
            seed=SEED,
            years=YEARS,
            docs_per_year=DOCS_PER_YEAR,
            vocabulary=bundled_vocabulary(),
        )
        index = build_index(layout, workers=4)
        save_index(index, INDEX_DIR)
    print(f"corpus: {layout.doc_count} documents, {layout.years()[0]}-{layout.years()[-1]}")
    return layout, index
