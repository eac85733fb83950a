"""Command line interface.

One subcommand per operation; query subcommands print exactly the JSON the
HTTP API would return for the same query (or CSV with --format csv).

Exit codes: 0 success, 1 bad usage, 2 data or lookup errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .corpus import generate_synthetic, ingest_csv, load_layout
from .engine import CONFIG_ENV_VAR, QueryEngine, ServiceConfig
from .errors import ChronoscopeError, DataError
from .indexing import build_index, save_index
from .series import TrendSeries
from .trends import align, decade_range


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; keep 2 for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _year_arg(side: str):
    """Year values accept a plain year or a decade label like 1990s."""

    def parse(text: str) -> int:
        t = text.strip().lower()
        if t.endswith("s") and t[:-1].isdigit():
            try:
                first, last = decade_range(t)
            except ChronoscopeError as exc:
                raise argparse.ArgumentTypeError(str(exc))
            return first if side == "from" else last
        try:
            return int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a year: {text!r}")

    return parse


def _csv_list(text: str) -> list[str]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list")
    return items


def _engine_from_args(args) -> QueryEngine:
    if getattr(args, "corpus", None) is not None:
        config = ServiceConfig(corpus_root=Path(args.corpus))
        if getattr(args, "index_dir", None) is not None:
            config.index_dir = Path(args.index_dir)
    else:
        config = ServiceConfig.from_env_or_file(getattr(args, "config", None))
    return QueryEngine.from_config(config)


def _print_payload(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
        return
    if "series" in payload:
        series = [TrendSeries.from_json_dict(s) for s in payload["series"]]
        if len(series) == 1:
            sys.stdout.write(series[0].to_csv())
        else:
            sys.stdout.write(align(series).to_csv())
    elif "ranking" in payload:
        print("rank,canonical,count")
        for row in payload["ranking"]:
            print(f"{row['rank']},{row['canonical']},{row['count']}")
    elif "markers" in payload:
        print("rank,canonical,latitude,longitude,count")
        for row in payload["markers"]:
            print(
                f"{row['rank']},{row['canonical']},{row['latitude']},"
                f"{row['longitude']},{row['count']}"
            )
    else:
        raise DataError("this output has no CSV form; use --format json")


def _add_engine_opts(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config", help=f"service config JSON (default: ${CONFIG_ENV_VAR})"
    )
    parser.add_argument("--corpus", help="corpus root; shortcut for a default config")
    parser.add_argument("--index-dir", help="serialized index directory to load")


def _add_range_opts(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--from",
        dest="start",
        type=_year_arg("from"),
        help="first year, or a decade like 1990s (default: corpus coverage)",
    )
    parser.add_argument(
        "--to",
        dest="end",
        type=_year_arg("to"),
        help="last year, or a decade like 1990s (default: corpus coverage)",
    )


def _add_format_opt(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv"), default="json")


# -- commands ----------------------------------------------------------------


def cmd_ingest(args) -> int:
    column_map = {"date": args.col_date, "body": args.col_body}
    if args.col_authors:
        column_map["authors"] = args.col_authors
    if args.col_subjects:
        column_map["subjects"] = args.col_subjects
    layout, report = ingest_csv(args.csv, args.out, column_map)
    print(f"documents written: {report.documents}")
    print(f"tokens counted: {report.tokens}")
    reasons = ", ".join(f"{k}: {v}" for k, v in sorted(report.reasons.items()))
    print(f"rows skipped: {report.skipped}" + (f" ({reasons})" if reasons else ""))
    print(f"corpus root: {layout.root}")
    return 0


def cmd_synth(args) -> int:
    if args.start > args.end:
        raise DataError(f"year range is backwards: {args.start} > {args.end}")
    if args.vocab is not None:
        vocab_text = Path(args.vocab).read_text(encoding="utf-8")
    else:
        from .engine import _data_path

        vocab_text = _data_path("vocab", "demo_vocabulary.txt").read_text(encoding="utf-8")
    words = [
        line.strip()
        for line in vocab_text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    layout = generate_synthetic(
        args.out,
        seed=args.seed,
        years=range(args.start, args.end + 1),
        docs_per_year=args.docs_per_year,
        vocabulary=words,
    )
    print(f"documents written: {layout.doc_count}")
    print(f"corpus root: {layout.root}")
    return 0


def cmd_index(args) -> int:
    layout = load_layout(args.corpus)
    index = build_index(layout, workers=args.workers)
    paths = save_index(index, args.out)
    print(f"indexed {index.total_documents} documents, {index.total_tokens} tokens")
    print(f"wrote {len(paths)} year files to {args.out}")
    return 0


def cmd_trend(args) -> int:
    engine = _engine_from_args(args)
    payload = engine.trend(terms=args.terms, start=args.start, end=args.end, mode=args.mode)
    _print_payload(payload, args.format)
    return 0


def cmd_entity_trend(args) -> int:
    engine = _engine_from_args(args)
    payload = engine.trend(entities=args.entities, start=args.start, end=args.end)
    _print_payload(payload, args.format)
    return 0


def cmd_cooccur(args) -> int:
    engine = _engine_from_args(args)
    payload = engine.cooccur(
        args.a, args.b, start=args.start, end=args.end, entities=args.entities
    )
    _print_payload(payload, args.format)
    return 0


def cmd_group_trend(args) -> int:
    engine = _engine_from_args(args)
    payload = engine.group_cooccur(
        args.group, args.anchor, start=args.start, end=args.end, region=args.region
    )
    _print_payload(payload, args.format)
    return 0


def cmd_sentiment(args) -> int:
    engine = _engine_from_args(args)
    payload = engine.sentiment(view=args.view, start=args.start, end=args.end)
    _print_payload(payload, args.format)
    return 0


def cmd_top(args) -> int:
    engine = _engine_from_args(args)
    payload = engine.top(kind=args.kind, start=args.start, end=args.end, k=args.k)
    _print_payload(payload, args.format)
    return 0


def cmd_map_data(args) -> int:
    engine = _engine_from_args(args)
    payload = engine.map_payload(start=args.start, end=args.end, k=args.k)
    _print_payload(payload, args.format)
    return 0


def cmd_serve(args) -> int:
    engine = _engine_from_args(args)
    if args.host is not None:
        engine.config.host = args.host
    if args.port is not None:
        engine.config.port = args.port
    from .server import run_server  # deferred: pulls in uvicorn

    run_server(engine)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="chronoscope",
        description="Mine year-over-year trends from a dated document corpus.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("ingest", help="split a CSV export into a year-sharded corpus")
    p.add_argument("--csv", required=True, help="source CSV file")
    p.add_argument("--out", required=True, help="corpus root to create")
    p.add_argument("--col-date", required=True, help="column holding the date")
    p.add_argument("--col-body", required=True, help="column holding the text")
    p.add_argument("--col-authors", help="column holding author lists")
    p.add_argument("--col-subjects", help="column holding subject categories")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("synth", help="generate a small random corpus for exercising the tools")
    p.add_argument("--out", required=True, help="corpus root to create")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--from", dest="start", type=int, required=True, help="first year")
    p.add_argument("--to", dest="end", type=int, required=True, help="last year")
    p.add_argument("--docs-per-year", type=int, default=20)
    p.add_argument("--vocab", help="word/phrase list, one per line (default: bundled)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("index", help="build and serialize the per-year indexes")
    p.add_argument("--corpus", required=True, help="corpus root")
    p.add_argument("--out", required=True, help="directory for the .idx files")
    p.add_argument("--workers", type=int, default=1, help="parallel year shards")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("trend", help="yearly counts for keywords or multiword entity names")
    p.add_argument(
        "--terms",
        required=True,
        type=_csv_list,
        help="comma-separated; single tokens count keyword hits, multiword "
        "names count entity mentions",
    )
    p.add_argument("--mode", choices=("df", "tf"), default=None,
                   help="df: documents containing the term (default); tf: occurrences")
    _add_range_opts(p)
    _add_engine_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_trend)

    p = sub.add_parser("entity-trend", help="yearly mentioning-document counts for entities")
    p.add_argument(
        "--entities",
        required=True,
        type=_csv_list,
        help="comma-separated canonical names or aliases",
    )
    _add_range_opts(p)
    _add_engine_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_entity_trend)

    p = sub.add_parser("cooccur", help="documents per year containing both A and B")
    p.add_argument("--a", required=True, metavar="A")
    p.add_argument("--b", required=True, metavar="B")
    p.add_argument(
        "--entities",
        action="store_true",
        help="treat A and B as entity names even if single tokens",
    )
    _add_range_opts(p)
    _add_engine_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_cooccur)

    p = sub.add_parser("group-trend", help="anchor co-mentions summed over a group")
    p.add_argument("--group", required=True)
    p.add_argument("--anchor", required=True)
    p.add_argument("--region", help="restrict to one region of the group")
    _add_range_opts(p)
    _add_engine_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_group_trend)

    p = sub.add_parser("sentiment", help="lexicon word shares or per-article averages")
    p.add_argument("--view", choices=("percent", "per-article"), default="percent")
    _add_range_opts(p)
    _add_engine_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_sentiment)

    p = sub.add_parser("top", help="most-mentioned entities of a kind")
    p.add_argument("--kind", required=True)
    p.add_argument("-k", "--k", type=int, default=10)
    _add_range_opts(p)
    _add_engine_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_top)

    p = sub.add_parser("map-data", help="top countries with map coordinates")
    p.add_argument("-k", "--k", type=int, default=10)
    _add_range_opts(p)
    _add_engine_opts(p)
    _add_format_opt(p)
    p.set_defaults(func=cmd_map_data)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    _add_engine_opts(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ChronoscopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
