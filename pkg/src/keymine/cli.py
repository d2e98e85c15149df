"""Command-line pipeline: analyze, mine, optimize, evaluate."""

from __future__ import annotations

import argparse
import sys
from math import ceil
from pathlib import Path

from . import apriori
from .corpus import load_corpus
from .errors import KeymineError
from .evaluation import compare, evaluate, format_comparison_table, format_comparison_tsv
from .geometry import builtin_geometry, format_geometry_json
from .layout import (
    ASSOCIATION_MODES,
    DECISION_POLICIES,
    assign_positions,
    format_layout_json,
    partition_letters,
    read_layout,
)
from .ngrams import count_ngrams, format_frequency_tsv, ranked_symbols, top_k
from .validation import as_alphabet, as_geometry, check_percent

EXAMPLE_TRANSACTIONS = """\
# Nine-transaction example database for the mine command.
# One transaction per line, items whitespace-separated.
1 2 5
2 4
2 3
1 2 4
1 3
2 3
1 3
1 2 3 5
1 2 3
"""


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _write_outputs(out_dir: Path, outputs: dict[str, str]) -> None:
    """Write every output or none: partial results are removed on failure."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    try:
        for name, text in outputs.items():
            path = out_dir / name
            written.append(path)
            path.write_text(text, encoding="utf-8", newline="\n")
    except BaseException:
        for path in written:
            path.unlink(missing_ok=True)
        raise


def _load_stream(args):
    alphabet = as_alphabet(None if args.alphabet == "builtin" else args.alphabet)
    stream = load_corpus(args.corpus, alphabet, normalize=not args.no_normalize)
    return alphabet, stream


def _parse_min_support(text: str, db_size: int) -> int:
    try:
        if text.endswith("%"):
            percent = check_percent(float(text[:-1]), "min support")
            return max(1, ceil(percent / 100.0 * db_size))
        count = int(text)
    except ValueError as exc:
        raise ValueError(f"min support must be a count or a percentage: {exc}") from exc
    if count < 1:
        raise ValueError(f"min support count must be at least 1, got {count}")
    return count


def _format_top_monograms(rows) -> str:
    table = [("letter", "count", "percent")]
    table += [(s, str(c), f"{p:.6f}") for s, c, p in rows]
    widths = [max(len(r[i]) for r in table) for i in range(3)]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in table
    ]
    return "\n".join(lines) + "\n"


def _format_trace(partition) -> str:
    lines = ["symbol\tleft_support\tleft_confidence\tright_support\tright_confidence\thand"]
    for d in partition.trace:
        lines.append(
            f"{d.symbol}\t{d.left_support:.6f}\t{d.left_confidence:.6f}"
            f"\t{d.right_support:.6f}\t{d.right_confidence:.6f}\t{d.hand}"
        )
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    alphabet, stream = _load_stream(args)
    if stream.total_symbols == 0:
        _warn("corpus contains no in-alphabet symbols; tables will be empty")
    monograms = count_ngrams(stream, 1)
    outputs = {
        "monograms.tsv": format_frequency_tsv(monograms, alphabet),
        "digrams.tsv": format_frequency_tsv(count_ngrams(stream, 2), alphabet),
        "trigrams.tsv": format_frequency_tsv(count_ngrams(stream, 3), alphabet),
        "top-monograms.txt": _format_top_monograms(
            top_k(monograms, 10, alphabet) if monograms.counts else []
        ),
    }
    _write_outputs(Path(args.out), outputs)
    return 0


def cmd_mine(args) -> int:
    if args.transactions:
        raw = apriori.read_transaction_file(args.transactions)
        db, vocabulary = apriori.encode_transactions(raw)
    else:
        alphabet, stream = _load_stream(args)
        raw = [sorted(set(seg), key=alphabet.index) for seg in stream.segments]
        db, vocabulary = apriori.encode_transactions(raw, sort_key=alphabet.index)
    min_confidence = check_percent(args.min_confidence, "min confidence")
    if db:
        min_count = _parse_min_support(args.min_support, len(db))
        levels = apriori.mine_frequent(db, min_count)
        rules = apriori.generate_rules(levels, len(db), min_confidence)
    else:
        _warn("no transactions to mine; output files will be empty")
        levels, rules = [], []
    outputs = {
        "levels.tsv": apriori.format_levels_tsv(levels, vocabulary),
        "rules.tsv": apriori.format_rules_tsv(rules, vocabulary),
    }
    _write_outputs(Path(args.out), outputs)
    return 0


def cmd_optimize(args) -> int:
    alphabet, stream = _load_stream(args)
    geometry = as_geometry(args.geometry)
    monograms = count_ngrams(stream, 1)
    digrams = count_ngrams(stream, 2)
    ranking = ranked_symbols(monograms, alphabet)
    partition = partition_letters(
        ranking, digrams, monograms, mode=args.association, policy=args.policy
    )
    layout, unassigned = assign_positions(
        partition, geometry, monograms, alphabet, name=args.name
    )
    if unassigned:
        _warn(
            f"{len(unassigned)} symbol(s) did not fit on geometry "
            f"{geometry.name!r}: {' '.join(unassigned)}"
        )
    outputs = {
        "layout.json": format_layout_json(layout),
        "trace.tsv": _format_trace(partition),
    }
    _write_outputs(Path(args.out), outputs)
    return 0


def cmd_evaluate(args) -> int:
    _, stream = _load_stream(args)
    geometry = as_geometry(args.geometry) if args.geometry else None
    reports = []
    for layout_path in args.layouts:
        try:
            layout = read_layout(layout_path, geometry)
        except KeymineError as exc:
            raise KeymineError(f"cannot read layout {layout_path}: {exc}") from exc
        reports.append(evaluate(layout, stream))
    rows = compare(reports)
    table = format_comparison_table(rows)
    _write_outputs(
        Path(args.out),
        {"comparison.tsv": format_comparison_tsv(rows), "comparison.txt": table},
    )
    print(table, end="")
    return 0


def cmd_seed_fixtures(out_dir: str) -> int:
    outputs = {
        "example-transactions.txt": EXAMPLE_TRANSACTIONS,
        "test-2key.json": format_geometry_json(builtin_geometry("test-2key")),
    }
    _write_outputs(Path(out_dir), outputs)
    for name in outputs:
        print(Path(out_dir) / name)
    return 0


def _add_common(parser: argparse.ArgumentParser, corpus_required: bool) -> None:
    parser.add_argument(
        "--corpus",
        action="append",
        default=[],
        required=corpus_required,
        metavar="PATH",
        help="corpus file or directory; repeat the flag for more "
        "(directory contents are read in name order)",
    )
    parser.add_argument(
        "--alphabet",
        default="builtin",
        help="'builtin' for the bundled Bangla alphabet, or an alphabet file",
    )
    parser.add_argument(
        "--no-normalize",
        action="store_true",
        help="skip NFC composition before filtering",
    )
    parser.add_argument("--out", default=".", metavar="DIR", help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="keymine",
        description="Corpus-driven keyboard layout optimization via character "
        "association mining.",
    )
    parser.add_argument(
        "--seed-fixtures",
        metavar="DIR",
        help="write the bundled example transaction database and test geometry "
        "to DIR, then exit",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("analyze", help="count n-grams and export frequency tables")
    _add_common(p, corpus_required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mine", help="mine frequent itemsets and association rules")
    _add_common(p, corpus_required=False)
    p.add_argument(
        "--transactions",
        metavar="FILE",
        help="transaction file (one transaction per line); otherwise each "
        "boundary-delimited corpus run becomes a transaction",
    )
    p.add_argument(
        "--min-support",
        default="2",
        metavar="N|P%",
        help="absolute count, or percentage with a %% suffix (default 2)",
    )
    p.add_argument(
        "--min-confidence",
        type=float,
        default=0.0,
        metavar="PCT",
        help="rule confidence threshold in percent (default 0)",
    )
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("optimize", help="fit a layout to the corpus")
    _add_common(p, corpus_required=True)
    p.add_argument(
        "--geometry",
        default="default-3row",
        help="built-in geometry name or geometry file (default default-3row)",
    )
    p.add_argument("--association", choices=ASSOCIATION_MODES, default="directed")
    p.add_argument("--policy", choices=DECISION_POLICIES, default="strict")
    p.add_argument("--name", default="optimized", help="name for the fitted layout")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("evaluate", help="score layout files against the corpus")
    _add_common(p, corpus_required=True)
    p.add_argument("layouts", nargs="+", metavar="LAYOUT", help="layout files")
    p.add_argument(
        "--geometry",
        default=None,
        help="geometry file or built-in name used to resolve the layouts "
        "(default: resolve each layout's named geometry among the built-ins)",
    )
    p.set_defaults(func=cmd_evaluate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed_fixtures:
            return cmd_seed_fixtures(args.seed_fixtures)
        if not getattr(args, "func", None):
            parser.print_help(sys.stderr)
            return 2
        if args.command == "mine":
            if not (args.corpus or args.transactions):
                parser.error("mine needs --corpus or --transactions")
            if args.corpus and args.transactions:
                parser.error("mine takes --corpus or --transactions, not both")
        return args.func(args)
    except (KeymineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
