"""N-gram tables over symbol streams, plus percentage and association metrics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .corpus import Alphabet, SymbolStream
from .errors import AbsentGramError, EmptyCorpusError

ORDERS = (1, 2, 3)


@dataclass(frozen=True)
class NgramTable:
    """Counts of overlapping n-symbol windows, none spanning a boundary.

    Grams are stored as length-``order`` strings; zero-count grams are
    absent, not stored.
    """

    order: int
    counts: dict[str, int]
    total: int

    def __post_init__(self) -> None:
        if self.order not in ORDERS:
            raise ValueError(f"order must be one of {ORDERS}, got {self.order}")
        for gram, count in self.counts.items():
            if len(gram) != self.order:
                raise ValueError(f"gram {gram!r} does not have length {self.order}")
            if count < 1:
                raise ValueError(f"gram {gram!r} has non-positive count {count}")
        if self.total != sum(self.counts.values()):
            raise ValueError("total does not equal the sum of counts")


@dataclass(frozen=True)
class DigramMetrics:
    """Count, support, and confidence (both in percent) for one ordered pair."""

    digram: tuple[str, str]
    count: int
    support: float
    confidence: float


def count_ngrams(stream: SymbolStream, order: int) -> NgramTable:
    """Count every length-``order`` window with stride 1, resetting at boundaries."""
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order}")
    counts: Counter[str] = Counter()
    for seg in stream.segments:
        for i in range(len(seg) - order + 1):
            counts[seg[i : i + order]] += 1
    return NgramTable(order, dict(counts), sum(counts.values()))


def merge_tables(tables: Iterable[NgramTable]) -> NgramTable:
    """Sum tables of one order (count merging is commutative and associative)."""
    tables = list(tables)
    if not tables:
        raise ValueError("no tables to merge")
    order = tables[0].order
    merged: Counter[str] = Counter()
    for table in tables:
        if table.order != order:
            raise ValueError("cannot merge tables of different orders")
        merged.update(table.counts)
    return NgramTable(order, dict(merged), sum(merged.values()))


def digram_metrics(
    digrams: NgramTable, monograms: NgramTable, pair: tuple[str, str]
) -> DigramMetrics:
    """Support and confidence of the ordered pair ``(x, y)``.

    Support is the pair's share of all adjacency events; confidence is the
    share of ``x`` occurrences followed by ``y``. Both are percentages.
    """
    if digrams.order != 2 or monograms.order != 1:
        raise ValueError("digram_metrics needs an order-2 and an order-1 table")
    if digrams.total == 0:
        raise EmptyCorpusError("digram table is empty")
    x, y = pair
    gram = x + y
    if gram not in digrams.counts:
        raise AbsentGramError(f"digram {gram!r} is not in the table")
    if x not in monograms.counts:
        raise AbsentGramError(f"monogram {x!r} is not in the table")
    count = digrams.counts[gram]
    return DigramMetrics(
        digram=(x, y),
        count=count,
        support=count / digrams.total * 100.0,
        confidence=count / monograms.counts[x] * 100.0,
    )


def top_k(
    monograms: NgramTable, k: int, alphabet: Alphabet
) -> list[tuple[str, int, float]]:
    """The ``k`` most frequent symbols as (symbol, count, percent) rows.

    Ties are broken by alphabet order, earlier position first. Fewer than
    ``k`` distinct symbols yield the full ranking with no padding.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    ranked = sorted(
        monograms.counts.items(), key=lambda kv: (-kv[1], alphabet.index(kv[0]))
    )
    return [(s, c, c / monograms.total * 100.0) for s, c in ranked[:k]]


def ranked_symbols(monograms: NgramTable, alphabet: Alphabet) -> list[str]:
    """All counted symbols in descending frequency order (full ranking)."""
    if not monograms.counts:
        return []
    return [s for s, _, _ in top_k(monograms, len(monograms.counts), alphabet)]


def format_frequency_tsv(table: NgramTable, alphabet: Alphabet) -> str:
    """TSV export: gram, count, percent; count-descending then alphabet order."""
    lines = ["gram\tcount\tpercent"]
    ranked = sorted(
        table.counts.items(), key=lambda kv: (-kv[1], alphabet.sort_key(kv[0]))
    )
    for gram, count in ranked:
        lines.append(f"{gram}\t{count}\t{count / table.total * 100.0:.6f}")
    return "\n".join(lines) + "\n"
