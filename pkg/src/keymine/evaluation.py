"""Hand-alternation scoring of layouts against symbol streams."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .corpus import SymbolStream
from .layout import Layout


@dataclass(frozen=True)
class EvaluationReport:
    """Per-layout counters for one corpus.

    ``segments`` is the number of maximal runs of determined symbols (hand
    switches are only counted inside such a run); it is 0 for reports entered
    by hand from externally published results, where it is unknown.
    """

    layout_name: str
    hand_switching: int
    left_load: int
    right_load: int
    undetermined: int
    total_symbols: int
    segments: int = 0


@dataclass(frozen=True)
class ComparisonRow:
    layout_name: str
    hand_switching: int
    left_load: int
    right_load: int
    undetermined: int
    imbalance: int
    switching_rate: float | None


def evaluate(layout: Layout, stream: SymbolStream) -> EvaluationReport:
    """Count hand loads, unmapped symbols, and hand switches over the stream.

    A symbol without a key breaks adjacency exactly like a stream boundary:
    no switch is counted across it.
    """
    hand_by_symbol = {
        symbol: layout.geometry.hand_of(key_id)
        for symbol, key_id in layout.mapping.items()
    }
    left = right = undetermined = switching = segments = 0
    for seg in stream.segments:
        previous: str | None = None
        for ch in seg:
            hand = hand_by_symbol.get(ch)
            if hand is None:
                undetermined += 1
                previous = None
                continue
            if hand == "left":
                left += 1
            else:
                right += 1
            if previous is None:
                segments += 1
            elif hand != previous:
                switching += 1
            previous = hand
    return EvaluationReport(
        layout_name=layout.name,
        hand_switching=switching,
        left_load=left,
        right_load=right,
        undetermined=undetermined,
        total_symbols=stream.total_symbols,
        segments=segments,
    )


def compare(reports: Sequence[EvaluationReport]) -> list[ComparisonRow]:
    """Side-by-side rows with load imbalance and switching rate, order kept.

    The switching rate divides switches by the number of adjacent determined
    pairs, ``left + right - segments``; it is None when that is unknown or
    zero.
    """
    if not reports:
        raise ValueError("compare needs at least one report")
    rows = []
    for r in reports:
        pairs = r.left_load + r.right_load - r.segments
        rate = r.hand_switching / pairs if r.segments > 0 and pairs > 0 else None
        rows.append(
            ComparisonRow(
                layout_name=r.layout_name,
                hand_switching=r.hand_switching,
                left_load=r.left_load,
                right_load=r.right_load,
                undetermined=r.undetermined,
                imbalance=abs(r.left_load - r.right_load),
                switching_rate=rate,
            )
        )
    return rows


_COLUMNS = (
    "layout",
    "hand_switching",
    "left_load",
    "right_load",
    "undetermined",
    "imbalance",
    "switching_rate",
)


def _cells(row: ComparisonRow) -> tuple[str, ...]:
    rate = "n/a" if row.switching_rate is None else f"{row.switching_rate:.6f}"
    return (
        row.layout_name,
        str(row.hand_switching),
        str(row.left_load),
        str(row.right_load),
        str(row.undetermined),
        str(row.imbalance),
        rate,
    )


def format_comparison_tsv(rows: Sequence[ComparisonRow]) -> str:
    lines = ["\t".join(_COLUMNS)]
    lines.extend("\t".join(_cells(row)) for row in rows)
    return "\n".join(lines) + "\n"


def format_comparison_table(rows: Sequence[ComparisonRow]) -> str:
    """Aligned plain-text table with the same columns as the TSV export."""
    table = [_COLUMNS] + [_cells(row) for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(_COLUMNS))]
    rendered = []
    for line in table:
        rendered.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    return "\n".join(rendered) + "\n"
