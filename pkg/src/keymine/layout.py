"""Greedy hand partitioning and frequency-to-effort key assignment.

The partition maximizes hand alternation: after seeding both hands from the
four most frequent symbols, each remaining symbol (in descending frequency
order) is compared against what each hand already holds. A symbol whose
cumulative support AND confidence toward the left hand strictly exceed its
sums toward the right hand goes RIGHT, so that the letters it is most often
typed next to sit on the other hand; every other case goes LEFT.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .corpus import Alphabet
from .errors import (
    GeometryError,
    InsufficientAlphabetError,
    LayoutFileError,
    MissingPathError,
)
from .geometry import KeyboardGeometry, builtin_geometry
from .ngrams import NgramTable

ASSOCIATION_MODES = ("directed", "symmetric")
DECISION_POLICIES = ("strict", "majority")


@dataclass(frozen=True)
class Decision:
    """Audit record for one placement: the four sums and the chosen hand."""

    symbol: str
    left_support: float
    left_confidence: float
    right_support: float
    right_confidence: float
    hand: str


@dataclass(frozen=True)
class HandPartition:
    left: tuple[str, ...]
    right: tuple[str, ...]
    trace: tuple[Decision, ...] = ()

    def __post_init__(self) -> None:
        overlap = set(self.left) & set(self.right)
        if overlap:
            raise ValueError(f"symbols on both hands: {sorted(overlap)}")
        if len(set(self.left)) != len(self.left) or len(set(self.right)) != len(self.right):
            raise ValueError("a hand lists a symbol twice")


@dataclass(frozen=True)
class Layout:
    """A symbol-to-key assignment over a geometry. One symbol per key."""

    name: str
    geometry: KeyboardGeometry
    mapping: dict[str, str]

    def __post_init__(self) -> None:
        used: set[str] = set()
        for symbol, key_id in self.mapping.items():
            if key_id not in self.geometry:
                raise LayoutFileError(
                    f"layout {self.name!r} maps {symbol!r} to unknown key {key_id!r}"
                )
            if key_id in used:
                raise LayoutFileError(f"layout {self.name!r} assigns key {key_id!r} twice")
            used.add(key_id)

    def hand_of(self, symbol: str) -> str | None:
        key_id = self.mapping.get(symbol)
        return None if key_id is None else self.geometry.hand_of(key_id)


def seed_partition(ranked: Sequence[str]) -> HandPartition:
    """Initial split: ranks 1 and 4 go right, ranks 2 and 3 go left."""
    if len(ranked) < 4:
        raise InsufficientAlphabetError(
            f"need at least 4 ranked symbols to seed a partition, got {len(ranked)}"
        )
    return HandPartition(left=(ranked[1], ranked[2]), right=(ranked[0], ranked[3]))


def cumulative_association(
    symbol: str,
    side: Sequence[str],
    digrams: NgramTable,
    monograms: NgramTable,
    *,
    mode: str = "directed",
) -> tuple[float, float]:
    """Summed support and confidence (percent) of ``symbol`` toward one hand.

    Directed mode sums the pairs ``symbol -> other`` for every symbol already
    on the side; absent digrams contribute zero. Symmetric mode additionally
    sums the reverse pairs ``other -> symbol`` (an experimental variant, not
    part of the reference rule).
    """
    if mode not in ASSOCIATION_MODES:
        raise ValueError(f"mode must be one of {ASSOCIATION_MODES}, got {mode!r}")
    support_sum = 0.0
    confidence_sum = 0.0
    own_count = monograms.counts.get(symbol, 0)
    for other in side:
        count = digrams.counts.get(symbol + other, 0)
        if count:
            support_sum += count / digrams.total * 100.0
            confidence_sum += count / own_count * 100.0
        if mode == "symmetric":
            reverse = digrams.counts.get(other + symbol, 0)
            if reverse:
                support_sum += reverse / digrams.total * 100.0
                confidence_sum += reverse / monograms.counts[other] * 100.0
    return support_sum, confidence_sum


def decide_hand(
    left_support: float,
    left_confidence: float,
    right_support: float,
    right_confidence: float,
    *,
    policy: str = "strict",
) -> str:
    """Choose a hand from the four cumulative sums.

    ``strict`` is the reference rule: RIGHT only when both left sums strictly
    exceed the right sums; mixed signals and exact ties go LEFT. ``majority``
    is an experimental variant that lets either comparison alone carry the
    decision when the other abstains (ties still go LEFT).
    """
    if policy == "strict":
        if left_support > right_support and left_confidence > right_confidence:
            return "right"
        return "left"
    if policy == "majority":
        right_votes = (left_support > right_support) + (left_confidence > right_confidence)
        left_votes = (right_support > left_support) + (right_confidence > left_confidence)
        return "right" if right_votes > left_votes else "left"
    raise ValueError(f"policy must be one of {DECISION_POLICIES}, got {policy!r}")


def partition_letters(
    ranked: Sequence[str],
    digrams: NgramTable,
    monograms: NgramTable,
    *,
    mode: str = "directed",
    policy: str = "strict",
) -> HandPartition:
    """Run the full greedy partition over the ranked symbol list.

    Sides grow as symbols are placed: each decision is made against every
    symbol distributed so far, not only the seeds. The trace records one
    entry per post-seed symbol.
    """
    seeds = seed_partition(ranked)
    left = list(seeds.left)
    right = list(seeds.right)
    trace: list[Decision] = []
    for symbol in ranked[4:]:
        left_support, left_confidence = cumulative_association(
            symbol, left, digrams, monograms, mode=mode
        )
        right_support, right_confidence = cumulative_association(
            symbol, right, digrams, monograms, mode=mode
        )
        hand = decide_hand(
            left_support, left_confidence, right_support, right_confidence, policy=policy
        )
        (right if hand == "right" else left).append(symbol)
        trace.append(
            Decision(symbol, left_support, left_confidence, right_support, right_confidence, hand)
        )
    return HandPartition(tuple(left), tuple(right), tuple(trace))


def assign_positions(
    partition: HandPartition,
    geometry: KeyboardGeometry,
    monograms: NgramTable,
    alphabet: Alphabet,
    *,
    name: str = "optimized",
) -> tuple[Layout, tuple[str, ...]]:
    """Within each hand, give the most frequent symbols the cheapest keys.

    Symbols sort by count descending (alphabet order breaking ties) and meet
    keys sorted base layer first, effort ascending, key id breaking ties.
    Symbols beyond the hand's key budget are returned as unassigned.
    """
    mapping: dict[str, str] = {}
    unassigned: list[str] = []
    for hand, symbols in (("left", partition.left), ("right", partition.right)):
        keys = geometry.hand_keys(hand)
        if symbols and not keys:
            raise GeometryError(f"geometry {geometry.name!r} has no keys for the {hand} hand")
        ordered = sorted(
            symbols, key=lambda s: (-monograms.counts.get(s, 0), alphabet.index(s))
        )
        for symbol, key in zip(ordered, keys):
            mapping[symbol] = key.key_id
        unassigned.extend(ordered[len(keys):])
    return Layout(name, geometry, mapping), tuple(unassigned)


def layout_to_dict(layout: Layout) -> dict:
    return {
        "name": layout.name,
        "geometry": layout.geometry.name,
        "mapping": [
            {"symbol": symbol, "key_id": key_id}
            for symbol, key_id in layout.mapping.items()
        ],
    }


def format_layout_json(layout: Layout) -> str:
    return json.dumps(layout_to_dict(layout), ensure_ascii=False, indent=2) + "\n"


def write_layout(layout: Layout, path: str | Path) -> None:
    Path(path).write_text(format_layout_json(layout), encoding="utf-8", newline="\n")


def layout_from_dict(data: object, geometry: KeyboardGeometry | None = None) -> Layout:
    if not isinstance(data, dict):
        raise LayoutFileError("layout must be a JSON object")
    name = data.get("name")
    geometry_name = data.get("geometry")
    entries = data.get("mapping")
    if not isinstance(name, str) or not isinstance(geometry_name, str):
        raise LayoutFileError("layout needs string 'name' and 'geometry' fields")
    if not isinstance(entries, list):
        raise LayoutFileError("layout needs a 'mapping' list")
    if geometry is None:
        try:
            geometry = builtin_geometry(geometry_name)
        except GeometryError as exc:
            raise LayoutFileError(
                f"layout {name!r} references geometry {geometry_name!r}, which is not "
                f"built in; pass the geometry explicitly"
            ) from exc
    elif geometry.name != geometry_name:
        raise LayoutFileError(
            f"layout {name!r} was written for geometry {geometry_name!r}, "
            f"not {geometry.name!r}"
        )
    mapping: dict[str, str] = {}
    for entry in entries:
        if not isinstance(entry, dict) or "symbol" not in entry or "key_id" not in entry:
            raise LayoutFileError(f"layout mapping entry malformed: {entry!r}")
        symbol, key_id = str(entry["symbol"]), str(entry["key_id"])
        if symbol in mapping:
            raise LayoutFileError(f"layout maps symbol {symbol!r} twice")
        mapping[symbol] = key_id
    return Layout(name, geometry, mapping)


def read_layout(path: str | Path, geometry: KeyboardGeometry | None = None) -> Layout:
    path = Path(path)
    if not path.exists():
        raise MissingPathError(f"layout file does not exist: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise LayoutFileError(f"{path} is not valid JSON: {exc}") from exc
    return layout_from_dict(data, geometry)
