"""Level-wise mining of frequent itemsets and strong association rules.

The classic candidate-generation algorithm: frequent (k-1)-itemsets are
joined with themselves, candidates with an infrequent subset are pruned,
and one database scan counts the survivors. Items are dense integer ids
inside this module; ``encode_transactions`` maps real item labels to ids at
the boundary, which gives the join step the total order it relies on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .errors import ItemsetSizeError, MissingPathError, RuleConsistencyError


@dataclass(frozen=True)
class Transaction:
    tid: int
    items: tuple[int, ...]

    def __post_init__(self) -> None:
        if list(self.items) != sorted(set(self.items)):
            raise ValueError(f"transaction items must be strictly ascending: {self.items}")


@dataclass(frozen=True)
class ItemSet:
    """A sorted itemset; ``support_count`` is None until a scan counts it."""

    items: tuple[int, ...]
    support_count: int | None = None

    def __post_init__(self) -> None:
        if not self.items or list(self.items) != sorted(set(self.items)):
            raise ValueError(f"itemset must be nonempty and strictly ascending: {self.items}")
        if self.support_count is not None and self.support_count < 0:
            raise ValueError("support_count cannot be negative")


@dataclass(frozen=True)
class AssociationRule:
    """antecedent => consequent with support and confidence in percent."""

    antecedent: tuple
    consequent: tuple
    support: float
    confidence: float

    def __post_init__(self) -> None:
        if not self.antecedent or not self.consequent:
            raise ValueError("rule sides must be nonempty")
        if set(self.antecedent) & set(self.consequent):
            raise ValueError("rule sides must be disjoint")


def _uniform_size(itemsets: Sequence[ItemSet], what: str) -> int:
    sizes = {len(s.items) for s in itemsets}
    if len(sizes) > 1:
        raise ItemsetSizeError(f"{what} mix itemset sizes {sorted(sizes)}")
    return sizes.pop() if sizes else 0


def generate_L1(db: Sequence[Transaction], min_support_count: int) -> list[ItemSet]:
    """Frequent 1-itemsets: items occurring in at least ``min_support_count`` transactions."""
    if min_support_count < 1:
        raise ValueError("min_support_count must be at least 1")
    counts: Counter[int] = Counter()
    for t in db:
        counts.update(t.items)
    return [
        ItemSet((item,), count)
        for item, count in sorted(counts.items())
        if count >= min_support_count
    ]


def apriori_join(l_prev: Sequence[ItemSet]) -> list[ItemSet]:
    """Join a frequent level with itself to produce the next candidate level.

    Two (k-1)-itemsets join when their first k-2 items agree and the first
    set's last item precedes the second's; the union is the k-candidate.
    Returned candidates are sorted lexicographically with counts unset.
    """
    _uniform_size(l_prev, "join inputs")
    itemsets = sorted(s.items for s in l_prev)
    seen: set[tuple[int, ...]] = set()
    out: list[ItemSet] = []
    for a, b in combinations(itemsets, 2):
        if a[:-1] == b[:-1]:  # a < b in the sorted list, so a[-1] < b[-1]
            candidate = a + (b[-1],)
            if candidate not in seen:
                seen.add(candidate)
                out.append(ItemSet(candidate))
    return out


def apriori_prune(
    candidates: Sequence[ItemSet], l_prev: Sequence[ItemSet]
) -> list[ItemSet]:
    """Drop candidates with any (k-1)-subset missing from the previous level.

    An infrequent set cannot gain frequency by adding an item, so such a
    candidate cannot be frequent and never reaches the database scan.
    """
    k = _uniform_size(candidates, "prune candidates")
    k_prev = _uniform_size(l_prev, "prune reference level")
    if candidates and l_prev and k != k_prev + 1:
        raise ItemsetSizeError(
            f"candidates of size {k} cannot be pruned against a level of size {k_prev}"
        )
    frequent = {s.items for s in l_prev}
    return [
        c
        for c in candidates
        if all(sub in frequent for sub in combinations(c.items, len(c.items) - 1))
    ]


def count_candidates(
    db: Sequence[Transaction], candidates: Sequence[ItemSet]
) -> list[ItemSet]:
    """One full scan: exact occurrence count for every candidate, zeros kept."""
    counts = [0] * len(candidates)
    membership = [frozenset(c.items) for c in candidates]
    for t in db:
        items = frozenset(t.items)
        for i, cand in enumerate(membership):
            if cand <= items:
                counts[i] += 1
    return [ItemSet(c.items, n) for c, n in zip(candidates, counts)]


def mine_frequent(
    db: Sequence[Transaction], min_support_count: int
) -> list[list[ItemSet]]:
    """All frequent levels L1..Lmax, each sorted lexicographically with counts."""
    levels: list[list[ItemSet]] = []
    current = generate_L1(db, min_support_count)
    while current:
        levels.append(current)
        candidates = apriori_prune(apriori_join(current), current)
        if not candidates:
            break
        counted = count_candidates(db, candidates)
        current = [s for s in counted if s.support_count >= min_support_count]
    return levels


def generate_rules(
    levels: Sequence[Sequence[ItemSet]],
    db_size: int,
    min_confidence_percent: float,
) -> list[AssociationRule]:
    """Emit A => F\\A for every frequent F and nonempty proper subset A that
    reaches the confidence threshold.

    Output order is deterministic: itemsets in level order, antecedents by
    (size, lexicographic) within each itemset.
    """
    if db_size <= 0:
        raise ValueError("db_size must be positive")
    counts = {s.items: s.support_count for level in levels for s in level}
    rules: list[AssociationRule] = []
    for level in levels:
        for itemset in level:
            if len(itemset.items) < 2:
                continue
            f_count = itemset.support_count
            for size in range(1, len(itemset.items)):
                for antecedent in combinations(itemset.items, size):
                    a_count = counts.get(antecedent)
                    if a_count is None:
                        raise RuleConsistencyError(
                            f"subset {antecedent} of {itemset.items} missing from levels"
                        )
                    confidence = f_count / a_count * 100.0
                    if confidence >= min_confidence_percent:
                        consequent = tuple(
                            i for i in itemset.items if i not in antecedent
                        )
                        rules.append(
                            AssociationRule(
                                antecedent=antecedent,
                                consequent=consequent,
                                support=f_count / db_size * 100.0,
                                confidence=confidence,
                            )
                        )
    return rules


def encode_transactions(
    raw_transactions: Iterable[Iterable[str]],
    sort_key: Callable[[str], object] | None = None,
) -> tuple[list[Transaction], list[str]]:
    """Map item labels to dense integer ids.

    Returns the encoded database and the vocabulary list (``vocabulary[id]``
    is the label). Ids follow sorted label order (or ``sort_key`` order), so
    identical input always encodes identically. Duplicate items within a
    transaction collapse to one.
    """
    raw = [tuple(items) for items in raw_transactions]
    labels = sorted({item for items in raw for item in items}, key=sort_key)
    ids = {label: i for i, label in enumerate(labels)}
    db = [
        Transaction(tid, tuple(sorted({ids[item] for item in items})))
        for tid, items in enumerate(raw)
    ]
    return db, labels


def decode_items(items: Iterable[int], vocabulary: Sequence[str]) -> tuple[str, ...]:
    return tuple(vocabulary[i] for i in items)


def read_transaction_file(path: str | Path) -> list[list[str]]:
    """One transaction per line, items whitespace-separated, ``#`` comments ignored."""
    path = Path(path)
    if not path.exists():
        raise MissingPathError(f"transaction file does not exist: {path}")
    raw: list[list[str]] = []
    for line in path.read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        raw.append(stripped.split())
    return raw


def format_levels_tsv(
    levels: Sequence[Sequence[ItemSet]], vocabulary: Sequence[str]
) -> str:
    """TSV export of frequent levels: size, comma-joined items, count."""
    lines = ["size\titems\tcount"]
    for level in levels:
        for itemset in level:
            items = ",".join(decode_items(itemset.items, vocabulary))
            lines.append(f"{len(itemset.items)}\t{items}\t{itemset.support_count}")
    return "\n".join(lines) + "\n"


def format_rules_tsv(
    rules: Sequence[AssociationRule], vocabulary: Sequence[str]
) -> str:
    """TSV export of rules: antecedent, consequent, support, confidence."""
    lines = ["antecedent\tconsequent\tsupport\tconfidence"]
    for rule in rules:
        antecedent = ",".join(decode_items(rule.antecedent, vocabulary))
        consequent = ",".join(decode_items(rule.consequent, vocabulary))
        lines.append(
            f"{antecedent}\t{consequent}\t{rule.support:.6f}\t{rule.confidence:.6f}"
        )
    return "\n".join(lines) + "\n"
