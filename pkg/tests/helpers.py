"""Shared fixtures and independent oracles for the test suite.

The oracles here are deliberately written as direct, single-pass or
exhaustive procedures so they never share code with the implementations
they check.
"""

from itertools import combinations

from keymine import BOUNDARY, Alphabet
from keymine.apriori import encode_transactions

# Nine-transaction example database used by the mining golden tests.
NINE_TRANSACTIONS = [
    ["1", "2", "5"],
    ["2", "4"],
    ["2", "3"],
    ["1", "2", "4"],
    ["1", "3"],
    ["2", "3"],
    ["1", "3"],
    ["1", "2", "3", "5"],
    ["1", "2", "3"],
]

# Six-letter corpus hand-built so that, after the a/d (right) and b/c (left)
# seeds, e associates only with the left seeds (via the eb/ec digrams) and f
# only with right-hand letters (via fa/fd). Hand-executing the greedy rule:
# e -> right, f -> left.
PARTITION_CORPUS = (
    "eb eb ec ec fa fd " + "a " * 9 + "b " * 6 + "c " * 5 + "d " * 5 + "e " + "f " * 2
).strip()
PARTITION_RIGHT = ("a", "d", "e")
PARTITION_LEFT = ("b", "c", "f")


def make_alphabet(letters: str, name: str = "test") -> Alphabet:
    return Alphabet(tuple(letters), name)


def encoded_nine_transactions():
    return encode_transactions(NINE_TRANSACTIONS)


def ngram_counts_oracle(events, order):
    """Count n-grams by scanning the event list directly."""
    counts = {}
    for i in range(len(events) - order + 1):
        window = events[i : i + order]
        if any(ev is BOUNDARY for ev in window):
            continue
        gram = "".join(window)
        counts[gram] = counts.get(gram, 0) + 1
    return counts


def frequent_levels_oracle(db, min_count):
    """Exhaustive miner: enumerate every subset of the item universe.

    Returns the same shape as mine_frequent: a list of levels, each a list
    of (items tuple, count), lexicographically sorted.
    """
    universe = sorted({item for t in db for item in t.items})
    levels = []
    for size in range(1, len(universe) + 1):
        level = []
        for items in combinations(universe, size):
            needed = set(items)
            count = sum(1 for t in db if needed <= set(t.items))
            if count >= min_count:
                level.append((items, count))
        if not level:
            break
        levels.append(level)
    return levels


def evaluation_oracle(events, hand_by_symbol):
    """Single pass over explicit events; undetermined symbols and boundaries
    both break adjacency."""
    left = right = undetermined = switching = segments = 0
    previous = None
    for ev in events:
        if ev is BOUNDARY:
            previous = None
            continue
        hand = hand_by_symbol.get(ev)
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
    return {
        "hand_switching": switching,
        "left_load": left,
        "right_load": right,
        "undetermined": undetermined,
        "segments": segments,
    }
