"""Acceptance suite: one test per exit criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria execute.
"""

import random
import time
from contextlib import contextmanager

import pytest

from keymine import (
    count_ngrams,
    decide_hand,
    evaluate,
    partition_letters,
    ranked_symbols,
    seed_partition,
    stream_from_texts,
)
from keymine.apriori import (
    Transaction,
    apriori_join,
    apriori_prune,
    count_candidates,
    generate_L1,
    mine_frequent,
)
from keymine.cli import main as cli_main
from keymine.geometry import builtin_geometry
from keymine.layout import assign_positions, cumulative_association
from keymine.ngrams import NgramTable

from helpers import (
    PARTITION_CORPUS,
    PARTITION_LEFT,
    PARTITION_RIGHT,
    encoded_nine_transactions,
    evaluation_oracle,
    frequent_levels_oracle,
    make_alphabet,
)


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"[FAIL] criterion {number}: {description}")
        raise
    print(f"[PASS] criterion {number}: {description}")


def as_pairs(level):
    return [(s.items, s.support_count) for s in level]


def test_criterion_1_miner_reproduces_worked_example_exactly():
    with criterion(1, "level-wise miner reproduces the nine-transaction example"):
        started = time.perf_counter()
        db, vocabulary = encoded_nine_transactions()
        assert vocabulary == ["1", "2", "3", "4", "5"]

        l1 = generate_L1(db, 2)
        assert as_pairs(l1) == [((0,), 6), ((1,), 7), ((2,), 6), ((3,), 2), ((4,), 2)]

        c2 = apriori_prune(apriori_join(l1), l1)
        c2_counts = dict(as_pairs(count_candidates(db, c2)))
        assert c2_counts == {
            (0, 1): 4, (0, 2): 4, (0, 3): 1, (0, 4): 2, (1, 2): 4,
            (1, 3): 2, (1, 4): 2, (2, 3): 0, (2, 4): 1, (3, 4): 0,
        }

        levels = mine_frequent(db, 2)
        assert as_pairs(levels[1]) == [
            ((0, 1), 4), ((0, 2), 4), ((0, 4), 2),
            ((1, 2), 4), ((1, 3), 2), ((1, 4), 2),
        ]

        c3 = apriori_prune(apriori_join(levels[1]), levels[1])
        assert [s.items for s in c3] == [(0, 1, 2), (0, 1, 4)]
        assert as_pairs(levels[2]) == [((0, 1, 2), 2), ((0, 1, 4), 2)]

        c4 = apriori_prune(apriori_join(levels[2]), levels[2])
        assert c4 == []
        assert len(levels) == 3
        assert time.perf_counter() - started < 1.0


def test_criterion_2_monogram_percentage_at_reference_scale():
    with criterion(2, "reference monogram rows invert to one total; percentage matches"):
        rows = [
            (74300, 9.039875), (45525, 5.538901), (41844, 5.091044),
            (37010, 4.502904), (31214, 3.797721), (28996, 3.527863),
            (28212, 3.432476), (21451, 2.609884), (18419, 2.240989),
            (17202, 2.092920),
        ]
        totals = [count / (percent / 100.0) for count, percent in rows]
        assert max(totals) - min(totals) <= 2.0
        total = round(sum(totals) / len(totals))
        assert total in (821913, 821914)

        counts = {"x": 74300, "y": total - 74300}
        table = NgramTable(1, counts, total)
        from keymine import top_k

        rows_out = top_k(table, 2, make_alphabet("xy"))
        percent = next(p for s, _, p in rows_out if s == "x")
        assert percent == pytest.approx(9.039875, abs=1e-4)


def test_criterion_3_cumulative_association_and_decision():
    with criterion(3, "cumulative sums match reference values; decision is RIGHT"):
        digrams = NgramTable(
            2, {"kl": 8316, "km": 4134, "kp": 8000, "kq": 3094, "zz": 798370}, 821914
        )
        monograms = NgramTable(1, {"k": 38291, "z": 1}, 38292)
        left = cumulative_association("k", ["l", "m"], digrams, monograms)
        right = cumulative_association("k", ["p", "q"], digrams, monograms)
        assert left[0] == pytest.approx(1.514757, abs=1e-6)
        assert left[1] == pytest.approx(32.514168, abs=1e-6)
        assert right[0] == pytest.approx(1.349776, abs=1e-6)
        assert right[1] == pytest.approx(28.972866, abs=1e-6)
        assert decide_hand(left[0], left[1], right[0], right[1]) == "right"


def test_criterion_4_seed_rule_property():
    with criterion(4, "seeds are right={rank1,rank4}, left={rank2,rank3} on random tables"):
        rng = random.Random(71)
        pool = [chr(c) for c in range(0x61, 0x7B)]
        checked = 0
        for _ in range(300):
            size = rng.randrange(1, 15)
            symbols = rng.sample(pool, size)
            counts = {s: rng.randrange(1, 500) for s in symbols}
            table = NgramTable(1, counts, sum(counts.values()))
            alphabet = make_alphabet("".join(sorted(pool)))
            ranked = ranked_symbols(table, alphabet)
            if len(ranked) < 4:
                continue
            partition = seed_partition(ranked)
            assert partition.right == (ranked[0], ranked[3])
            assert partition.left == (ranked[1], ranked[2])
            checked += 1
        assert checked >= 100


def test_criterion_5_evaluator_oracle_conservation_and_determinism(tmp_path):
    with criterion(5, "evaluator matches oracle, conserves loads, runs are byte-identical"):
        # (a) + (b): oracle equivalence and conservation on random streams
        from keymine.geometry import Key, KeyboardGeometry
        from keymine.layout import Layout

        geometry = KeyboardGeometry(
            "pair",
            (
                Key("L1", "left", 0, 0, "index", 1.0),
                Key("L2", "left", 0, 1, "middle", 2.0),
                Key("R1", "right", 0, 0, "index", 1.0),
                Key("R2", "right", 0, 1, "middle", 2.0),
            ),
        )
        alphabet = make_alphabet("xyzw")
        rng = random.Random(73)
        for _ in range(120):
            text = "".join(rng.choice("xyzw .") for _ in range(rng.randrange(0, 160)))
            mapped = rng.sample("xyzw", rng.randrange(1, 5))
            keys = iter(["L1", "L2", "R1", "R2"])
            mapping = {sym: next(keys) for sym in mapped}
            hands = {sym: geometry.hand_of(key) for sym, key in mapping.items()}
            stream = stream_from_texts([text], alphabet)
            report = evaluate(Layout("t", geometry, mapping), stream)
            expected = evaluation_oracle(stream.events, hands)
            assert report.hand_switching == expected["hand_switching"]
            assert report.left_load == expected["left_load"]
            assert report.right_load == expected["right_load"]
            assert report.undetermined == expected["undetermined"]
            assert (
                report.left_load + report.right_load + report.undetermined
                == stream.total_symbols
            )

        # (c): two identical end-to-end runs produce byte-identical files
        corpus = tmp_path / "corpus.txt"
        corpus.write_text(PARTITION_CORPUS, encoding="utf-8")
        alphabet_file = tmp_path / "abcdef.txt"
        alphabet_file.write_text("".join(f"{c}\n" for c in "abcdef"), encoding="utf-8")
        outputs = []
        for run_dir in ("one", "two"):
            out = tmp_path / run_dir
            assert cli_main([
                "optimize", "--corpus", str(corpus), "--alphabet", str(alphabet_file),
                "--out", str(out),
            ]) == 0
            assert cli_main([
                "evaluate", "--corpus", str(corpus), "--alphabet", str(alphabet_file),
                str(out / "layout.json"), "--out", str(out),
            ]) == 0
            outputs.append(out)
        for name in ("layout.json", "trace.tsv", "comparison.tsv", "comparison.txt"):
            assert (outputs[0] / name).read_bytes() == (outputs[1] / name).read_bytes()


def test_criterion_6_miner_matches_exhaustive_oracle():
    with criterion(6, "miner equals exhaustive enumeration on 50+ random databases"):
        from itertools import combinations

        started = time.perf_counter()
        rng = random.Random(79)
        for _ in range(60):
            n_items = rng.randrange(2, 9)
            n_transactions = rng.randrange(1, 13)
            db = []
            for tid in range(n_transactions):
                size = rng.randrange(1, n_items + 1)
                db.append(
                    Transaction(tid, tuple(sorted(rng.sample(range(n_items), size))))
                )
            min_count = rng.randrange(1, 5)
            levels = mine_frequent(db, min_count)
            mined = [as_pairs(level) for level in levels]
            assert mined == frequent_levels_oracle(db, min_count)
            for k in range(1, len(levels)):
                previous = {s.items for s in levels[k - 1]}
                for itemset in levels[k]:
                    for subset in combinations(itemset.items, k):
                        assert subset in previous
        assert time.perf_counter() - started < 10.0


def test_criterion_7_end_to_end_synthetic_fixture():
    with criterion(7, "six-letter fixture yields the oracle partition and placement"):
        started = time.perf_counter()
        alphabet = make_alphabet("abcdef")
        stream = stream_from_texts([PARTITION_CORPUS], alphabet)
        monograms = count_ngrams(stream, 1)
        digrams = count_ngrams(stream, 2)
        ranked = ranked_symbols(monograms, alphabet)
        partition = partition_letters(ranked, digrams, monograms)
        assert partition.right == PARTITION_RIGHT
        assert partition.left == PARTITION_LEFT

        geometry = builtin_geometry("default-3row")
        layout, unassigned = assign_positions(partition, geometry, monograms, alphabet)
        assert unassigned == ()
        for hand, symbols in (("left", partition.left), ("right", partition.right)):
            rank_one = max(symbols, key=lambda s: monograms.counts[s])
            cheapest = geometry.hand_keys(hand)[0]
            assert layout.mapping[rank_one] == cheapest.key_id
        assert time.perf_counter() - started < 1.0
