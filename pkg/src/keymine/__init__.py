"""Corpus-driven keyboard layout optimization via character association mining.

The pipeline: load a corpus into an alphabet-filtered symbol stream, count
monograms/digrams/trigrams, mine character associations, split the alphabet
across two hands with a greedy alternation-maximizing rule, place symbols on
keys by frequency against effort, and score layouts by hand switching and
load balance. ``AprioriMiner`` and ``LayoutOptimizer`` expose the pipeline
in scikit-learn style; everything they use is available as plain functions.
"""

from .apriori import (
    AssociationRule,
    ItemSet,
    Transaction,
    apriori_join,
    apriori_prune,
    count_candidates,
    encode_transactions,
    generate_L1,
    generate_rules,
    mine_frequent,
    read_transaction_file,
)
from .corpus import (
    BOUNDARY,
    Alphabet,
    SymbolStream,
    bangla_alphabet,
    load_corpus,
    parse_alphabet,
    read_alphabet,
    stream_from_texts,
)
from .errors import KeymineError
from .estimators import AprioriMiner, LayoutOptimizer
from .evaluation import EvaluationReport, compare, evaluate
from .geometry import KeyboardGeometry, builtin_geometry, read_geometry, write_geometry
from .layout import (
    HandPartition,
    Layout,
    assign_positions,
    cumulative_association,
    decide_hand,
    partition_letters,
    read_layout,
    seed_partition,
    write_layout,
)
from .ngrams import (
    NgramTable,
    count_ngrams,
    digram_metrics,
    merge_tables,
    ranked_symbols,
    top_k,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AprioriMiner",
    "AssociationRule",
    "BOUNDARY",
    "EvaluationReport",
    "HandPartition",
    "ItemSet",
    "KeyboardGeometry",
    "KeymineError",
    "Layout",
    "LayoutOptimizer",
    "NgramTable",
    "SymbolStream",
    "Transaction",
    "apriori_join",
    "apriori_prune",
    "assign_positions",
    "bangla_alphabet",
    "builtin_geometry",
    "compare",
    "count_candidates",
    "count_ngrams",
    "cumulative_association",
    "decide_hand",
    "digram_metrics",
    "encode_transactions",
    "evaluate",
    "generate_L1",
    "generate_rules",
    "load_corpus",
    "merge_tables",
    "mine_frequent",
    "parse_alphabet",
    "partition_letters",
    "ranked_symbols",
    "read_alphabet",
    "read_geometry",
    "read_layout",
    "read_transaction_file",
    "seed_partition",
    "stream_from_texts",
    "top_k",
    "write_geometry",
    "write_layout",
]
