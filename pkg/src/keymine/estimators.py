"""Scikit-learn style estimators wrapping the mining and layout pipeline.

These follow the usual conventions: construction only stores parameters,
``fit`` validates inputs and exposes its results as trailing-underscore
attributes, and fitted estimators can be cloned and re-fit.
"""

from __future__ import annotations

from typing import Iterable

from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from . import apriori
from .evaluation import EvaluationReport, compare, evaluate
from .layout import (
    ASSOCIATION_MODES,
    DECISION_POLICIES,
    assign_positions,
    partition_letters,
)
from .corpus import stream_from_texts
from .ngrams import count_ngrams, ranked_symbols
from .validation import (
    as_alphabet,
    as_geometry,
    check_choice,
    check_percent,
    resolve_min_support,
)


def _documents(X) -> list[str]:
    return [X] if isinstance(X, str) else list(X)


class AprioriMiner(BaseEstimator):
    """Frequent-itemset and association-rule miner with a fit interface.

    Parameters
    ----------
    min_support : int or float, default=2
        Absolute occurrence count (int >= 1), or fraction of transactions
        (0 < float <= 1) converted to a count by rounding up.
    min_confidence : float, default=0.0
        Confidence threshold for emitted rules, in percent.

    Attributes
    ----------
    n_transactions_ : number of fitted transactions.
    min_support_count_ : the resolved absolute count.
    vocabulary_ : dict mapping item label to its dense integer id.
    levels_ : frequent levels in id space (lists of ``ItemSet``).
    frequent_itemsets_ : flat list of (label tuple, count) in level order.
    rules_ : ``AssociationRule`` list with label tuples on both sides.
    """

    def __init__(self, min_support: int | float = 2, min_confidence: float = 0.0):
        self.min_support = min_support
        self.min_confidence = min_confidence

    def fit(self, X: Iterable[Iterable[str]], y=None) -> "AprioriMiner":
        check_percent(self.min_confidence, "min_confidence")
        db, vocabulary = apriori.encode_transactions(X)
        min_count = resolve_min_support(self.min_support, len(db))
        levels = apriori.mine_frequent(db, min_count)
        rules = (
            apriori.generate_rules(levels, len(db), self.min_confidence) if db else []
        )
        self.n_transactions_ = len(db)
        self.min_support_count_ = min_count
        self.vocabulary_ = {label: i for i, label in enumerate(vocabulary)}
        self.levels_ = levels
        self.frequent_itemsets_ = [
            (apriori.decode_items(s.items, vocabulary), s.support_count)
            for level in levels
            for s in level
        ]
        self.rules_ = [
            apriori.AssociationRule(
                antecedent=apriori.decode_items(r.antecedent, vocabulary),
                consequent=apriori.decode_items(r.consequent, vocabulary),
                support=r.support,
                confidence=r.confidence,
            )
            for r in rules
        ]
        return self


class LayoutOptimizer(BaseEstimator):
    """Fit a two-hand keyboard layout to a corpus of documents.

    ``X`` is an iterable of text documents (a single string counts as one
    document); documents never contribute cross-document adjacencies.

    Parameters
    ----------
    alphabet : None, Alphabet, or path; None uses the built-in Bangla set.
    geometry : None, KeyboardGeometry, built-in name, or path; None uses
        the default three-row board.
    normalize : bool, default=True. NFC-compose documents before filtering.
    association : "directed" (reference rule) or "symmetric".
    policy : "strict" (reference rule) or "majority".
    name : name given to the fitted layout.

    Attributes
    ----------
    alphabet_, geometry_ : the resolved inputs.
    monograms_, digrams_, trigrams_ : fitted n-gram tables.
    ranking_ : symbols in descending frequency order.
    partition_ : the fitted ``HandPartition`` with its decision trace.
    layout_ : the fitted ``Layout``.
    unassigned_ : symbols that did not fit on the geometry.
    """

    def __init__(
        self,
        alphabet=None,
        geometry=None,
        normalize: bool = True,
        association: str = "directed",
        policy: str = "strict",
        name: str = "optimized",
    ):
        self.alphabet = alphabet
        self.geometry = geometry
        self.normalize = normalize
        self.association = association
        self.policy = policy
        self.name = name

    def fit(self, X: Iterable[str] | str, y=None) -> "LayoutOptimizer":
        check_choice(self.association, ASSOCIATION_MODES, "association")
        check_choice(self.policy, DECISION_POLICIES, "policy")
        alphabet = as_alphabet(self.alphabet)
        geometry = as_geometry(self.geometry)
        stream = self._stream(_documents(X), alphabet)
        monograms = count_ngrams(stream, 1)
        digrams = count_ngrams(stream, 2)
        ranking = ranked_symbols(monograms, alphabet)
        partition = partition_letters(
            ranking, digrams, monograms, mode=self.association, policy=self.policy
        )
        layout, unassigned = assign_positions(
            partition, geometry, monograms, alphabet, name=self.name
        )
        self.alphabet_ = alphabet
        self.geometry_ = geometry
        self.monograms_ = monograms
        self.digrams_ = digrams
        self.trigrams_ = count_ngrams(stream, 3)
        self.ranking_ = ranking
        self.partition_ = partition
        self.layout_ = layout
        self.unassigned_ = unassigned
        return self

    def _stream(self, documents, alphabet):
        return stream_from_texts(
            documents, alphabet, normalize=self.normalize, source="documents"
        )

    def _check_fitted(self) -> None:
        if not hasattr(self, "layout_"):
            raise NotFittedError(
                "This LayoutOptimizer is not fitted yet; call fit first."
            )

    def evaluate(self, X: Iterable[str] | str) -> EvaluationReport:
        """Score the fitted layout against new documents."""
        self._check_fitted()
        return evaluate(self.layout_, self._stream(_documents(X), self.alphabet_))

    def score(self, X: Iterable[str] | str, y=None) -> float:
        """Hand-switching rate of the fitted layout on ``X`` (higher is better)."""
        report = self.evaluate(X)
        rows = compare([report])
        rate = rows[0].switching_rate
        return 0.0 if rate is None else rate
