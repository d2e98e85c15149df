"""Exception types raised across the package."""


class KeymineError(Exception):
    """Base class for all errors raised by keymine."""


class MissingPathError(KeymineError):
    """A corpus path, alphabet file, or layout file does not exist."""


class CorpusDecodeError(KeymineError):
    """A corpus file contains byte sequences that are not valid UTF-8."""


class AlphabetError(KeymineError):
    """An alphabet is empty, has duplicate symbols, or has malformed entries."""


class AbsentGramError(KeymineError):
    """A requested n-gram or symbol is not present in its table."""


class EmptyCorpusError(KeymineError):
    """A metric needs at least one counted n-gram but the table is empty."""


class ItemsetSizeError(KeymineError):
    """Itemsets passed to a level-wise mining step do not share one size."""


class RuleConsistencyError(KeymineError):
    """Mined frequent-itemset levels are missing a subset they must contain."""


class InsufficientAlphabetError(KeymineError):
    """Fewer than four ranked symbols are available to seed a partition."""


class GeometryError(KeymineError):
    """A keyboard geometry is malformed or lacks keys where they are needed."""


class LayoutFileError(KeymineError):
    """A layout file is malformed, reuses a key, or names an unknown key."""
