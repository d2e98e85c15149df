"""Corpus ingestion: alphabets, Unicode normalization, and symbol streams.

A corpus is reduced to a stream of single-codepoint symbols drawn from a
fixed alphabet. Everything that is not in the alphabet (spaces, punctuation,
digits, foreign script) acts as a *boundary*: counting never pairs symbols
across one, because such a pair is not a typed adjacency.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from .errors import AlphabetError, CorpusDecodeError, MissingPathError


class Boundary:
    """Singleton event separating typed runs in a symbol stream."""

    _instance = None

    def __new__(cls) -> "Boundary":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BOUNDARY"


BOUNDARY = Boundary()


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of single-codepoint symbols eligible for key placement.

    The ordering is total and stable: downstream frequency ties are broken
    by position in this alphabet, so two runs over the same alphabet always
    rank symbols identically.
    """

    symbols: tuple[str, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if not self.symbols:
            raise AlphabetError("alphabet has no symbols")
        index: dict[str, int] = {}
        for pos, sym in enumerate(self.symbols):
            if len(sym) != 1:
                raise AlphabetError(f"alphabet entry {sym!r} is not a single code point")
            if sym in index:
                raise AlphabetError(f"duplicate alphabet entry {sym!r}")
            index[sym] = pos
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index  # type: ignore[attr-defined]

    def index(self, symbol: str) -> int:
        """Position of ``symbol`` in the alphabet; raises KeyError if absent."""
        return self._index[symbol]  # type: ignore[attr-defined]

    def sort_key(self, gram: str) -> tuple[int, ...]:
        """Alphabet-order sort key for a gram (any length)."""
        return tuple(self._index[ch] for ch in gram)  # type: ignore[attr-defined]


@dataclass(frozen=True)
class SymbolStream:
    """Alphabet-filtered symbols with boundaries between typed runs.

    Stored as the tuple of boundary-free runs (``segments``); a boundary is
    implicit between consecutive runs. This canonical form cannot contain
    two consecutive boundaries and never starts or ends with one.
    """

    segments: tuple[str, ...]
    source: str = ""

    def __post_init__(self) -> None:
        for seg in self.segments:
            if not seg:
                raise ValueError("symbol stream contains an empty segment")

    @property
    def total_symbols(self) -> int:
        return sum(len(seg) for seg in self.segments)

    @property
    def events(self) -> tuple[object, ...]:
        """The stream as explicit symbol and BOUNDARY events."""
        out: list[object] = []
        for seg in self.segments:
            if out:
                out.append(BOUNDARY)
            out.extend(seg)
        return tuple(out)

    def render(self, separator: str = " ") -> str:
        """Flatten back to text with a single separator at each boundary.

        Round-trips exactly as long as ``separator`` is not in the alphabet
        the stream was filtered with.
        """
        return separator.join(self.segments)


def _typed_runs(text: str, alphabet: Alphabet) -> Iterator[str]:
    run: list[str] = []
    for ch in text:
        if ch in alphabet:
            run.append(ch)
        elif run:
            yield "".join(run)
            run.clear()
    if run:
        yield "".join(run)


def stream_from_texts(
    texts: Iterable[str],
    alphabet: Alphabet,
    *,
    normalize: bool = True,
    source: str = "",
) -> SymbolStream:
    """Filter in-memory documents into one stream; documents never join.

    With ``normalize`` on (the default) each document is canonically
    composed (NFC) before filtering, so decomposed and precomposed spellings
    count as the same symbol.
    """
    segments: list[str] = []
    for text in texts:
        if normalize:
            text = unicodedata.normalize("NFC", text)
        segments.extend(_typed_runs(text, alphabet))
    return SymbolStream(tuple(segments), source)


def _expand_paths(paths: Iterable[str | Path]) -> list[Path]:
    # Command-line order is preserved; directory contents are sorted by name
    # so repeated runs see files in the same order.
    files: list[Path] = []
    for raw in paths:
        path = Path(raw)
        if not path.exists():
            raise MissingPathError(f"corpus path does not exist: {path}")
        if path.is_dir():
            files.extend(sorted(p for p in path.iterdir() if p.is_file()))
        else:
            files.append(path)
    return files


def load_corpus(
    paths: Iterable[str | Path],
    alphabet: Alphabet,
    *,
    normalize: bool = True,
) -> SymbolStream:
    """Load UTF-8 text files (or directories of them) into one symbol stream.

    Files are separated by a boundary. Invalid UTF-8 is an error, never
    silently skipped.
    """
    files = _expand_paths(paths)
    texts: list[str] = []
    for path in files:
        try:
            texts.append(path.read_text(encoding="utf-8"))
        except UnicodeDecodeError as exc:
            raise CorpusDecodeError(f"{path} is not valid UTF-8: {exc}") from exc
    source = ", ".join(str(p) for p in files)
    return stream_from_texts(texts, alphabet, normalize=normalize, source=source)


def parse_alphabet(text: str, name: str = "") -> Alphabet:
    """Parse the one-symbol-per-line alphabet format.

    Lines starting with ``#`` are comments and blank lines are skipped;
    order is significant. Entries are NFC-composed and must be a single
    code point after composition.
    """
    symbols: list[str] = []
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        symbols.append(unicodedata.normalize("NFC", line))
    return Alphabet(tuple(symbols), name)


def read_alphabet(path: str | Path, name: str | None = None) -> Alphabet:
    path = Path(path)
    if not path.exists():
        raise MissingPathError(f"alphabet file does not exist: {path}")
    return parse_alphabet(path.read_text(encoding="utf-8"), name or path.stem)


@lru_cache(maxsize=1)
def bangla_alphabet() -> Alphabet:
    """The built-in Bangla alphabet (letters, vowel signs, combining signs).

    Membership is fixed by the packaged data file so results are
    reproducible; digits and punctuation are excluded.
    """
    data = resources.files(__package__).joinpath("data/bangla_alphabet.txt")
    return parse_alphabet(data.read_text(encoding="utf-8"), "bangla")
