"""Input validation and coercion helpers shared by the estimators and CLI."""

from __future__ import annotations

from math import ceil
from os import PathLike
from pathlib import Path

from .corpus import Alphabet, bangla_alphabet, read_alphabet
from .geometry import BUILTIN_GEOMETRIES, KeyboardGeometry, builtin_geometry, read_geometry


def as_alphabet(value: Alphabet | str | PathLike | None) -> Alphabet:
    """Coerce None (built-in Bangla), an Alphabet, or a file path to an Alphabet."""
    if value is None:
        return bangla_alphabet()
    if isinstance(value, Alphabet):
        return value
    return read_alphabet(value)


def as_geometry(value: KeyboardGeometry | str | PathLike | None) -> KeyboardGeometry:
    """Coerce None (default board), a geometry, a built-in name, or a path."""
    if value is None:
        return builtin_geometry("default-3row")
    if isinstance(value, KeyboardGeometry):
        return value
    if isinstance(value, str) and value in BUILTIN_GEOMETRIES:
        return builtin_geometry(value)
    return read_geometry(value)


def check_choice(value: str, choices: tuple[str, ...], name: str) -> str:
    if value not in choices:
        raise ValueError(f"{name} must be one of {choices}, got {value!r}")
    return value


def check_percent(value: float, name: str) -> float:
    if not 0 <= value <= 100:
        raise ValueError(f"{name} must be within [0, 100], got {value}")
    return value


def resolve_min_support(value: int | float, n_transactions: int) -> int:
    """Turn a support threshold into an absolute count.

    Integers pass through (must be >= 1); floats are a fraction of the
    database, 0 < value <= 1, rounded up and never below 1.
    """
    if isinstance(value, bool):
        raise ValueError("min support must be an int count or a float fraction")
    if isinstance(value, int):
        if value < 1:
            raise ValueError(f"min support count must be at least 1, got {value}")
        return value
    if isinstance(value, float):
        if not 0 < value <= 1:
            raise ValueError(f"min support fraction must be in (0, 1], got {value}")
        return max(1, ceil(value * n_transactions))
    raise ValueError(f"min support must be an int or float, got {type(value).__name__}")
