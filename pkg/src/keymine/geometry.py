"""Physical keyboard geometry: keys with hand, position, layer, and effort.

A geometry says nothing about which symbol goes where; it only prices the
keys. Two geometries ship built in: ``default-3row`` (a two-hand, three-row,
five-column board with a shift layer, home row cheapest, index and middle
fingers cheaper than pinky) and ``test-2key`` (one key per hand, for tests).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import GeometryError, MissingPathError

HANDS = ("left", "right")
LAYERS = ("base", "shift")

BUILTIN_GEOMETRIES = ("default-3row", "test-2key")


@dataclass(frozen=True)
class Key:
    key_id: str
    hand: str
    row: int
    column: int
    finger: str
    effort: float
    layer: str = "base"

    def __post_init__(self) -> None:
        if self.hand not in HANDS:
            raise GeometryError(f"key {self.key_id!r}: hand must be one of {HANDS}")
        if self.layer not in LAYERS:
            raise GeometryError(f"key {self.key_id!r}: layer must be one of {LAYERS}")
        if self.effort <= 0:
            raise GeometryError(f"key {self.key_id!r}: effort must be positive")


@dataclass(frozen=True)
class KeyboardGeometry:
    name: str
    keys: tuple[Key, ...]

    def __post_init__(self) -> None:
        by_id: dict[str, Key] = {}
        for key in self.keys:
            if key.key_id in by_id:
                raise GeometryError(f"duplicate key id {key.key_id!r}")
            by_id[key.key_id] = key
        for hand in HANDS:
            if not any(k.hand == hand and k.layer == "base" for k in self.keys):
                raise GeometryError(f"geometry {self.name!r} has no base key for the {hand} hand")
        object.__setattr__(self, "_by_id", by_id)

    def __contains__(self, key_id: object) -> bool:
        return key_id in self._by_id  # type: ignore[attr-defined]

    def key(self, key_id: str) -> Key:
        return self._by_id[key_id]  # type: ignore[attr-defined]

    def hand_of(self, key_id: str) -> str:
        return self.key(key_id).hand

    def hand_keys(self, hand: str) -> list[Key]:
        """One hand's keys in assignment order: base layer before shift,
        cheapest effort first, key id breaking ties."""
        return sorted(
            (k for k in self.keys if k.hand == hand),
            key=lambda k: (LAYERS.index(k.layer), k.effort, k.key_id),
        )


def geometry_to_dict(geometry: KeyboardGeometry) -> dict:
    return {"name": geometry.name, "keys": [asdict(k) for k in geometry.keys]}


def geometry_from_dict(data: object) -> KeyboardGeometry:
    if not isinstance(data, dict) or not isinstance(data.get("name"), str):
        raise GeometryError("geometry must be an object with a string 'name'")
    raw_keys = data.get("keys")
    if not isinstance(raw_keys, list):
        raise GeometryError("geometry must carry a 'keys' list")
    keys = []
    for raw in raw_keys:
        if not isinstance(raw, dict):
            raise GeometryError(f"geometry key entry is not an object: {raw!r}")
        try:
            keys.append(
                Key(
                    key_id=str(raw["key_id"]),
                    hand=raw["hand"],
                    row=int(raw["row"]),
                    column=int(raw["column"]),
                    finger=str(raw["finger"]),
                    effort=float(raw["effort"]),
                    layer=raw.get("layer", "base"),
                )
            )
        except KeyError as exc:
            raise GeometryError(f"geometry key entry missing field {exc}") from exc
        except (TypeError, ValueError) as exc:
            raise GeometryError(f"geometry key entry malformed: {exc}") from exc
    return KeyboardGeometry(data["name"], tuple(keys))


def read_geometry(path: str | Path) -> KeyboardGeometry:
    path = Path(path)
    if not path.exists():
        raise MissingPathError(f"geometry file does not exist: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GeometryError(f"{path} is not valid JSON: {exc}") from exc
    return geometry_from_dict(data)


def format_geometry_json(geometry: KeyboardGeometry) -> str:
    return json.dumps(geometry_to_dict(geometry), ensure_ascii=False, indent=2) + "\n"


def write_geometry(geometry: KeyboardGeometry, path: str | Path) -> None:
    Path(path).write_text(format_geometry_json(geometry), encoding="utf-8", newline="\n")


@lru_cache(maxsize=None)
def builtin_geometry(name: str) -> KeyboardGeometry:
    if name not in BUILTIN_GEOMETRIES:
        raise GeometryError(
            f"unknown built-in geometry {name!r}; available: {', '.join(BUILTIN_GEOMETRIES)}"
        )
    data = resources.files(__package__).joinpath(f"data/geometries/{name}.json")
    return geometry_from_dict(json.loads(data.read_text(encoding="utf-8")))
