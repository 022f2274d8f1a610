"""Bundled test algebras, one JSON file each."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..algebra_file import AlgebraFile, loads

NAMES = (
    "abelian3",
    "heisenberg3",
    "heisenberg5",
    "aff1",
    "r3",
    "e2",
    "sl2",
    "so3",
    "sl2_plus_q",
    "sa2",
    "sl2_h3",
)


def path(name: str) -> Path:
    return Path(str(resources.files(__name__).joinpath(f"{name}.json")))


def load(name: str) -> AlgebraFile:
    text = resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8")
    return loads(text, name)


def catalog() -> list[AlgebraFile]:
    return [load(n) for n in NAMES]


def resolve(arg: str) -> Path | None:
    """Map ``catalog/sl2.json``, ``sl2.json`` or ``sl2`` to a bundled file."""
    stem = Path(arg).name
    if stem.endswith(".json"):
        stem = stem[:-5]
    return path(stem) if stem in NAMES else None
