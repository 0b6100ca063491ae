"""The named corpus shipped with the package as ``.alg`` files."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .algebra import FiniteAlgebra
from .algfile import read_alg

NAMES = ("B2", "B4", "B8", "MO2")


def corpus_dir() -> Path:
    return Path(str(resources.files("omlab") / "corpus"))


def load_corpus() -> list[FiniteAlgebra]:
    return [read_alg(corpus_dir() / f"{name}.alg") for name in NAMES]


def load(name: str) -> FiniteAlgebra:
    return read_alg(corpus_dir() / f"{name}.alg")


def load_schema(name: str) -> dict:
    import json

    path = resources.files("omlab") / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))
