"""Built-in test algebras, also shipped as JSON files under ``corpus/``."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .algebra import GradedLieAlgebra
from .formats import FormatError, parse_algebra

NAMES = ("ab2_f2", "sol2_f2", "sol2_q", "heis3_f2", "sl2_f5", "dsum_f2")


def load(name: str) -> GradedLieAlgebra:
    if name not in NAMES:
        raise KeyError(f"unknown corpus algebra {name!r}; choose from {', '.join(NAMES)}")
    text = resources.files(__package__).joinpath("corpus", f"{name}.json").read_text(encoding="utf-8")
    return parse_algebra(text)


def default_corpus() -> list[GradedLieAlgebra]:
    return [load(n) for n in NAMES]


def corpus_text(name: str) -> str:
    return resources.files(__package__).joinpath("corpus", f"{name}.json").read_text(encoding="utf-8")


def load_dir(path: str | Path, allow_invalid: bool = False) -> list[GradedLieAlgebra]:
    files = sorted(Path(path).glob("*.json"))
    if not files:
        raise FormatError(f"no corpus entries in {path}")
    out = []
    for f in files:
        try:
            out.append(parse_algebra(f.read_text(encoding="utf-8"), allow_invalid))
        except FormatError as exc:
            raise FormatError(f"{f.name}: {exc}") from None
    return out
