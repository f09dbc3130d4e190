"""Validated plat presentations of small links.

The data file stores presentations only; none of the braid words are
trusted until the test suite certifies each entry's spin-1/2 Jones
polynomial against the classical value named by its ``jones`` tag.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .braid import ColoredBraidWord, parse_word
from .errors import NotFound


@dataclass(frozen=True)
class LibraryEntry:
    name: str
    word: ColoredBraidWord
    jones_tag: str
    description: str


def _load_raw() -> dict:
    text = resources.files("platjones.data").joinpath("links.json").read_text()
    return json.loads(text)


_CACHE: dict[str, LibraryEntry] | None = None


def library_version() -> str:
    return _load_raw()["version"]


def entries() -> dict[str, LibraryEntry]:
    global _CACHE
    if _CACHE is None:
        raw = _load_raw()
        out = {}
        for name, spec in raw["links"].items():
            payload = {
                "strands": spec["strands"],
                "colors_twice": [1] * spec["strands"],
                "orient": spec["orient"],
                "word": spec["word"],
            }
            out[name] = LibraryEntry(
                name=name,
                word=parse_word(payload),
                jones_tag=spec["jones"],
                description=spec.get("description", ""),
            )
        _CACHE = out
    return _CACHE


def get(name: str) -> LibraryEntry:
    try:
        return entries()[name]
    except KeyError:
        known = ", ".join(sorted(entries()))
        raise NotFound(f"unknown library link {name!r}; known: {known}") from None


#: aliases accepted by the CLI/service
ALIASES = {
    "figure-eight": "fig8",
    "figure8": "fig8",
    "4_1": "fig8",
    "trefoil": "trefoil_right",
    "3_1": "trefoil_right",
    "hopf": "hopf_plus",
}


def resolve(name: str) -> LibraryEntry:
    return get(ALIASES.get(name, name))
