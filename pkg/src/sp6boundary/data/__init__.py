"""Embedded tables: transcribed fixtures and the cohomology fact table."""

from __future__ import annotations

import copy
import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def _load(name: str):
    text = resources.files(__name__).joinpath(name).read_text(encoding="utf-8")
    return json.loads(text)


def load(name: str):
    """Parsed contents of a data file (a fresh copy, safe to mutate)."""
    return copy.deepcopy(_load(name))


def names() -> list[str]:
    return sorted(p.name for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))
