"""Bundled example specs."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

VALID = ("lam", "tysch", "letpat", "letrec", "foo", "misc", "bnexp", "corehaskell")
INVALID = {"bnexp_bad": "R5", "baz1": "R3", "baz2": "R3", "foo_r1": "R1"}


def path(name: str) -> Path:
    return Path(str(resources.files(__name__) / f"{name}.spec"))


def text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")
