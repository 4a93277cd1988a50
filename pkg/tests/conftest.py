from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import strategies as st

from nombind import corpus
from nombind.nominal import Atom, swaps
from nombind.semantics import AlphaContext
from nombind.speclang import parse_spec, parse_term

NAMES = "abcdxyz"


def name(n: str) -> Atom:
    return Atom("name", n)


@lru_cache(maxsize=None)
def load(spec_name: str) -> AlphaContext:
    return AlphaContext(parse_spec(corpus.text(spec_name)))


def term(spec_name: str, ty: str, text: str):
    return parse_term(load(spec_name).spec, ty, text)


atoms_st = st.builds(Atom, st.sampled_from(["name", "tvar"]), st.sampled_from(list(NAMES)))
names_st = st.builds(Atom, st.just("name"), st.sampled_from(list(NAMES)))
perms_st = st.lists(st.tuples(names_st, names_st), max_size=4).map(swaps)
values_st = st.recursive(
    names_st | st.integers(0, 3) | st.text(max_size=2),
    lambda inner: st.lists(inner, max_size=3).map(tuple) | st.frozensets(names_st, max_size=3),
    max_leaves=8,
)


@pytest.fixture
def ctx():
    return load
