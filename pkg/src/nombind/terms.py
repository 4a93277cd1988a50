"""Raw terms: a constructor name applied to atoms, atom collections,
sub-terms and primitive literals.

Arguments use plain Python carriers: :class:`Atom`, ``frozenset`` of atoms,
``tuple`` of atoms, :class:`Term`, ``str`` and ``int``.
"""
from __future__ import annotations

import json
from typing import Any

from .nominal import Atom, Permutation, act, atoms


class Term:
    __slots__ = ("ctor", "args", "_hash", "_atoms")

    def __init__(self, ctor: str, args=()):
        self.ctor = ctor
        self.args = tuple(args)
        self._hash = hash((ctor, self.args))
        self._atoms = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        return self._hash == other._hash and self.ctor == other.ctor and self.args == other.args

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Term({self.ctor!r}, {self.args!r})"

    def __str__(self):
        return format_term(self)

    def permute(self, perm: Permutation) -> Term:
        if not perm or not (self.atoms() & perm.support):
            return self
        return Term(self.ctor, [act(perm, a) for a in self.args])

    def atoms(self) -> frozenset[Atom]:
        if self._atoms is None:
            self._atoms = atoms(self.args)
        return self._atoms

    def size(self) -> int:
        return 1 + sum(a.size() for a in self.args if isinstance(a, Term))


def format_atom(a: Atom, default_sort: str | None = None) -> str:
    return a.name if a.sort == default_sort else str(a)


def format_value(v: Any, default_sort: str | None = None) -> str:
    if isinstance(v, Term):
        return format_term(v, default_sort)
    if isinstance(v, Atom):
        return format_atom(v, default_sort)
    if isinstance(v, frozenset):
        return "{" + ", ".join(format_atom(a, default_sort) for a in sorted(v)) + "}"
    if isinstance(v, tuple):
        return "[" + ", ".join(format_atom(a, default_sort) for a in v) + "]"
    if isinstance(v, str):
        return json.dumps(v)
    return str(v)


def format_term(t: Term, default_sort: str | None = None) -> str:
    """Prefix form ``(Ctor arg ...)``; nullary constructors print bare.

    Atoms of ``default_sort`` print without their sort prefix.
    """
    if not t.args:
        return t.ctor
    return "(" + " ".join([t.ctor] + [format_value(a, default_sort) for a in t.args]) + ")"
