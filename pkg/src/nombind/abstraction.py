"""Alpha-equivalence of (binders, body) pairs under the three binding modes.

Each checker is parameterized by a body relation ``rel``, a free-atom
function ``fa`` and a body action ``act``, and returns an :class:`AlphaWitness`
holding a permutation that satisfies the mode's clauses, or ``None``:

    (i)   fa(x) - as == fa(y) - bs
    (ii)  the permutation fixes every atom of fa(x) - as
    (iii) rel(pi . x, y)
    (iv)  pi . as == bs                    (LIST and SET only)

The search only visits permutations whose support lies inside the binder
atoms. Clause (ii) pins the permutation on the remaining free atoms, and atoms
fresh for both sides can be left alone.
"""
from __future__ import annotations

import enum
import itertools
import operator
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator, Sequence

from .nominal import Atom, NominalError, Permutation, act as _act, atoms, identity

Rel = Callable[[Any, Any], bool]
FreeAtoms = Callable[[Any], Iterable[Atom]]
Action = Callable[[Permutation, Any], Any]


class BindingMode(enum.Enum):
    LIST = "list"
    SET = "set"
    SET_PLUS = "set+"

    @property
    def keyword(self) -> str:
        return {"list": "binds", "set": "binds (set)", "set+": "binds (set+)"}[self.value]


class CapExceeded(NominalError):
    pass


class UniverseTooLarge(NominalError, ValueError):
    pass


@dataclass(frozen=True)
class AlphaWitness:
    permutation: Permutation


def _by_sort(xs: Iterable[Atom]) -> dict[str, list[Atom]]:
    out: dict[str, list[Atom]] = {}
    for a in sorted(set(xs)):
        out.setdefault(a.sort, []).append(a)
    return out


def _bijections(src: frozenset[Atom], dst: frozenset[Atom]) -> Iterator[dict[Atom, Atom]]:
    """Sort-respecting bijections src -> dst, in lexicographic order."""
    s, d = _by_sort(src), _by_sort(dst)
    if set(s) != set(d) or any(len(s[k]) != len(d[k]) for k in s):
        return
    sorts = sorted(s)
    for choice in itertools.product(*(itertools.permutations(d[k]) for k in sorts)):
        f = {}
        for k, images in zip(sorts, choice):
            f.update(zip(s[k], images))
        yield f


def complete(partial: dict[Atom, Atom]) -> Permutation:
    """Extend an injective partial map to a permutation with support inside
    its domain and image, by closing every open chain back to its start."""
    dom = set(partial)
    full = dict(partial)
    for start in dom - set(partial.values()):
        cur = start
        while cur in dom:
            cur = partial[cur]
        full[cur] = start
    return Permutation(full)


def _fixes(perm: Permutation, xs: frozenset[Atom]) -> bool:
    return not (perm.support & xs)


def _check_cap(n: int, cap: int | None):
    if cap is not None and n > cap:
        raise CapExceeded(f"{n} bound atoms exceed the enumeration cap of {cap}")


def alpha_set(as_: Iterable[Atom], x: Any, bs: Iterable[Atom], y: Any,
              rel: Rel = operator.eq, fa: FreeAtoms = atoms, act: Action = _act,
              cap: int | None = None) -> AlphaWitness | None:
    as_, bs = frozenset(as_), frozenset(bs)
    free = frozenset(fa(x)) - as_
    if free != frozenset(fa(y)) - bs or len(as_) != len(bs):
        return None
    _check_cap(len(as_), cap)
    for f in _bijections(as_, bs):
        pi = complete(f)
        if _fixes(pi, free) and rel(act(pi, x), y):
            return AlphaWitness(pi)
    return None


def alpha_list(as_: Sequence[Atom], x: Any, bs: Sequence[Atom], y: Any,
               rel: Rel = operator.eq, fa: FreeAtoms = atoms, act: Action = _act,
               cap: int | None = None) -> AlphaWitness | None:
    as_, bs = tuple(as_), tuple(bs)
    free = frozenset(fa(x)) - frozenset(as_)
    if free != frozenset(fa(y)) - frozenset(bs) or len(as_) != len(bs):
        return None
    f: dict[Atom, Atom] = {}
    for a, b in zip(as_, bs):
        if a.sort != b.sort or f.setdefault(a, b) != b:
            return None
    if len(set(f.values())) != len(f):
        return None
    pi = complete(f)
    if _fixes(pi, free) and rel(act(pi, x), y):
        return AlphaWitness(pi)
    return None


def alpha_set_plus(as_: Iterable[Atom], x: Any, bs: Iterable[Atom], y: Any,
                   rel: Rel = operator.eq, fa: FreeAtoms = atoms, act: Action = _act,
                   cap: int | None = None) -> AlphaWitness | None:
    as_, bs = frozenset(as_), frozenset(bs)
    fx, fy = frozenset(fa(x)), frozenset(fa(y))
    free = fx - as_
    if free != fy - bs:
        return None
    bound_x, bound_y = fx & as_, fy & bs
    if len(bound_x) != len(bound_y):
        return None
    _check_cap(len(bound_x), cap)
    for f in _bijections(bound_x, bound_y):
        pi = complete(f)
        if _fixes(pi, free) and rel(act(pi, x), y):
            return AlphaWitness(pi)
    return None


CHECKERS = {
    BindingMode.LIST: alpha_list,
    BindingMode.SET: alpha_set,
    BindingMode.SET_PLUS: alpha_set_plus,
}


def check(mode: BindingMode, as_, x, bs, y, rel: Rel = operator.eq,
          fa: FreeAtoms = atoms, act: Action = _act, cap: int | None = None):
    return CHECKERS[mode](as_, x, bs, y, rel, fa, act, cap)


@lru_cache(maxsize=32)
def _all_permutations(universe: frozenset[Atom]) -> tuple[Permutation, ...]:
    groups = _by_sort(universe)
    sorts = sorted(groups)
    out = []
    for choice in itertools.product(*(itertools.permutations(groups[k]) for k in sorts)):
        f = {}
        for k, images in zip(sorts, choice):
            f.update(zip(groups[k], images))
        out.append(Permutation(f))
    return tuple(out)


def brute_force_alpha(mode: BindingMode, as_, x, bs, y, rel: Rel = operator.eq,
                      fa: FreeAtoms = atoms, act: Action = _act,
                      universe: Iterable[Atom] = (), cap: int = 8) -> AlphaWitness | None:
    """Test oracle: try every permutation with support inside ``universe``."""
    universe = frozenset(universe)
    if len(universe) > cap:
        raise UniverseTooLarge(f"universe of {len(universe)} atoms exceeds cap {cap}")
    if mode is BindingMode.LIST:
        as_, bs = tuple(as_), tuple(bs)
    else:
        as_, bs = frozenset(as_), frozenset(bs)
    free = frozenset(fa(x)) - frozenset(as_)
    if free != frozenset(fa(y)) - frozenset(bs):
        return None
    for pi in _all_permutations(universe):
        if mode is not BindingMode.SET_PLUS and _act(pi, as_) != bs:
            continue
        if any(pi(a) != a for a in free):
            continue
        if rel(act(pi, x), y):
            return AlphaWitness(pi)
    return None


@dataclass(frozen=True, eq=False)
class Abstraction:
    """A body with some of its atoms bound; ``==`` is alpha-equivalence."""

    mode: BindingMode
    binders: Any
    body: Any
    fa: FreeAtoms = field(default=atoms, repr=False)
    rel: Rel = field(default=operator.eq, repr=False)

    def __post_init__(self):
        if self.mode is BindingMode.LIST:
            object.__setattr__(self, "binders", tuple(self.binders))
        else:
            object.__setattr__(self, "binders", frozenset(self.binders))

    def witness(self, other: Abstraction) -> AlphaWitness | None:
        if self.mode is not other.mode:
            return None
        return check(self.mode, self.binders, self.body, other.binders, other.body,
                     self.rel, self.fa)

    def __eq__(self, other):
        if not isinstance(other, Abstraction):
            return NotImplemented
        return self.witness(other) is not None

    def __hash__(self):
        return hash((self.mode, abs_supp(self)))

    def permute(self, perm: Permutation) -> Abstraction:
        return Abstraction(self.mode, _act(perm, self.binders), _act(perm, self.body),
                           self.fa, self.rel)

    def atoms(self) -> frozenset[Atom]:
        return frozenset(self.binders) | atoms(self.body)


def abs_supp(a: Abstraction, fa: FreeAtoms | None = None) -> frozenset[Atom]:
    fa = fa or a.fa
    return frozenset(fa(a.body)) - frozenset(a.binders)


__all__ = [
    "AlphaWitness", "Abstraction", "BindingMode", "CapExceeded", "UniverseTooLarge",
    "abs_supp", "alpha_list", "alpha_set", "alpha_set_plus", "brute_force_alpha",
    "check", "complete",
]
